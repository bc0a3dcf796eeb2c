"""Emit a GAP program producing the free-group fixtures.

The GAP program builds psi: K1 -> K2 on GAP's own kernel bases (K1.1 = A^-2,
K2.2 = A^3), then prints
  * psi on this crate's shortlex Schreier generators of K1 and psi^-1 on those of K2,
  * the gamma-word output at B*A*B^-1*A^-1 for that psi and for the "auto" psi
    that pairs the shortlex bases in order (A^2 -> A^3).

Usage:
  python3 free_gap.py > /tmp/free.g
  gap -q -A /tmp/free.g
"""
from oracle import KernelSubgroup, fmt, FREE_NAMES

k1 = KernelSubgroup([(1, 0), (0, 1)], (2, 3))
k2 = KernelSubgroup([(0, 1), (1, 0)], (2, 3))


def gap_word(w):
    if not w:
        return "One(f)"
    return "*".join(("f.%d" % x) if x > 0 else ("f.%d^-1" % -x) for x in w)


def auto_targets():
    a2 = [i for i, (_, _, w) in enumerate(k1.gens) if w == [1, 1]]
    a3 = [i for i, (_, _, w) in enumerate(k2.gens) if w == [1, 1, 1]]
    assert len(a2) == 1 and len(a3) == 1
    rest1 = [i for i in range(len(k1.gens)) if i != a2[0]]
    rest2 = [j for j in range(len(k2.gens)) if j != a3[0]]
    target = {a2[0]: a3[0]}
    target.update(dict(zip(rest1, rest2)))
    return [target[i] for i in range(len(k1.gens))]


ours1 = "[" + ", ".join(gap_word(w) for (_, _, w) in k1.gens) + "]"
ours2 = "[" + ", ".join(gap_word(w) for (_, _, w) in k2.gens) + "]"
auto_imgs = "[" + ", ".join(gap_word(k2.gens[j][2]) for j in auto_targets()) + "]"

print("""
f := FreeGroup("A", "B");;
Q := DirectProduct(CyclicGroup(2), CyclicGroup(3));;
phi := GroupHomomorphismByImages(f, f, [f.1, f.2], [f.1, f.1*f.2*f.1^-1]);;
phi2 := Inverse(phi);;
pi1 := GroupHomomorphismByImages(f, Q, [f.1, f.2], [Q.1, Q.2]);;
pi2 := GroupHomomorphismByImages(f, Q, [f.1, f.2], [Q.2, Q.1]);;
K1 := Kernel(pi1);; K2 := Kernel(pi2);;
GeneratorsOfGroup(K1);; GeneratorsOfGroup(K2);;
if K1.1 <> f.1^-2 or K2.2 <> f.1^3 then Error("unexpected kernel bases"); fi;
psi := GroupHomomorphismByImages(K1, K2, GeneratorsOfGroup(K1),
    [K2.2^-1, K2.5, K2.3, K2.4, K2.6, K2.1, K2.7]);;
ours1 := %s;;
ours2 := %s;;
auto := GroupHomomorphismByImages(Subgroup(f, ours1), Subgroup(f, ours2), ours1, %s);;
gamma := function(map, w)
  local inv, s;
  inv := InverseGeneralMapping(map);
  for s in [phi2, inv, phi, map, phi2, inv, phi, map, phi2] do
    w := Image(s, w);
  od;
  return w;
end;;
psi2 := InverseGeneralMapping(psi);;
Print("IMAGES ", List(ours1, w -> Image(psi, w)), "\\n");
Print("INVERSE_IMAGES ", List(ours2, w -> Image(psi2, w)), "\\n");
Print("PAPER_WORD10 ", gamma(psi, f.2*f.1*f.2^-1*f.1^-1), "\\n");
Print("AUTO_WORD10 ", gamma(auto, f.2*f.1*f.2^-1*f.1^-1), "\\n");
QUIT;
""" % (ours1, ours2, auto_imgs))
