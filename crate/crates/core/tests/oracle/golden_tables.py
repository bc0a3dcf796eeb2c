"""Emit golden coset tables and Schreier bases for the kernels K1, K2.

Uses only oracle.py. Tables follow the JSON layout of the crate's coset
table documents: states numbered in breadth-first shortlex discovery order,
one permutation per generator.

Usage:
  python3 golden_tables.py > ../fixtures/golden_tables.json
"""
import json

from oracle import KernelSubgroup, fmt, FREE_NAMES, SURFACE_NAMES, closure_order


def doc(group, names, k):
    perms = [[k.step(c, g) for c in range(k.index())] for g in range(1, len(names) + 1)]
    return {
        "table": {
            "group": group,
            "generators": list(names),
            "states": k.index(),
            "base": 0,
            "permutations": perms,
        },
        "transversal": [fmt(k.rep[c], names) for c in range(k.index())],
        "schreier": [fmt(w, names) for (_, _, w) in k.gens],
    }


out = {}
for group, names in (("free2", FREE_NAMES), ("genus2", SURFACE_NAMES)):
    pad = [(0, 0)] * (len(names) - 2)
    out[group + "_K1"] = doc(group, names, KernelSubgroup([(1, 0), (0, 1)] + pad, (2, 3)))
    out[group + "_K2"] = doc(group, names, KernelSubgroup([(0, 1), (1, 0)] + pad, (2, 3)))
out["free2_K1_cap_K2_index"] = closure_order([(1, 0, 0, 1), (0, 1, 1, 0)], (2, 3, 2, 3))
print(json.dumps(out, indent=1))
