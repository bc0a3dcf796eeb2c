//! Baumslag–Solitar groups `BS(m,n) = ⟨a, b | a·bᵐ·a⁻¹ = bⁿ⟩` in the
//! commensurator, and the kernel witness for `BS(2,3)`.
//!
//! `φ` is conjugation by `A`. `ψ` maps the kernel of `π₁` (`A ↦ (1,0)`,
//! `B ↦ (0,1)` in `Z/m × Z/n`, any other generators to zero) onto the kernel
//! of `π₂` (`A ↦ (0,1)`, `B ↦ (1,0)`) and sends `Aᵐ` to `Aⁿ`. Then
//! `a ↦ ψ, b ↦ φ` respects the defining relation.

use thiserror::Error;

use crate::iso::SubgroupIso;
use crate::subgroups::{CosetTable, FiniteAbelianTarget, SchreierData};
use crate::words::{GroupPresentation, Word};

use super::{CommError, Commensurator};

/// The pair `(ψ, φ)` with the relation already verified.
#[derive(Clone, Debug)]
pub struct BsPair {
    pub m: u32,
    pub n: u32,
    pub psi: Commensurator,
    pub phi: Commensurator,
}

impl BsPair {
    /// `ψ ∘ φᵐ ∘ ψ⁻¹ ∘ φ⁻ⁿ`.
    pub fn relator(&self) -> Result<Commensurator, CommError> {
        let left = self.psi.compose(&self.phi.power(self.m as i64)?)?;
        left.compose(&self.psi.inverse())?.compose(&self.phi.power(-(self.n as i64))?)
    }

    /// Letter list `a ↦ ψ`, `b ↦ φ` for word problems.
    pub fn letters(&self) -> Vec<(String, Commensurator)> {
        vec![("a".into(), self.psi.clone()), ("b".into(), self.phi.clone())]
    }
}

/// Kernels of `π₁` and `π₂` for the given parameters.
pub fn bs_kernels(group: &GroupPresentation, m: u32, n: u32) -> Result<(CosetTable, CosetTable), CommError> {
    let mk = |a: [i64; 2], b: [i64; 2]| -> Result<CosetTable, CommError> {
        let mut images = vec![a.to_vec(), b.to_vec()];
        images.resize(group.rank(), vec![0, 0]);
        let target = FiniteAbelianTarget::new(vec![m, n], images).map_err(crate::iso::IsoError::from)?;
        Ok(CosetTable::kernel(group, &target).map_err(crate::iso::IsoError::from)?)
    };
    Ok((mk([1, 0], [0, 1])?, mk([0, 1], [1, 0])?))
}

/// Builds `(ψ, φ)`. Without `iso`, a free group gets the automatic `ψ`:
/// the Schreier generator `Aᵐ` of the first kernel goes to the generator `Aⁿ`
/// of the second, and the remaining generators are paired in order.
pub fn build_bs_pair(group: &GroupPresentation, m: u32, n: u32, iso: Option<SubgroupIso>) -> Result<BsPair, CommError> {
    if m == 0 || n == 0 {
        return Err(CommError::BadParameters);
    }
    let psi = match iso {
        Some(iso) => iso,
        None if group.is_free() => auto_psi(group, m, n)?,
        None => return Err(CommError::MissingIsoData),
    };
    if psi.group() != group {
        return Err(CommError::GroupMismatch);
    }
    let a = group.parse("A")?;
    let pair = BsPair { m, n, psi: Commensurator::from_iso(psi), phi: Commensurator::inner(group, &a) };
    if !pair.relator()?.is_identity() {
        return Err(CommError::Relation { m, n });
    }
    Ok(pair)
}

fn auto_psi(group: &GroupPresentation, m: u32, n: u32) -> Result<SubgroupIso, CommError> {
    let (k1, k2) = bs_kernels(group, m, n)?;
    let dom = SchreierData::new(&k1);
    let cod = SchreierData::new(&k2);
    let a = Word::generator(0);
    let find = |s: &SchreierData, k: u32| -> Result<(usize, bool), CommError> {
        let target = a.pow(k as i64);
        s.generators()
            .iter()
            .position(|t| t.word == target)
            .map(|i| (i, false))
            .or_else(|| s.generators().iter().position(|t| t.word == target.inverse()).map(|i| (i, true)))
            .ok_or_else(|| CommError::NoPowerGenerator(format!("A^{k}")))
    };
    let (i, inv_i) = find(&dom, m)?;
    let (j, inv_j) = find(&cod, n)?;
    let cod_words = cod.generator_words();
    let mut rest = (0..cod.len()).filter(|&k| k != j);
    let images = (0..dom.len())
        .map(|k| {
            if k == i {
                let w = cod_words[j].clone();
                if inv_i != inv_j {
                    w.inverse()
                } else {
                    w
                }
            } else {
                cod_words[rest.next().expect("bases of equal rank")].clone()
            }
        })
        .collect();
    Ok(SubgroupIso::new(&k1, &k2, images, None)?)
}

/// Default rewrite budget for [`bs_kernel_witness_check`].
pub const DEFAULT_STEP_BUDGET: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelCheckError {
    #[error("rewriting did not finish within {0} steps")]
    Budget(usize),
}

/// Intermediate values of the kernel check, as words over `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCheck {
    pub gamma: Word,
    pub rho_gamma: Word,
    pub rho_gamma_normalized: Word,
    pub gamma_normalized: Word,
    pub steps: usize,
}

impl KernelCheck {
    /// `ρ(γ)` reduces to the identity while `γ` does not.
    pub fn passed(&self) -> bool {
        self.rho_gamma_normalized.is_empty() && !self.gamma_normalized.is_empty() && !self.gamma.is_empty()
    }
}

/// `γ = b⁻¹·a·b·a⁻¹·b⁻¹·a·b·a⁻¹·b⁻¹` in the `a, b` alphabet.
pub fn gamma() -> Word {
    GroupPresentation::bs_alphabet()
        .parse("b^-1*a*b*a^-1*b^-1*a*b*a^-1*b^-1")
        .expect("fixed word")
}

/// Rewrites with `a·b²·a⁻¹ → b³` and `a⁻¹·b³·a → b²` (and the inverted rules),
/// leftmost match first, until no rule applies.
pub fn normalize_bs23(w: &Word, budget: usize) -> Result<(Word, usize), KernelCheckError> {
    let g = GroupPresentation::bs_alphabet();
    let rules: Vec<(Word, Word)> = [("a*b^2*a^-1", "b^3"), ("a^-1*b^3*a", "b^2")]
        .iter()
        .flat_map(|(l, r)| {
            let (l, r) = (g.parse(l).expect("rule"), g.parse(r).expect("rule"));
            [(l.inverse(), r.inverse()), (l, r)]
        })
        .collect();
    let mut cur = w.clone();
    let mut steps = 0;
    loop {
        let letters = cur.letters();
        let hit = (0..letters.len()).find_map(|pos| {
            rules
                .iter()
                .find(|(lhs, _)| letters[pos..].starts_with(lhs.letters()))
                .map(|(lhs, rhs)| (pos, lhs.len(), rhs))
        });
        let Some((pos, len, rhs)) = hit else {
            return Ok((cur, steps));
        };
        if steps == budget {
            return Err(KernelCheckError::Budget(budget));
        }
        steps += 1;
        cur = Word::reduce(
            letters[..pos]
                .iter()
                .chain(rhs.letters())
                .chain(&letters[pos + len..])
                .copied(),
        );
    }
}

/// Computes `ρ(γ)` for `ρ: a ↦ a, b ↦ b²` and normalizes it and `γ`.
pub fn bs_kernel_witness_check(budget: usize) -> Result<KernelCheck, KernelCheckError> {
    let g = GroupPresentation::bs_alphabet();
    let gamma = gamma();
    let rho = [("a", g.parse("a").expect("a")), ("b", g.parse("b^2").expect("b^2"))];
    let rho_gamma = g.apply_letter_map(&rho, &gamma).expect("total map");
    let (rho_gamma_normalized, s1) = normalize_bs23(&rho_gamma, budget)?;
    let (gamma_normalized, s2) = normalize_bs23(&gamma, budget)?;
    Ok(KernelCheck { gamma, rho_gamma, rho_gamma_normalized, gamma_normalized, steps: s1 + s2 })
}
