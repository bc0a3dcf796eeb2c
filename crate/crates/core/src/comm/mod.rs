//! The commensurator group.
//!
//! A [`Commensurator`] wraps one representative isomorphism. Composition
//! follows function order: `g.compose(&h)` applies `h` first. It restricts `h`
//! to the preimage of `M = dom(g) ∩ cod(h)` and `g⁻¹` to `g(M)`, which gives
//! the composite's domain and codomain with their Schreier data; images are
//! then pushed through both maps.
//!
//! Identity testing evaluates the representative on its own domain's
//! Schreier generators. Free and surface groups have unique roots, so a map
//! that fixes a finite-index subgroup pointwise fixes every finite-index
//! subgroup it is defined on, and the choice of domain does not matter.

mod bs;
mod letters;
mod problem;

use thiserror::Error;

use crate::iso::{IsoError, SubgroupIso};
use crate::subgroups::CosetTable;
use crate::words::{GroupPresentation, Word, WordError};

pub use bs::{
    bs_kernel_witness_check, bs_kernels, build_bs_pair, gamma, normalize_bs23, BsPair, KernelCheck, KernelCheckError,
    DEFAULT_STEP_BUDGET,
};
pub use letters::{LetterDefinition, LetterSpec, LettersFile};
pub use problem::{decide_comm_word, sequential_evaluate, CommWordProblemInstance, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CommError {
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("commensurators over different groups")]
    GroupMismatch,
    #[error("step {step} (`{letter}`): word is not in the domain")]
    Domain { step: usize, letter: String },
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("the relation psi phi^{m} psi^-1 = phi^{n} fails")]
    Relation { m: u32, n: u32 },
    #[error("m and n must be positive")]
    BadParameters,
    #[error("no Schreier generator equals {0}")]
    NoPowerGenerator(String),
    #[error("isomorphism data is required for groups with relators")]
    MissingIsoData,
    #[error("letters file: {0}")]
    Letters(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commensurator {
    rep: SubgroupIso,
}

impl Commensurator {
    pub fn from_iso(rep: SubgroupIso) -> Self {
        Commensurator { rep }
    }

    pub fn rep(&self) -> &SubgroupIso {
        &self.rep
    }

    pub fn group(&self) -> &GroupPresentation {
        self.rep.group()
    }

    pub fn identity(group: &GroupPresentation) -> Self {
        Commensurator { rep: SubgroupIso::identity(&CosetTable::whole_group(group)) }
    }

    /// Conjugation `w ↦ c·w·c⁻¹`.
    pub fn inner(group: &GroupPresentation, c: &Word) -> Self {
        Commensurator { rep: SubgroupIso::conjugation(group, c) }
    }

    /// Image of a word in the representative's domain.
    pub fn evaluate(&self, w: &Word) -> Result<Word, IsoError> {
        self.rep.evaluate(w)
    }

    pub fn inverse(&self) -> Self {
        Commensurator { rep: self.rep.invert() }
    }

    /// Same class, representative restricted to the preimage of `l`.
    pub fn restrict(&self, l: &CosetTable) -> Result<Self, CommError> {
        Ok(Commensurator { rep: self.rep.restrict(l)? })
    }

    /// `self ∘ h`: apply `h`, then `self`.
    pub fn compose(&self, h: &Commensurator) -> Result<Self, CommError> {
        if self.group() != h.group() {
            return Err(CommError::GroupMismatch);
        }
        let g = &self.rep;
        let m = g.domain().intersect(h.rep.codomain()).map_err(IsoError::from)?;
        let h_r = h.rep.restrict(&m)?;
        let g_inv_r = g.invert().restrict(&m)?;
        let h_inv = h.rep.invert();
        let images = h_r.images().iter().map(|w| g.evaluate(w)).collect::<Result<Vec<_>, _>>()?;
        let inverse_images = g_inv_r
            .images()
            .iter()
            .map(|w| h_inv.evaluate(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Commensurator {
            rep: SubgroupIso::from_trusted(
                h_r.domain_schreier().clone(),
                g_inv_r.domain_schreier().clone(),
                images,
                inverse_images,
            ),
        })
    }

    /// `self^k`; negative powers use the inverse.
    pub fn power(&self, k: i64) -> Result<Self, CommError> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Commensurator::identity(self.group());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base)?;
        }
        Ok(acc)
    }

    /// A domain Schreier generator that is moved, with its image.
    pub fn moved_generator(&self) -> Option<(Word, Word)> {
        let group = self.group();
        self.rep
            .domain_schreier()
            .generators()
            .iter()
            .zip(self.rep.images())
            .find(|(t, img)| !group.words_equal(&t.word, img))
            .map(|(t, img)| (t.word.clone(), img.clone()))
    }

    pub fn is_identity(&self) -> bool {
        self.moved_generator().is_none()
    }

    /// Class equality: `self ∘ other⁻¹` is the identity.
    pub fn equals(&self, other: &Commensurator) -> Result<bool, CommError> {
        Ok(self.compose(&other.inverse())?.is_identity())
    }
}
