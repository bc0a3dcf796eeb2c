//! Isomorphisms between finite-index subgroups.
//!
//! A [`SubgroupIso`] stores the image of every Schreier generator of its
//! domain together with the image of every Schreier generator of its
//! codomain under the inverse map. Both directions are checked when the
//! value is built, so inversion is a swap and evaluation never fails on
//! members of the domain.
//!
//! Checks performed by [`SubgroupIso::new`]:
//! * both subgroups live in the same group and have the same index;
//! * images lie in the codomain, inverse images in the domain;
//! * for the surface group, every Reidemeister–Schreier relator of each side
//!   maps to a trivial word;
//! * inverse after forward fixes every generator, on both sides.
//!
//! In a free group the inverse images may be omitted; they are recovered by
//! folding the images and expressing the codomain generators over them.

mod file;

use std::sync::Arc;

use thiserror::Error;

use crate::stallings::{StallingsError, WitnessGraph};
use crate::subgroups::{CosetTable, SchreierData, SubgroupError};
use crate::words::{GroupPresentation, Letter, Word, WordError};

pub use file::{IsoDocument, SubgroupSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("domain and codomain live in different groups")]
    GroupMismatch,
    #[error("domain has index {domain} but codomain has index {codomain}")]
    IndexMismatch { domain: usize, codomain: usize },
    #[error("expected {expected} {what}, got {got}")]
    CountMismatch { what: &'static str, expected: usize, got: usize },
    #[error("image of generator {0} is not in the codomain")]
    ImageOutsideCodomain(usize),
    #[error("inverse image of generator {0} is not in the domain")]
    InverseOutsideDomain(usize),
    #[error("{side} relator {index} does not map to the identity")]
    IllDefined { side: &'static str, index: usize },
    #[error("images do not generate the codomain")]
    NotSurjective,
    #[error("inverse images are required for groups with relators")]
    MissingInverse,
    #[error("round trip fails on {side} generator {index}")]
    RoundTrip { side: &'static str, index: usize },
    #[error("images cannot be inverted: {0}")]
    NotInvertible(#[from] StallingsError),
    #[error("word is not in the domain")]
    DomainError,
    #[error("restricted subgroups disagree in index ({domain} vs {codomain})")]
    RestrictionMismatch { domain: usize, codomain: usize },
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("iso file: {0}")]
    File(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupIso {
    domain: Arc<SchreierData>,
    codomain: Arc<SchreierData>,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl SubgroupIso {
    /// Builds and fully checks an isomorphism from generator images.
    pub fn new(
        domain: &CosetTable,
        codomain: &CosetTable,
        images: Vec<Word>,
        inverse_images: Option<Vec<Word>>,
    ) -> Result<Self, IsoError> {
        if domain.group() != codomain.group() {
            return Err(IsoError::GroupMismatch);
        }
        let group = domain.group().clone();
        if domain.index() != codomain.index() {
            return Err(IsoError::IndexMismatch { domain: domain.index(), codomain: codomain.index() });
        }
        let dom = Arc::new(SchreierData::new(domain));
        let cod = Arc::new(SchreierData::new(codomain));
        if images.len() != dom.len() {
            return Err(IsoError::CountMismatch { what: "images", expected: dom.len(), got: images.len() });
        }
        for (i, w) in images.iter().enumerate() {
            group.check(w)?;
            if !codomain.contains(w) {
                return Err(IsoError::ImageOutsideCodomain(i));
            }
        }
        let inverse_images = match inverse_images {
            Some(inv) => inv,
            None if group.is_free() => {
                let graph = WitnessGraph::fold(group.rank(), &images);
                if !graph.equals_table(codomain) {
                    return Err(IsoError::NotSurjective);
                }
                graph
                    .express_all(&cod.generator_words())?
                    .iter()
                    .map(|symbols| dom.expand(symbols))
                    .collect()
            }
            None => return Err(IsoError::MissingInverse),
        };
        if inverse_images.len() != cod.len() {
            return Err(IsoError::CountMismatch {
                what: "inverse images",
                expected: cod.len(),
                got: inverse_images.len(),
            });
        }
        for (i, w) in inverse_images.iter().enumerate() {
            group.check(w)?;
            if !domain.contains(w) {
                return Err(IsoError::InverseOutsideDomain(i));
            }
        }
        let iso = SubgroupIso { domain: dom, codomain: cod, images, inverse_images };
        iso.check_relators()?;
        iso.check_round_trip()?;
        Ok(iso)
    }

    /// The identity on a subgroup.
    pub fn identity(table: &CosetTable) -> Self {
        let s = Arc::new(SchreierData::new(table));
        let gens = s.generator_words();
        SubgroupIso { domain: s.clone(), codomain: s, images: gens.clone(), inverse_images: gens }
    }

    /// Conjugation `w ↦ c·w·c⁻¹` on the whole group.
    pub fn conjugation(group: &GroupPresentation, c: &Word) -> Self {
        let whole = Arc::new(SchreierData::new(&CosetTable::whole_group(group)));
        let conj = |x: &Word| group.shorten(&x.conjugate_by(c));
        let inv = c.inverse();
        let conj_inv = |x: &Word| group.shorten(&x.conjugate_by(&inv));
        let gens = whole.generator_words();
        SubgroupIso {
            domain: whole.clone(),
            codomain: whole,
            images: gens.iter().map(conj).collect(),
            inverse_images: gens.iter().map(conj_inv).collect(),
        }
    }

    /// Assembles an iso from parts already known to be consistent.
    pub(crate) fn from_trusted(
        domain: SchreierData,
        codomain: SchreierData,
        images: Vec<Word>,
        inverse_images: Vec<Word>,
    ) -> Self {
        debug_assert_eq!(images.len(), domain.len());
        debug_assert_eq!(inverse_images.len(), codomain.len());
        SubgroupIso { domain: Arc::new(domain), codomain: Arc::new(codomain), images, inverse_images }
    }

    pub fn group(&self) -> &GroupPresentation {
        self.domain.table().group()
    }

    pub fn domain(&self) -> &CosetTable {
        self.domain.table()
    }

    pub fn codomain(&self) -> &CosetTable {
        self.codomain.table()
    }

    pub fn domain_schreier(&self) -> &SchreierData {
        &self.domain
    }

    pub fn codomain_schreier(&self) -> &SchreierData {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    /// Image of a domain element.
    pub fn evaluate(&self, w: &Word) -> Result<Word, IsoError> {
        let symbols = self.domain.rewrite(w).map_err(|_| IsoError::DomainError)?;
        let out = symbols.substitute(&self.images)?;
        Ok(if self.group().is_free() { out } else { self.group().shorten(&out) })
    }

    pub fn invert(&self) -> SubgroupIso {
        SubgroupIso {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// Restriction to `f⁻¹(codomain ∩ L)`.
    ///
    /// The new domain's coset table comes from the action of the group on
    /// pairs (domain coset, coset of `L`): reading a letter `x` at domain coset
    /// `c` crosses the Schreier generator on that edge, whose image moves the
    /// `L`-coset along.
    pub fn restrict(&self, l: &CosetTable) -> Result<SubgroupIso, IsoError> {
        if l.group() != self.group() {
            return Err(IsoError::GroupMismatch);
        }
        let target = self.codomain().intersect(l)?;
        let p = self.preimage_table(l)?;
        if p.index() != target.index() {
            return Err(IsoError::RestrictionMismatch { domain: p.index(), codomain: target.index() });
        }
        let ps = SchreierData::new(&p);
        let qs = SchreierData::new(&target);
        let inv = self.invert();
        let images = ps.generators().iter().map(|t| self.evaluate(&t.word)).collect::<Result<_, _>>()?;
        let inverse_images = qs.generators().iter().map(|t| inv.evaluate(&t.word)).collect::<Result<_, _>>()?;
        Ok(SubgroupIso::from_trusted(ps, qs, images, inverse_images))
    }

    /// Coset table of `{ w ∈ domain : f(w) ∈ L }`.
    fn preimage_table(&self, l: &CosetTable) -> Result<CosetTable, IsoError> {
        let rank = self.group().rank();
        let d = self.domain();
        let ln = l.index();
        let encode = |c: usize, s: usize| c * ln + s;
        // L-permutation induced by each Schreier generator's image
        let moves: Vec<Vec<usize>> = self
            .images
            .iter()
            .map(|img| (0..ln).map(|s| l.trace(s, img)).collect())
            .collect();
        let perms = (0..rank)
            .map(|g| {
                let mut perm = vec![0; d.index() * ln];
                for c in 0..d.index() {
                    let next = d.step(c, Letter::pos(g));
                    for s in 0..ln {
                        let t = self.domain.symbol_at(c, g).map_or(s, |k| moves[k][s]);
                        perm[encode(c, s)] = encode(next, t);
                    }
                }
                perm
            })
            .collect();
        Ok(CosetTable::from_permutations_reachable(self.group(), perms, 0)?)
    }

    fn check_relators(&self) -> Result<(), IsoError> {
        if self.group().is_free() {
            return Ok(());
        }
        for (side, s, imgs) in [
            ("domain", &self.domain, &self.images),
            ("codomain", &self.codomain, &self.inverse_images),
        ] {
            for (index, r) in s.relators().iter().enumerate() {
                if !self.group().is_trivial(&r.substitute(imgs)?) {
                    return Err(IsoError::IllDefined { side, index });
                }
            }
        }
        Ok(())
    }

    fn check_round_trip(&self) -> Result<(), IsoError> {
        let inv = self.invert();
        for (side, f, g) in [("domain", self, &inv), ("codomain", &inv, self)] {
            for (index, t) in f.domain.generators().iter().enumerate() {
                let back = g.evaluate(&f.images[index]).map_err(|_| IsoError::RoundTrip { side, index })?;
                if !self.group().words_equal(&back, &t.word) {
                    return Err(IsoError::RoundTrip { side, index });
                }
            }
        }
        Ok(())
    }
}
