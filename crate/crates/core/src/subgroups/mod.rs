//! Finite-index subgroups as coset tables.
//!
//! A [`CosetTable`] is the right action of the ambient generators on the
//! cosets `H·w`, with the subgroup's own coset as state 0. Every table built
//! here is standardized: states are numbered in the order a breadth-first
//! search from state 0 discovers them, trying letters in shortlex order
//! (`A < B < … < A⁻¹ < B⁻¹ < …`). Two tables describe the same subgroup
//! exactly when they are equal.

mod enumerate;
mod schreier;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{GroupPresentation, Letter, Word, WordError};

pub use enumerate::enumerate_by_oracle;
pub use schreier::{SchreierData, SchreierGenerator};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("invalid abelian target: {0}")]
    BadTarget(String),
    #[error("map to the abelian target does not kill relator {0}")]
    NotAHomomorphism(usize),
    #[error("generator {0} does not act as a permutation")]
    NotAPermutation(usize),
    #[error("action is not transitive on the {0} states")]
    NotTransitive(usize),
    #[error("relator does not act trivially from state {0}")]
    RelatorAction(usize),
    #[error("subgroups live in different ambient groups")]
    GroupMismatch,
    #[error("word is not in the subgroup")]
    NotAMember,
    #[error("coset enumeration exceeded the bound of {0} cosets")]
    BoundExceeded(usize),
    #[error("membership predicate is inconsistent with a subgroup at state {0}")]
    Inconsistent(usize),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("malformed coset table document: {0}")]
    Document(String),
}

/// A homomorphism to `Z/m₁ × … × Z/m_k`, given by the residues of each
/// ambient generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteAbelianTarget {
    moduli: Vec<u32>,
    images: Vec<Vec<u32>>,
}

impl FiniteAbelianTarget {
    /// `images[g]` is the residue tuple of generator `g`; entries are reduced
    /// modulo their modulus.
    pub fn new(moduli: Vec<u32>, images: Vec<Vec<i64>>) -> Result<Self, SubgroupError> {
        if moduli.iter().any(|&m| m == 0) {
            return Err(SubgroupError::BadTarget("moduli must be positive".into()));
        }
        let images = images
            .into_iter()
            .map(|v| {
                if v.len() != moduli.len() {
                    return Err(SubgroupError::BadTarget(format!(
                        "image tuple of length {} for {} moduli",
                        v.len(),
                        moduli.len()
                    )));
                }
                Ok(v.iter().zip(&moduli).map(|(&x, &m)| x.rem_euclid(m as i64) as u32).collect())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteAbelianTarget { moduli, images })
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn images(&self) -> &[Vec<u32>] {
        &self.images
    }

    fn shift(&self, s: &[u32], l: Letter) -> Vec<u32> {
        let img = &self.images[l.generator()];
        s.iter()
            .zip(img)
            .zip(&self.moduli)
            .map(|((&a, &b), &m)| if l.is_inverse() { (a + m - b) % m } else { (a + b) % m })
            .collect()
    }

    /// Image of a word in the target.
    pub fn image_of(&self, w: &Word) -> Vec<u32> {
        w.letters()
            .iter()
            .fold(vec![0; self.moduli.len()], |s, &l| self.shift(&s, l))
    }
}

/// Pointed transitive permutation action of the ambient generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    group: Arc<GroupPresentation>,
    /// `forward[g][s]` is the state reached from `s` by generator `g`.
    forward: Vec<Vec<u32>>,
    backward: Vec<Vec<u32>>,
}

impl CosetTable {
    /// The whole group (one coset).
    pub fn whole_group(group: &GroupPresentation) -> Self {
        CosetTable {
            group: Arc::new(group.clone()),
            forward: vec![vec![0]; group.rank()],
            backward: vec![vec![0]; group.rank()],
        }
    }

    /// Validates and standardizes a table given by one permutation per
    /// generator (`perms[g][s]` = image of state `s`); `base` is the
    /// subgroup's coset.
    pub fn from_permutations(
        group: &GroupPresentation,
        perms: Vec<Vec<usize>>,
        base: usize,
    ) -> Result<Self, SubgroupError> {
        if perms.len() != group.rank() {
            return Err(SubgroupError::Document(format!(
                "{} permutations for {} generators",
                perms.len(),
                group.rank()
            )));
        }
        let n = perms.first().map_or(1, Vec::len);
        if base >= n {
            return Err(SubgroupError::Document("base state out of range".into()));
        }
        let mut backward = vec![vec![u32::MAX; n]; perms.len()];
        for (g, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(SubgroupError::NotAPermutation(g));
            }
            for (s, &t) in p.iter().enumerate() {
                if t >= n || backward[g][t] != u32::MAX {
                    return Err(SubgroupError::NotAPermutation(g));
                }
                backward[g][t] = s as u32;
            }
        }
        let forward = perms
            .into_iter()
            .map(|p| p.into_iter().map(|t| t as u32).collect())
            .collect();
        let raw = CosetTable { group: Arc::new(group.clone()), forward, backward };
        let table = raw.standardized(base)?;
        table.check_relators()?;
        Ok(table)
    }

    /// Like [`from_permutations`](Self::from_permutations), keeping only the
    /// orbit of `base`.
    pub fn from_permutations_reachable(
        group: &GroupPresentation,
        perms: Vec<Vec<usize>>,
        base: usize,
    ) -> Result<Self, SubgroupError> {
        let n = perms.first().map_or(1, Vec::len);
        let mut inverse = vec![vec![usize::MAX; n]; perms.len()];
        for (g, p) in perms.iter().enumerate() {
            for (s, &t) in p.iter().enumerate() {
                if t >= n || inverse[g][t] != usize::MAX {
                    return Err(SubgroupError::NotAPermutation(g));
                }
                inverse[g][t] = s;
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut orbit = vec![base];
        label[base] = 0;
        let mut k = 0;
        while k < orbit.len() {
            let s = orbit[k];
            for t in perms.iter().chain(&inverse).map(|p| p[s]) {
                if label[t] == usize::MAX {
                    label[t] = orbit.len();
                    orbit.push(t);
                }
            }
            k += 1;
        }
        let compact = perms
            .iter()
            .map(|p| orbit.iter().map(|&s| label[p[s]]).collect())
            .collect();
        Self::from_permutations(group, compact, 0)
    }

    /// Kernel of a map to a finite abelian group: states are the elements of
    /// the image subgroup.
    pub fn kernel(group: &GroupPresentation, target: &FiniteAbelianTarget) -> Result<Self, SubgroupError> {
        if target.images.len() != group.rank() {
            return Err(SubgroupError::BadTarget(format!(
                "{} images for {} generators",
                target.images.len(),
                group.rank()
            )));
        }
        for (i, r) in group.relators().iter().enumerate() {
            if target.image_of(r).iter().any(|&x| x != 0) {
                return Err(SubgroupError::NotAHomomorphism(i));
            }
        }
        let zero = vec![0u32; target.moduli.len()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(zero.clone(), 0)]);
        let mut states = vec![zero];
        let mut k = 0;
        while k < states.len() {
            for l in Letter::all(group.rank()) {
                let t = target.shift(&states[k], l);
                if !index.contains_key(&t) {
                    index.insert(t.clone(), states.len());
                    states.push(t);
                }
            }
            k += 1;
        }
        let perms = (0..group.rank())
            .map(|g| states.iter().map(|s| index[&target.shift(s, Letter::pos(g))]).collect())
            .collect();
        Self::from_permutations(group, perms, 0)
    }

    pub fn group(&self) -> &GroupPresentation {
        &self.group
    }

    pub fn index(&self) -> usize {
        self.forward.first().map_or(1, Vec::len)
    }

    pub fn base(&self) -> usize {
        0
    }

    pub fn step(&self, state: usize, l: Letter) -> usize {
        let table = if l.is_inverse() { &self.backward } else { &self.forward };
        table[l.generator()][state] as usize
    }

    pub fn trace(&self, state: usize, w: &Word) -> usize {
        w.letters().iter().fold(state, |s, &l| self.step(s, l))
    }

    /// Membership: the base coset is fixed by `w`.
    pub fn contains(&self, w: &Word) -> bool {
        w.rank_needed() <= self.group.rank() && self.trace(0, w) == 0
    }

    /// Permutation of generator `g` as a state list.
    pub fn permutation(&self, g: usize) -> Vec<usize> {
        self.forward[g].iter().map(|&t| t as usize).collect()
    }

    /// `H ∩ K` via the product action on reachable pairs.
    pub fn intersect(&self, other: &CosetTable) -> Result<CosetTable, SubgroupError> {
        if self.group != other.group {
            return Err(SubgroupError::GroupMismatch);
        }
        let rank = self.group.rank();
        let mut index: HashMap<(usize, usize), usize> = HashMap::from([((0, 0), 0)]);
        let mut pairs = vec![(0usize, 0usize)];
        let mut k = 0;
        while k < pairs.len() {
            let (a, b) = pairs[k];
            for l in Letter::all(rank) {
                let t = (self.step(a, l), other.step(b, l));
                if !index.contains_key(&t) {
                    index.insert(t, pairs.len());
                    pairs.push(t);
                }
            }
            k += 1;
        }
        let perms = (0..rank)
            .map(|g| {
                pairs
                    .iter()
                    .map(|&(a, b)| index[&(self.step(a, Letter::pos(g)), other.step(b, Letter::pos(g)))])
                    .collect()
            })
            .collect();
        CosetTable::from_permutations(&self.group, perms, 0)
    }

    /// Relabels states in breadth-first shortlex order from `base`; fails if
    /// some state is unreachable.
    fn standardized(&self, base: usize) -> Result<CosetTable, SubgroupError> {
        let n = self.index();
        let rank = self.group.rank();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([base]);
        label[base] = 0;
        order.push(base);
        while let Some(s) = queue.pop_front() {
            for l in Letter::all(rank) {
                let t = self.step(s, l);
                if label[t] == usize::MAX {
                    label[t] = order.len();
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
        if order.len() != n {
            return Err(SubgroupError::NotTransitive(n));
        }
        let relabel = |table: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
            table
                .iter()
                .map(|row| order.iter().map(|&old| label[row[old] as usize] as u32).collect())
                .collect()
        };
        Ok(CosetTable {
            group: self.group.clone(),
            forward: relabel(&self.forward),
            backward: relabel(&self.backward),
        })
    }

    fn check_relators(&self) -> Result<(), SubgroupError> {
        for r in self.group.relators() {
            for s in 0..self.index() {
                if self.trace(s, r) != s {
                    return Err(SubgroupError::RelatorAction(s));
                }
            }
        }
        Ok(())
    }

    pub fn to_document(&self) -> CosetTableDocument {
        CosetTableDocument {
            group: self.group.name().to_string(),
            generators: self.group.generators().to_vec(),
            states: self.index(),
            base: 0,
            permutations: (0..self.group.rank()).map(|g| self.permutation(g)).collect(),
        }
    }

    pub fn from_document(doc: &CosetTableDocument) -> Result<Self, SubgroupError> {
        let group = GroupPresentation::by_name(&doc.group)
            .ok_or_else(|| SubgroupError::Document(format!("unknown group `{}`", doc.group)))?;
        if doc.generators != group.generators() {
            return Err(SubgroupError::Document("generator names do not match the group".into()));
        }
        if doc.permutations.iter().any(|p| p.len() != doc.states) {
            return Err(SubgroupError::Document("permutation length differs from state count".into()));
        }
        Self::from_permutations(&group, doc.permutations.clone(), doc.base)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, SubgroupError> {
        let doc: CosetTableDocument =
            serde_json::from_str(s).map_err(|e| SubgroupError::Document(e.to_string()))?;
        Self::from_document(&doc)
    }
}

/// JSON form of a coset table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTableDocument {
    pub group: String,
    pub generators: Vec<String>,
    pub states: usize,
    pub base: usize,
    /// One permutation per generator, in generator order.
    pub permutations: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pi(group: &GroupPresentation, swap: bool) -> FiniteAbelianTarget {
        let (a, b) = if swap { (vec![0, 1], vec![1, 0]) } else { (vec![1, 0], vec![0, 1]) };
        let mut images = vec![a, b];
        images.resize(group.rank(), vec![0, 0]);
        FiniteAbelianTarget::new(vec![2, 3], images).unwrap()
    }

    #[test]
    fn kernel_indices() {
        let f2 = GroupPresentation::free_rank2();
        let g2 = GroupPresentation::genus2();
        assert_eq!(CosetTable::kernel(&f2, &pi(&f2, false)).unwrap().index(), 6);
        assert_eq!(CosetTable::kernel(&g2, &pi(&g2, false)).unwrap().index(), 6);
        assert_eq!(CosetTable::kernel(&g2, &pi(&g2, true)).unwrap().index(), 6);
        let zero = FiniteAbelianTarget::new(vec![2, 3], vec![vec![0, 0]; 2]).unwrap();
        assert_eq!(CosetTable::kernel(&f2, &zero).unwrap().index(), 1);
    }

    #[test]
    fn membership_in_k1() {
        let f2 = GroupPresentation::free_rank2();
        let k1 = CosetTable::kernel(&f2, &pi(&f2, false)).unwrap();
        assert!(k1.contains(&f2.parse("A^2").unwrap()));
        assert!(!k1.contains(&f2.parse("A").unwrap()));
        assert!(k1.contains(&f2.parse("B*A*B^-1*A^-1").unwrap()));
        assert!(k1.contains(&Word::identity()));
    }

    #[test]
    fn intersections() {
        let f2 = GroupPresentation::free_rank2();
        let k1 = CosetTable::kernel(&f2, &pi(&f2, false)).unwrap();
        let k2 = CosetTable::kernel(&f2, &pi(&f2, true)).unwrap();
        assert_eq!(k1.intersect(&k1).unwrap(), k1);
        assert_eq!(k1.intersect(&CosetTable::whole_group(&f2)).unwrap(), k1);
        assert_eq!(k1.intersect(&k2).unwrap().index(), 36);
        let g2 = GroupPresentation::genus2();
        let s1 = CosetTable::kernel(&g2, &pi(&g2, false)).unwrap();
        assert_eq!(k1.intersect(&s1), Err(SubgroupError::GroupMismatch));
    }

    #[test]
    fn target_validation() {
        assert!(FiniteAbelianTarget::new(vec![0], vec![vec![1]]).is_err());
        assert!(FiniteAbelianTarget::new(vec![2, 3], vec![vec![1]]).is_err());
        let t = FiniteAbelianTarget::new(vec![2, 3], vec![vec![-1, 4], vec![0, 0]]).unwrap();
        assert_eq!(t.images()[0], vec![1, 1]);
        // a map that does not kill the surface relator
        let g2 = GroupPresentation::genus2();
        assert!(CosetTable::kernel(&g2, &FiniteAbelianTarget::new(vec![2], vec![vec![1]; 4]).unwrap()).is_ok());
    }

    #[test]
    fn bad_permutations_rejected() {
        let f2 = GroupPresentation::free_rank2();
        assert_eq!(
            CosetTable::from_permutations(&f2, vec![vec![0, 0], vec![0, 1]], 0),
            Err(SubgroupError::NotAPermutation(0))
        );
        assert_eq!(
            CosetTable::from_permutations(&f2, vec![vec![0, 1], vec![0, 1]], 0),
            Err(SubgroupError::NotTransitive(2))
        );
        // transitive on two states, but the surface relator would need to act trivially
        let g2 = GroupPresentation::genus2();
        let t = CosetTable::from_permutations(&g2, vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]], 0);
        assert!(t.is_ok());
    }

    #[test]
    fn relabeling_is_canonical() {
        let f2 = GroupPresentation::free_rank2();
        let k1 = CosetTable::kernel(&f2, &pi(&f2, false)).unwrap();
        // conjugate the labels by a permutation and rebuild
        let sigma = [3usize, 5, 0, 1, 4, 2];
        let perms = (0..2)
            .map(|g| {
                let p = k1.permutation(g);
                let mut q = vec![0; 6];
                for s in 0..6 {
                    q[sigma[s]] = sigma[p[s]];
                }
                q
            })
            .collect();
        assert_eq!(CosetTable::from_permutations(&f2, perms, sigma[0]).unwrap(), k1);
    }

    #[test]
    fn json_round_trip() {
        let g2 = GroupPresentation::genus2();
        let k1 = CosetTable::kernel(&g2, &pi(&g2, false)).unwrap();
        assert_eq!(CosetTable::from_json(&k1.to_json()).unwrap(), k1);
        assert!(CosetTable::from_json("{\"group\": \"nope\"}").is_err());
    }
}
