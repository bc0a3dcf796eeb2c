//! Coset enumeration driven by a membership predicate.
//!
//! Cosets are discovered breadth first from the identity in shortlex order.
//! For an undefined edge `c·x`, the candidate `u = rep(c)·x` is compared with
//! each known representative `v` by asking whether `u·v⁻¹` is a member; a new
//! coset is opened only if no comparison succeeds.

use crate::words::{GroupPresentation, Letter, Word};

use super::{CosetTable, SubgroupError};

pub fn enumerate_by_oracle<F>(
    group: &GroupPresentation,
    mut member: F,
    bound: usize,
) -> Result<CosetTable, SubgroupError>
where
    F: FnMut(&Word) -> bool,
{
    let rank = group.rank();
    let mut reps = vec![Word::identity()];
    // edges[c][k] for letters in shortlex order
    let mut edges: Vec<Vec<Option<usize>>> = vec![vec![None; 2 * rank]];
    let slot = |l: Letter| l.order_index(rank);
    let mut c = 0;
    while c < reps.len() {
        for x in Letter::all(rank) {
            if edges[c][slot(x)].is_some() {
                continue;
            }
            let u = reps[c].concat(&Word::letter(x));
            // a coset whose x⁻¹ edge is already defined cannot be c·x
            let found = (0..reps.len())
                .filter(|&d| edges[d][slot(x.inverse())].is_none())
                .find(|&d| member(&u.concat(&reps[d].inverse())));
            let d = match found {
                Some(d) => d,
                None => {
                    if reps.len() >= bound {
                        return Err(SubgroupError::BoundExceeded(bound));
                    }
                    reps.push(u);
                    edges.push(vec![None; 2 * rank]);
                    reps.len() - 1
                }
            };
            edges[c][slot(x)] = Some(d);
            match edges[d][slot(x.inverse())] {
                None => edges[d][slot(x.inverse())] = Some(c),
                Some(e) if e != c => return Err(SubgroupError::Inconsistent(d)),
                Some(_) => {}
            }
        }
        c += 1;
    }
    let perms = (0..rank)
        .map(|g| edges.iter().map(|row| row[slot(Letter::pos(g))].expect("complete")).collect())
        .collect();
    CosetTable::from_permutations(group, perms, 0).map_err(|e| match e {
        SubgroupError::NotAPermutation(_) | SubgroupError::RelatorAction(_) => SubgroupError::Inconsistent(0),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::FiniteAbelianTarget;

    #[test]
    fn rederives_kernels() {
        for group in [GroupPresentation::free_rank2(), GroupPresentation::genus2()] {
            let mut images = vec![vec![1, 0], vec![0, 1]];
            images.resize(group.rank(), vec![0, 0]);
            let k1 = CosetTable::kernel(&group, &FiniteAbelianTarget::new(vec![2, 3], images).unwrap()).unwrap();
            let t = enumerate_by_oracle(&group, |w| k1.contains(w), 6).unwrap();
            assert_eq!(t, k1);
        }
    }

    #[test]
    fn whole_group_and_bound() {
        let f2 = GroupPresentation::free_rank2();
        assert_eq!(enumerate_by_oracle(&f2, |_| true, 1).unwrap().index(), 1);
        let k = CosetTable::kernel(&f2, &FiniteAbelianTarget::new(vec![5], vec![vec![1], vec![0]]).unwrap()).unwrap();
        assert_eq!(enumerate_by_oracle(&f2, |w| k.contains(w), 4), Err(SubgroupError::BoundExceeded(4)));
        // the trivial subgroup has infinite index
        assert_eq!(enumerate_by_oracle(&f2, |w| w.is_empty(), 10), Err(SubgroupError::BoundExceeded(10)));
    }
}
