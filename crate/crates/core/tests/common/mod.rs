#![allow(dead_code)]

use commensurator::{CosetTable, FiniteAbelianTarget, GroupPresentation, Letter, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut StdRng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::reduce((0..len).map(|_| Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5))))
}

/// Kernel of `A ↦ a, B ↦ b` in `Z/2 × Z/3`, other generators to zero.
pub fn kernel(group: &GroupPresentation, a: [i64; 2], b: [i64; 2]) -> CosetTable {
    let mut images = vec![a.to_vec(), b.to_vec()];
    images.resize(group.rank(), vec![0, 0]);
    CosetTable::kernel(group, &FiniteAbelianTarget::new(vec![2, 3], images).unwrap()).unwrap()
}

pub fn k1(group: &GroupPresentation) -> CosetTable {
    kernel(group, [1, 0], [0, 1])
}

pub fn k2(group: &GroupPresentation) -> CosetTable {
    kernel(group, [0, 1], [1, 0])
}

/// A random element of `table`'s subgroup: a random word followed by the
/// transversal word returning it to the base coset.
pub fn random_member(rng: &mut StdRng, table: &CosetTable, max_len: usize) -> Word {
    let s = commensurator::SchreierData::new(table);
    let w = random_word(rng, table.group().rank(), max_len);
    let end = table.trace(0, &w);
    w.concat(&s.transversal()[end].inverse())
}

pub fn fixture(name: &str) -> Value {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
