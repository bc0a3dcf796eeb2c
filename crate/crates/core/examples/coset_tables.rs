//! Finite-index subgroups as coset tables: kernels of maps to Z/2 x Z/3,
//! membership, intersection and JSON round trip.

use commensurator::{CosetTable, FiniteAbelianTarget, GroupPresentation};

fn main() {
    let f2 = GroupPresentation::free_rank2();
    let k1 = CosetTable::kernel(&f2, &FiniteAbelianTarget::new(vec![2, 3], vec![vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
    let k2 = CosetTable::kernel(&f2, &FiniteAbelianTarget::new(vec![2, 3], vec![vec![0, 1], vec![1, 0]]).unwrap()).unwrap();
    println!("index K1 = {}, index K2 = {}", k1.index(), k2.index());
    for g in 0..f2.rank() {
        println!("  {} acts on K1's cosets as {:?}", f2.generators()[g], k1.permutation(g));
    }
    for text in ["A^2", "B^3", "A*B", "A^2*B^-3"] {
        let w = f2.parse(text).unwrap();
        println!("{text:>9} in K1: {:<5} in K2: {}", k1.contains(&w), k2.contains(&w));
    }
    let meet = k1.intersect(&k2).unwrap();
    println!("index of K1 cap K2 = {}", meet.index());
    let json = k1.to_json();
    assert_eq!(CosetTable::from_json(&json).unwrap(), k1);
    println!("K1 as JSON:\n{json}");
}
