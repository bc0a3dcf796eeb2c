//! Schreier generators of a subgroup, Reidemeister rewriting, and the
//! rewritten surface relators.

use commensurator::{CosetTable, FiniteAbelianTarget, GroupPresentation, SchreierData};

fn main() {
    let f2 = GroupPresentation::free_rank2();
    let k1 = CosetTable::kernel(&f2, &FiniteAbelianTarget::new(vec![2, 3], vec![vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
    let s = SchreierData::new(&k1);
    println!("transversal:");
    for (c, w) in s.transversal().iter().enumerate() {
        println!("  coset {c}: {}", f2.format(w));
    }
    println!("{} Schreier generators (1 + index * (rank - 1)):", s.len());
    for (i, t) in s.generators().iter().enumerate() {
        println!("  t{i} = {}", f2.format(&t.word));
    }
    let w = f2.parse("A^2*B^3*A^-2*B^-3").unwrap();
    let symbols = s.rewrite(&w).unwrap();
    let names: Vec<String> = (0..s.len()).map(|i| format!("t{i}")).collect();
    println!("{} rewrites to {}", f2.format(&w), symbols.display(&names));
    assert_eq!(s.expand(&symbols), w);

    let g2 = GroupPresentation::genus2();
    let mut images = vec![vec![1, 0], vec![0, 1]];
    images.resize(4, vec![0, 0]);
    let t = CosetTable::kernel(&g2, &FiniteAbelianTarget::new(vec![2, 3], images).unwrap()).unwrap();
    let s = SchreierData::new(&t);
    println!("genus 2 kernel: index {}, {} generators, {} relators", t.index(), s.len(), s.relators().len());
}
