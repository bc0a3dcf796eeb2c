//! Isomorphisms between finite-index subgroups: loading the shipped data,
//! evaluation, inversion and restriction.

use commensurator::cli::PSI_FREE_JSON;
use commensurator::{CosetTable, GroupPresentation, SubgroupIso};

fn main() {
    let f2 = GroupPresentation::free_rank2();
    let psi = SubgroupIso::from_json(PSI_FREE_JSON).unwrap();
    println!("domain index {}, codomain index {}", psi.domain().index(), psi.codomain().index());
    for (i, img) in psi.images().iter().enumerate() {
        println!("  generator {i} -> {}", f2.format(img));
    }
    let w = f2.parse("A^-2").unwrap();
    let img = psi.evaluate(&w).unwrap();
    println!("psi(A^-2) = {}", f2.format(&img));
    println!("psi^-1(psi(A^-2)) = {}", f2.format(&psi.invert().evaluate(&img).unwrap()));
    match psi.evaluate(&f2.parse("A").unwrap()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("psi(A): {e}"),
    }

    let smaller = psi.domain().intersect(psi.codomain()).unwrap();
    let r = psi.restrict(&smaller).unwrap();
    println!("restricted to K1 cap K2: domain index {}, codomain index {}", r.domain().index(), r.codomain().index());
    let conj = SubgroupIso::conjugation(&f2, &f2.parse("B").unwrap());
    println!("conjugation by B: A -> {}", f2.format(&conj.evaluate(&f2.parse("A").unwrap()).unwrap()));
    let id = SubgroupIso::identity(&CosetTable::whole_group(&f2));
    println!("identity on F2 has {} generator images", id.images().len());
}
