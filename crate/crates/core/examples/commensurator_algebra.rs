//! Composition, inversion, powers and equality of commensurator classes.

use commensurator::cli::PSI_FREE_JSON;
use commensurator::{Commensurator, GroupPresentation, SubgroupIso};

fn main() {
    let f2 = GroupPresentation::free_rank2();
    let psi = Commensurator::from_iso(SubgroupIso::from_json(PSI_FREE_JSON).unwrap());
    let phi = Commensurator::inner(&f2, &f2.parse("A").unwrap());

    let lhs = psi.compose(&phi.power(2).unwrap()).unwrap().compose(&psi.inverse()).unwrap();
    let rhs = phi.power(3).unwrap();
    println!("psi phi^2 psi^-1 == phi^3: {}", lhs.equals(&rhs).unwrap());
    println!("phi phi^-1 is the identity: {}", phi.compose(&phi.inverse()).unwrap().is_identity());
    for t in 1..=3 {
        let p = phi.power(t).unwrap();
        let (g, img) = p.moved_generator().unwrap();
        println!("phi^{t} moves {} to {}", f2.format(&g), f2.format(&img));
    }
    let c = psi.compose(&phi).unwrap();
    println!("psi phi is represented on a subgroup of index {}", c.rep().domain().index());
}
