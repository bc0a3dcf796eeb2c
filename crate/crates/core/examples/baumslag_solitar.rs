//! Baumslag-Solitar pairs (psi, phi) in Comm(F2): the defining relation
//! holds for several (m, n).

use commensurator::comm::build_bs_pair;
use commensurator::GroupPresentation;

fn main() {
    let f2 = GroupPresentation::free_rank2();
    let a = f2.parse("A").unwrap();
    for (m, n) in [(1, 2), (1, 3), (2, 3), (3, 2), (2, 5)] {
        let pair = build_bs_pair(&f2, m, n, None).unwrap();
        let am = pair.psi.evaluate(&a.pow(m as i64)).unwrap();
        println!(
            "BS({m},{n}): psi(A^{m}) = {}, relation holds: {}, kernels of index {}",
            f2.format(&am),
            pair.relator().unwrap().is_identity(),
            pair.psi.rep().domain().index()
        );
    }
}
