//! Stallings folding with witnesses: membership in finitely generated
//! subgroups of F2, with the expression over the given generators.

use commensurator::stallings::WitnessGraph;
use commensurator::GroupPresentation;

fn main() {
    let f2 = GroupPresentation::free_rank2();
    let gens: Vec<_> = ["A^2", "B*A*B^-1", "A*B^2*A"].iter().map(|s| f2.parse(s).unwrap()).collect();
    let g = WitnessGraph::fold(2, &gens);
    println!("{} vertices, {} edges, complete: {}, free basis: {}", g.vertex_count(), g.edge_count(), g.is_complete(), g.is_free_basis());
    let names = ["h0".to_string(), "h1".into(), "h2".into()];
    for text in ["A^4*B*A^-2*B^-1", "A*B^2*A^3", "A*B"] {
        let w = f2.parse(text).unwrap();
        match g.membership_with_witness(&w) {
            Some(wit) => println!("{text} = {}", wit.display(&names)),
            None => println!("{text} is not in the subgroup"),
        }
    }
    let redundant: Vec<_> = ["A*B", "A", "B"].iter().map(|s| f2.parse(s).unwrap()).collect();
    let g = WitnessGraph::fold(2, &redundant);
    println!("<A*B, A, B>: {} vertex, relations found while folding:", g.vertex_count());
    for d in g.discrepancies() {
        println!("  {}", d.display(&["x0".to_string(), "x1".into(), "x2".into()]));
    }
}
