//! The gamma word evaluated in Comm of the genus-2 surface group.

use commensurator::cli::{surface_demo, PsiSource, GAMMA_WORD, PSI_SURFACE_JSON, SURFACE_EXPECTED_OUTPUT};
use commensurator::comm::{build_bs_pair, sequential_evaluate, CommWordProblemInstance};
use commensurator::{GroupPresentation, SubgroupIso};

fn main() {
    let g2 = GroupPresentation::genus2();
    let pair = build_bs_pair(&g2, 2, 3, Some(SubgroupIso::from_json(PSI_SURFACE_JSON).unwrap())).unwrap();
    let inst = CommWordProblemInstance::parse(pair.letters(), GAMMA_WORD).unwrap();
    let c = g2.parse("C").unwrap();
    let out = sequential_evaluate(&inst, &c).unwrap();
    println!("gamma(C) = {}", g2.format(&out));
    let printed = g2.parse(SURFACE_EXPECTED_OUTPUT).unwrap();
    println!("length {} here, {} as printed; equal in the group: {}", out.len(), printed.len(), g2.words_equal(&out, &printed));
    println!("gamma(C) == C: {}", g2.words_equal(&out, &c));
    print!("{}", surface_demo(PsiSource::Shipped).to_text());
}
