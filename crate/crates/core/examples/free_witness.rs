//! The gamma word evaluated in Comm(F2), stepwise and as a single
//! commensurator. Pass `--auto` to use the automatic psi.

use commensurator::cli::{free_demo, PsiSource, GAMMA_WORD, PSI_FREE_JSON};
use commensurator::comm::{build_bs_pair, decide_comm_word, CommWordProblemInstance};
use commensurator::{GroupPresentation, SubgroupIso};

fn main() {
    let auto = std::env::args().any(|a| a == "--auto");
    let f2 = GroupPresentation::free_rank2();
    let iso = (!auto).then(|| SubgroupIso::from_json(PSI_FREE_JSON).unwrap());
    let pair = build_bs_pair(&f2, 2, 3, iso).unwrap();
    let inst = CommWordProblemInstance::parse(pair.letters(), GAMMA_WORD).unwrap();
    println!("word: {}", inst.format_word());

    let mut w = f2.parse("B*A*B^-1*A^-1").unwrap();
    println!("start: {}", f2.format(&w));
    for (k, l) in inst.word().letters().iter().rev().enumerate() {
        let name = &inst.names()[l.generator()];
        let c = inst.letter(name).unwrap();
        let c = if l.is_inverse() { c.inverse() } else { c.clone() };
        w = c.evaluate(&w).unwrap();
        println!("step {:>2} ({name}{}): {}", k + 1, if l.is_inverse() { "^-1" } else { "" }, f2.format(&w));
    }
    let v = decide_comm_word(&inst, &f2).unwrap();
    println!("trivial: {} (domain index {})", v.trivial, v.domain_index);
    if !auto {
        print!("{}", free_demo(PsiSource::Shipped).to_text());
    }
}
