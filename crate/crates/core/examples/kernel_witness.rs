//! gamma lies in the kernel of a -> a, b -> b^2 on BS(2,3).

use commensurator::comm::{bs_kernel_witness_check, normalize_bs23, DEFAULT_STEP_BUDGET};
use commensurator::GroupPresentation;

fn main() {
    let g = GroupPresentation::bs_alphabet();
    let k = bs_kernel_witness_check(DEFAULT_STEP_BUDGET).unwrap();
    println!("gamma            = {}", g.format(&k.gamma));
    println!("rho(gamma)       = {}", g.format(&k.rho_gamma));
    println!("rho(gamma) -> {} after {} rewrites", g.format(&k.rho_gamma_normalized), k.steps);
    println!("gamma normal form = {}", g.format(&k.gamma_normalized));
    println!("passed: {}", k.passed());
    let (w, steps) = normalize_bs23(&g.parse("a*b^2*a^-1*b^-3").unwrap(), DEFAULT_STEP_BUDGET).unwrap();
    println!("a*b^2*a^-1*b^-3 -> {} in {steps} steps", g.format(&w));
}
