//! Recovering a coset table from a membership test alone.

use commensurator::subgroups::enumerate_by_oracle;
use commensurator::{CosetTable, FiniteAbelianTarget, GroupPresentation};

fn main() {
    let f2 = GroupPresentation::free_rank2();
    // exponent sum of A even, exponent sum of B divisible by three
    let member = |w: &commensurator::Word| {
        let v = w.abelianization(2);
        v[0].rem_euclid(2) == 0 && v[1].rem_euclid(3) == 0
    };
    let t = enumerate_by_oracle(&f2, member, 100).unwrap();
    println!("enumerated {} cosets", t.index());
    let k = CosetTable::kernel(&f2, &FiniteAbelianTarget::new(vec![2, 3], vec![vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
    println!("same table as the kernel: {}", t == k);
    match enumerate_by_oracle(&f2, |w| w.is_empty(), 50) {
        Ok(_) => println!("trivial subgroup enumerated?"),
        Err(e) => println!("trivial subgroup: {e}"),
    }
}
