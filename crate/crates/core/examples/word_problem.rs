//! Free reduction in F2 and Dehn's algorithm in the genus-2 surface group.

use commensurator::GroupPresentation;

fn main() {
    let f2 = GroupPresentation::free_rank2();
    let w = f2.parse("A*B*B^-1*A^2*B^-1").unwrap();
    println!("F2: A*B*B^-1*A^2*B^-1 reduces to {}", f2.format(&w));

    let g2 = GroupPresentation::genus2();
    for text in ["A*B*A^-1*B^-1*C*D*C^-1*D^-1", "B^-1*A^-1*D^-1*C^-1*A*B*A^-1*B^-1*C*D*C^-1*D^-1*C*D", "A*B*A^-1"] {
        let w = g2.parse(text).unwrap();
        println!("genus 2: {text}");
        println!("  shortened: {}", g2.format(&g2.shorten(&w)));
        println!("  trivial:   {}", g2.is_trivial(&w));
    }
    let u = g2.parse("C*D*C^-1*D^-1").unwrap();
    let v = g2.parse("B*A*B^-1*A^-1").unwrap();
    println!("[C,D] == [B,A]: {}", g2.words_equal(&u, &v));
}
