//! Units of the truncated skew polynomial ring F{X}/(X^5) with X a = a^2 X:
//! twisted products, inverses, and the closed product formulas.
//!
//! Run with: cargo run --example skew_units

use realclass::gf::FieldElement;
use realclass::skew::{self, SkewUnit};

fn unit(coeffs: [u8; 4]) -> SkewUnit {
    SkewUnit::new(5, coeffs.iter().map(|&c| FieldElement::new(c)).collect())
}

fn main() {
    let a = unit([1, 0, 0, 0]); // 1 + x
    println!("a      = {a:?}");
    println!("a^2    = {:?}", a.square());
    println!("a^-1   = {:?}", a.inverse());

    let b = unit([0, 1, 0, 0]); // 1 + x^2
    println!("\nb      = {b:?}");
    println!("b^-1   = {:?}", b.inverse());
    println!("ab     = {:?}", a.mul(&b));
    println!("ba     = {:?}", b.mul(&a));
    println!("closed forms agree: {}",
        skew::ab_closed_form(&a, &b) == a.mul(&b) && skew::ba_closed_form(&a, &b) == b.mul(&a));

    // the level filtration Q > Q^2 > Q^3 > Q^4
    for i in 1..=4 {
        println!("|Q^{i}| = {}", skew::level_subgroup(i, 5).len());
    }

    // diagonal action of the multiplicative group and the Frobenius
    let c = FieldElement::new(2);
    println!("\nc-conjugate of {a:?} by c = {c}: {:?}", a.c_conjugate(c));
    println!("Frobenius image of {a:?}: {:?}", a.galois_act(1));
}
