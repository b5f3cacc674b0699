//! Conjugacy classes of G and the three real ones, including the witness
//! that 1 + x^2 is not conjugate to its inverse.
//!
//! Run with: cargo run --example real_classes

use realclass::build::{Construction, GroupElement};
use realclass::gf::{FieldElement, ZERO};
use realclass::skew::SkewUnit;

fn main() {
    let cons = Construction::build().expect("construction");
    let g = &cons.group;

    let classes = g.conjugacy_classes();
    println!("G has {} conjugacy classes", classes.len());
    let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
    println!("class sizes: {sizes:?}");

    println!("\nreal classes:");
    for c in classes.iter().filter(|c| c.is_real) {
        let rep = GroupElement::from_key(5, c.rep);
        println!("  size {:>2}, representative {:?}", c.size, rep.unit);
    }

    // the non-reality witness: b = 1 + x^2 versus its inverse
    let b = SkewUnit::new(5, vec![ZERO, FieldElement::new(1), ZERO, ZERO]);
    let b_inv = b.inverse();
    let conjugate = g.elems().iter().any(|&h| g.conj(b.key(), h) == b_inv.key());
    println!("\nb = {b:?}, b^-1 = {b_inv:?}");
    println!("b conjugate to b^-1 in G: {conjugate}");
}
