//! The X^6 variant: one more truncation level gives a group of order 344064
//! with an all-involution normal subgroup of order 256 and at least four
//! real classes.
//!
//! Run with: cargo run --example variant_x6 (takes a few minutes)

use realclass::build;

fn main() {
    let (cons, checks) = build::verify_variant6();
    if let Some(cons) = &cons {
        println!("built the X^6 group of order {}", cons.group.order());
    }
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        println!("[{status}] {}", c.claim);
        if let Some(w) = &c.witness {
            println!("       witness: {w}");
        }
    }
}
