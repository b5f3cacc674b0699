//! Arithmetic in GF(8): multiplication, the trace map onto GF(2), and the
//! additive map f(a) = a b^4 + a^4 b whose kernel is {0, b}.
//!
//! Run with: cargo run --example field_basics

use realclass::gf::{self, FieldElement};

fn main() {
    println!("multiplication table of GF(8), modulus t^3 + t + 1:");
    for a in gf::all_elements() {
        let row: Vec<String> = gf::all_elements().map(|b| a.mul(b).to_string()).collect();
        println!("  {}", row.join(" "));
    }

    println!("\ntrace Tr(a) = a + a^2 + a^4:");
    for a in gf::all_elements() {
        println!("  Tr({a}) = {}", a.trace());
    }
    println!("trace kernel: {:?}", gf::trace_kernel());

    let b = FieldElement::new(3);
    let kernel: Vec<FieldElement> = gf::all_elements()
        .filter(|&a| gf::f_map(a, b).is_zero())
        .collect();
    println!("\nkernel of f(a) = a*{b}^4 + a^4*{b}: {kernel:?}");
}
