//! The character table of G by the Burnside-Dixon method: 33 irreducibles,
//! degrees {1, 3, 7, 14, 24, 56}, three real characters.
//!
//! Run with: cargo run --example character_table

use realclass::build::Construction;
use realclass::chars::{dixon_table, ClassData};

fn main() {
    let cons = Construction::build().expect("construction");
    let cd = ClassData::new(&cons.group);
    let table = dixon_table(&cons.group, &cd).expect("character table");

    println!("{} irreducible characters over Q(zeta_{})", table.num_chars(), table.e);
    println!("degree multiset: {:?}", table.degree_multiset());
    let sum_sq: usize = table.degrees.iter().map(|d| d * d).sum();
    println!("sum of squared degrees: {sum_sq}");

    let real = table.real_characters(&cd).expect("real characters");
    println!("\nreal characters:");
    for &c in &real {
        println!("  degree {:>2}, Frobenius-Schur indicator {:+}", table.degrees[c], table.fs[c]);
    }

    table.verify_orthogonality(&cd).expect("orthogonality");
    println!("\nboth orthogonality relations hold exactly");
}
