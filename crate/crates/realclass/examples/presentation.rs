//! The published polycyclic presentation: parsing, collection to normal
//! form, consistency, and the fingerprint comparison with the construction.
//!
//! Run with: cargo run --example presentation

use realclass::build::Construction;
use realclass::pcg;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/appendix.pc");
    let text = std::fs::read_to_string(path).expect("fixture");
    let pres = pcg::parse(&text).expect("parse");
    println!("generators: {:?}", pres.gens);
    println!("relative orders: {:?}", pres.rel_orders);

    for word in ["x1*x1", "c*s", "s*c^4", "x1^-1"] {
        let nf = pres.collect(&pres.parse_word(word).expect("word"));
        println!("collect({word}) = {nf:?}");
    }

    pcg::consistency_check(&pres).expect("consistency");
    println!("consistency: ok");

    let pcg_group = pcg::pc_group(&pres).expect("pc group");
    println!("presented group order: {}", pcg_group.group.order());

    let cons = Construction::build().expect("construction");
    let f1 = pcg::fingerprint(&cons.group, &cons.sylow2()).expect("fingerprint");
    let f2 = pcg::fingerprint(&pcg_group.group, &pcg_group.sylow2()).expect("fingerprint");
    println!("\nconstruction fingerprint: {f1:?}");
    println!("fingerprints equal: {}", f1 == f2);
}
