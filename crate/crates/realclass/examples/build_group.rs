//! The full construction: the subgroup chain X < Y < P inside Q, and the
//! semidirect product G of order 43008 with the Frobenius group of order 21.
//!
//! Run with: cargo run --example build_group

use realclass::build::Construction;

fn main() {
    let cons = Construction::build().expect("construction");
    let chain = &cons.chain;

    println!("|Q|   = {}", chain.q().len());
    println!("|Q^2| = {}", chain.q_levels[2].len());
    println!("|Q^3| = {}", chain.q_levels[3].len());
    println!("|Q^4| = {}", chain.q_levels[4].len());
    println!("|X|   = {}   (commutators of the Frobenius action on Q^3, with Q^4)", chain.x.len());
    println!("|Y|   = {}  (commutators of the diagonal action on Q^2, with X)", chain.y.len());
    println!("|P|   = {} (commutators of the diagonal action on Q, with Y)", chain.p.len());
    println!("|G|   = {}", cons.group.order());

    let p = cons.sylow2();
    let series = p.upper_central_series();
    let orders: Vec<usize> = series.iter().map(|s| s.len()).collect();
    println!("\nupper central series of P: orders {orders:?}");
    println!("derived subgroup of P has order {}", p.derived_subgroup().len());
}
