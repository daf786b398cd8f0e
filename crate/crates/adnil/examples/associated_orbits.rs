//! The exact-arithmetic orbit oracle: take arbitrary ad-nilpotent ideals,
//! form a generic element with random integer coefficients, and read off
//! the associated orbit from exact ranks of matrix powers.
//!
//! Run with: cargo run --example associated_orbits

use adnil::oracle::{associated_orbit, OrbitConfig};
use adnil::partitions::Kind;
use adnil::roots::RootSystem;
use std::collections::BTreeMap;

fn main() {
    let cfg = OrbitConfig::default();
    let rs = RootSystem::build(Kind::D, 4).unwrap();

    // histogram: how many ideals map to each orbit, and the dimension range
    let mut by_orbit: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new();
    for ideal in rs.ideals() {
        let orbit = associated_orbit(&rs, &ideal, &cfg).unwrap();
        let entry = by_orbit
            .entry(orbit.to_string())
            .or_insert((0, usize::MAX, 0));
        entry.0 += 1;
        entry.1 = entry.1.min(ideal.dim());
        entry.2 = entry.2.max(ideal.dim());
    }

    println!("all {} ideals of D4 grouped by associated orbit:", 50);
    println!(
        "{:<14} {:>7} {:>9} {:>9}",
        "orbit", "ideals", "min dim", "max dim"
    );
    for (orbit, (count, lo, hi)) in &by_orbit {
        println!("{orbit:<14} {count:>7} {lo:>9} {hi:>9}");
    }

    // one concrete ideal in detail
    let gens = [
        adnil::roots::Root::new(vec![1, 0, 0, -1]),
        adnil::roots::Root::new(vec![0, 1, 1, 0]),
    ];
    let ideal = rs.close_upward(&gens).unwrap();
    let orbit = associated_orbit(&rs, &ideal, &cfg).unwrap();
    let names: Vec<String> = ideal.roots(&rs).iter().map(|r| r.to_string()).collect();
    println!("\nclosure of {{e1-e4, e2+e3}}: {{{}}}", names.join(", "));
    println!("dimension {}, associated orbit {orbit}", ideal.dim());
}
