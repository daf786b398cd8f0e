//! Count the ad-nilpotent ideals of the small classical algebras. The
//! counts are the type Catalan numbers: Cat(n+1) for A_n, binom(2n, n) for
//! B_n and C_n, binom(2n, n) - binom(2n-2, n-1) for D_n.
//!
//! Run with: cargo run --example count_ideals

use adnil::partitions::Kind;
use adnil::roots::RootSystem;

fn main() {
    println!("{:<6} {:>9} {:>8}", "system", "positive", "ideals");
    let systems = [
        (Kind::A, 2),
        (Kind::A, 3),
        (Kind::A, 4),
        (Kind::A, 5),
        (Kind::A, 6),
        (Kind::B, 2),
        (Kind::B, 3),
        (Kind::C, 2),
        (Kind::C, 3),
        (Kind::D, 3),
        (Kind::D, 4),
    ];
    for (kind, size) in systems {
        let rs = RootSystem::build(kind, size).unwrap();
        let rank = rs.rank();
        println!(
            "{:<6} {:>9} {:>8}",
            format!("{kind}{rank}"),
            rs.num_positive(),
            rs.ideals().count()
        );
    }
}
