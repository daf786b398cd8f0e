//! Exhaustive certification at one rank: enumerate every ad-nilpotent
//! ideal, compute each associated orbit with the exact oracle, and check
//! that every orbit's minimum dimension equals the lower bound and that the
//! constructed ideal attains it.
//!
//! Run with: cargo run --release --example certify_minima [TYPE] [SIZE]

use adnil::certify::certify;
use adnil::oracle::OrbitConfig;
use adnil::partitions::Kind;
use adnil::report::certify_text;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let kind = Kind::parse(args.get(1).map(String::as_str).unwrap_or("D")).unwrap();
    let size: usize = args
        .get(2)
        .map(|s| s.parse().expect("size must be a number"))
        .unwrap_or(4);

    let cfg = OrbitConfig::default();
    match certify(kind, size, &cfg) {
        Ok(report) => {
            print!("{}", certify_text(&report, cfg.seed, cfg.trials));
            if !report.all_ok() {
                std::process::exit(2);
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}
