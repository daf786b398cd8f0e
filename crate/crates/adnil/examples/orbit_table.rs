//! Print the per-orbit table of one algebra: every orbit partition, the
//! lower bound m, and the dimension of the constructed ideal.
//!
//! Run with: cargo run --example orbit_table [TYPE] [SIZE]

use adnil::partitions::Kind;
use adnil::report::{table_rows, table_text};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let kind = Kind::parse(args.get(1).map(String::as_str).unwrap_or("D")).unwrap();
    let size: usize = args
        .get(2)
        .map(|s| s.parse().expect("size must be a number"))
        .unwrap_or(4);

    let rows = table_rows(kind, size).unwrap();
    print!("{}", table_text(kind, size, &rows));
}
