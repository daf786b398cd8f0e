//! The minimal dimension is strictly monotone along the dominance order on
//! type-A orbits: walk every covering move and watch m drop.
//!
//! Run with: cargo run --example dominance_monotonicity [N]

use adnil::formula::{check_monotone, m_linear};
use adnil::partitions::Partition;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a number"))
        .unwrap_or(6);

    for lambda in Partition::all(n) {
        let m = m_linear(&lambda);
        let covers: Vec<String> = lambda
            .covered_by()
            .iter()
            .map(|d| format!("{d} (m={})", m_linear(d)))
            .collect();
        println!(
            "{lambda} (m={m}) covers {}",
            if covers.is_empty() {
                "nothing".to_string()
            } else {
                covers.join(", ")
            }
        );
    }

    let report = check_monotone(n);
    println!(
        "\nchecked {} covering moves: {}",
        report.covers_checked,
        if report.passed() {
            "strictly decreasing everywhere"
        } else {
            "VIOLATIONS FOUND"
        }
    );
}
