//! Build standard triples {H, X, Y} over the constructed generator sets and
//! verify the bracket identities exactly. Generator sets in which two roots
//! differ by a root admit no summand-wise Y; those cases are reported as
//! typed refusals rather than errors.
//!
//! Run with: cargo run --example standard_triples

use adnil::construct::{minimal_ideal, standard_triple_for, TripleOutcome};
use adnil::exact::format_rational;
use adnil::oracle::verify_triple;
use adnil::partitions::{all_labels, Kind};

fn main() {
    for (kind, size) in [(Kind::A, 5), (Kind::C, 3), (Kind::B, 3), (Kind::D, 4)] {
        println!("type {kind}, size {size}:");
        for label in all_labels(kind, size).unwrap() {
            let built = minimal_ideal(&label).unwrap();
            match standard_triple_for(&built).unwrap() {
                TripleOutcome::Triple(t) => {
                    let ok = verify_triple(&built.system, &t).unwrap();
                    let terms: Vec<String> = t
                        .y_terms
                        .iter()
                        .map(|(r, a)| format!("{}*Y[{r}]", format_rational(a)))
                        .collect();
                    println!(
                        "  {:<12} Y = {:<46} brackets {}",
                        label.to_string(),
                        if terms.is_empty() {
                            "0".to_string()
                        } else {
                            terms.join(" + ")
                        },
                        if ok { "verified" } else { "FAILED" }
                    );
                }
                TripleOutcome::NoTriple { reason } => {
                    println!(
                        "  {:<12} no summand-wise triple: {reason}",
                        label.to_string()
                    );
                }
            }
        }
        println!();
    }
}
