//! Index assignments close up: place each part's eigenvalue string into
//! positions, verify the ordering properties, and apply the type-A
//! involution that pairs off the grade-2 roots.
//!
//! Run with: cargo run --example index_maps

use adnil::construct::{iota, minimal_ideal, split_graded, verify_assignment, IndexAssignment};
use adnil::partitions::{validate, Kind};

fn main() {
    let label = validate(Kind::A, 6, &[4, 2]).unwrap().remove(0);
    let built = minimal_ideal(&label).unwrap();

    println!("canonical placement for type A, partition 4,2:");
    for (i, ins) in built.assignment.instances().iter().enumerate() {
        let map: Vec<String> = ins
            .domain
            .iter()
            .map(|&v| format!("{v}->{}", built.assignment.position(i, v).unwrap()))
            .collect();
        println!(
            "  part {}_{}: {}",
            ins.value,
            ins.occurrence,
            map.join(", ")
        );
    }
    let report = verify_assignment(&label, &built.assignment);
    for check in &report.checks {
        println!(
            "  property {:<32} {}",
            check.name,
            if check.passed { "ok" } else { "FAIL" }
        );
    }

    // an alternative placement that also satisfies every property
    let alt = IndexAssignment::from_maps(
        &label,
        &[
            vec![(3, 1), (1, 3), (-1, 5), (-3, 6)],
            vec![(1, 2), (-1, 4)],
        ],
    )
    .unwrap();
    println!(
        "\nalternative placement verifies: {}",
        verify_assignment(&label, &alt).passed()
    );

    // the involution on the grade-2 slice
    let coords = built.element.eval_coords();
    let split = split_graded(&built.system, &built.element, &built.generators.roots).unwrap();
    println!("\ninvolution on the grade-2 roots (C fixed, C+ and C- swapped):");
    for root in built.system.positive_roots() {
        if root.eval(&coords) != 2 {
            continue;
        }
        let image = iota(&built.system, &built.assignment, root).unwrap();
        let class = if split.in_c.contains(root) {
            "C "
        } else if split.plus.contains(root) {
            "C+"
        } else {
            "C-"
        };
        println!("  {class}  {root}  <->  {image}");
    }
}
