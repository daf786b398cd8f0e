//! Construct the minimal-dimension ad-nilpotent ideal for one nilpotent
//! orbit and show how it sits between the graded ideals of its grading.
//!
//! Run with: cargo run --example minimal_ideal

use adnil::construct::{minimal_ideal, split_graded};
use adnil::dynkin::{graded_ideal, lower_bound_m, weighted_diagram};
use adnil::partitions::{validate, Kind};

fn main() {
    let label = validate(Kind::C, 6, &[4, 2]).unwrap().remove(0);
    let built = minimal_ideal(&label).unwrap();

    println!("orbit: type C, partition {}", label.partition());
    println!("dynkin element h = {:?}", built.element.entries());
    println!(
        "weighted diagram: {:?}",
        weighted_diagram(&built.system, &built.element).unwrap()
    );

    println!("\nper-part generator chunks:");
    for chunk in &built.generators.chunks {
        let names: Vec<String> = chunk.roots.iter().map(|r| r.to_string()).collect();
        println!(
            "  part {} (occurrence {}): {{{}}}",
            chunk.part_value,
            chunk.occurrence,
            names.join(", ")
        );
    }

    let m = lower_bound_m(&label).unwrap();
    println!("\nideal dimension: {}", built.ideal.dim());
    println!("lower bound m:   {m}");

    let q2 = graded_ideal(&built.system, &built.element, 2).unwrap();
    let q3 = graded_ideal(&built.system, &built.element, 3).unwrap();
    println!(
        "wedged between graded ideals: dim q3 = {} <= {} <= dim q2 = {}",
        q3.dim(),
        built.ideal.dim(),
        q2.dim()
    );

    let split = split_graded(&built.system, &built.element, &built.generators.roots).unwrap();
    println!(
        "grade-2 split: |C| = {}, |C+| = {}, |C-| = {}",
        split.in_c.len(),
        split.plus.len(),
        split.minus.len()
    );

    let roots: Vec<String> = built
        .ideal
        .roots(&built.system)
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!("\nall roots of the ideal: {}", roots.join(", "));
}
