//! Type-A ideals as right-justified staircase diagrams: row i records which
//! roots e_i - e_j belong to the ideal, and the box count equals the
//! dimension.
//!
//! Run with: cargo run --example ferrers_diagram

use adnil::construct::minimal_ideal;
use adnil::partitions::{validate, Kind};
use adnil::report::ferrers_ascii;

fn main() {
    let n = 6;
    for parts in [vec![4, 2], vec![3, 3], vec![6], vec![2, 2, 1, 1]] {
        let label = validate(Kind::A, n, &parts).unwrap().remove(0);
        let built = minimal_ideal(&label).unwrap();
        let starts = built.system.ferrers(&built.ideal).unwrap();
        let boxes: usize = starts.iter().map(|&s| n + 1 - s).sum();
        println!(
            "partition {}: row starts {starts:?}, {boxes} boxes",
            label.partition()
        );
        print!("{}", ferrers_ascii(n, &starts));
        println!();
    }
}
