//! Satake indices and their restricted root systems with multiplicities.
//!
//! ```bash
//! cargo run -p maxsolv --example satake_restriction
//! ```

use maxsolv::index::{restricted_system, SatakeIndex};

fn show(name: &str, text: &str) {
    let idx = SatakeIndex::parse(text).unwrap();
    let rrs = restricted_system(&idx).unwrap();
    println!(
        "{name}: restricted rank {}, reduced {}",
        rrs.rank(),
        rrs.base().is_reduced()
    );
    for (root, mult) in rrs.multiplicities() {
        if root.is_positive() {
            println!("    {:8} multiplicity {}", root.combo(rrs.labels()), mult);
        }
    }
    println!("    restriction of each absolute positive root:");
    for root in rrs.absolute().positives() {
        let image = match rrs.restriction_of(root) {
            Some(img) => img.combo(rrs.labels()),
            None => "0".into(),
        };
        println!(
            "      {:14} -> {}",
            root.combo(idx.cartan().labels()),
            image
        );
    }
    println!();
}

fn main() {
    // Quasi-split su(2,1): the involution swaps the two nodes, the
    // restricted system is the non-reduced BC1.
    show("su(2,1)", "type: A2\ntau: (1 2)\nfield: real\n");

    // sl(2,H): black end nodes, one restricted root of multiplicity 4.
    show("sl(2,H)", "type: A3\nblack: A3.1, A3.3\nfield: real\n");

    // A split form restricts identically.
    show("sl(3,R)", "type: A2\nfield: real\n");
}
