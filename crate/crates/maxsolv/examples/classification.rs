//! The main pipeline: enumerate the classes of maximal connected solvable
//! subgroups for a few bundled indices.
//!
//! ```bash
//! cargo run -p maxsolv --example classification
//! ```

use maxsolv::admissible::Catalog;
use maxsolv::classify::enumerate_classes;
use maxsolv::index::{restricted_system, SatakeIndex};

fn classify(name: &str, text: &str) {
    let idx = SatakeIndex::parse(text).unwrap();
    let rrs = restricted_system(&idx).unwrap();
    let classes = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
    println!("{name}: {} class(es)", classes.len());
    for d in &classes {
        let factors = if d.levi_factors.is_empty() {
            "-".to_string()
        } else {
            d.levi_factors
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!(
            "    theta = {:6} dim_B = {:2}  levi factors: {}",
            d.theta.display(&rrs),
            d.dim_b,
            factors
        );
    }
    println!();
}

fn main() {
    // One Borel over the algebraic closure.
    classify("split A2 (closed)", "type: A2\nfield: closed\n");
    // The Borel and the compact Cartan.
    classify("sl(2,R)", "type: A1\nfield: real\n");
    // Five classes; adjacent pairs give non-equal-rank Levis.
    classify("sl(4,R)", "type: A3\nfield: real\n");
    // Rank one, non-reduced restricted system.
    classify("su(2,1)", "type: A2\ntau: (1 2)\nfield: real\n");
    // A quasi-split form without a bundled realization still classifies.
    classify("su(2,2)", "type: A3\ntau: (1 3)\nfield: real\n");
}
