//! Admissibility of subsets: the equal-rank test per Levi factor against the
//! bundled real-form catalog.
//!
//! ```bash
//! cargo run -p maxsolv --example admissibility
//! ```

use maxsolv::admissible::{is_admissible, Catalog};
use maxsolv::index::{restricted_system, SatakeIndex};
use maxsolv::levi::ThetaSubset;

fn table(name: &str, text: &str) {
    let idx = SatakeIndex::parse(text).unwrap();
    let rrs = restricted_system(&idx).unwrap();
    let catalog = Catalog::bundled();
    println!("{name}:");
    for theta in ThetaSubset::power_set(rrs.rank()) {
        let cert = is_admissible(&idx, &rrs, &theta, catalog, None).unwrap();
        let factors = if cert.factors.is_empty() {
            "trivial derived Levi".to_string()
        } else {
            cert.factors
                .iter()
                .map(|f| f.describe())
                .collect::<Vec<_>>()
                .join("; ")
        };
        println!(
            "    {:6} {}  [{}]",
            theta.display(&rrs),
            if cert.admissible {
                "admissible    "
            } else {
                "not admissible"
            },
            factors
        );
    }
    println!();
}

fn main() {
    table("sl(4,R)", "type: A3\nfield: real\n");
    table("su(2,1)", "type: A2\ntau: (1 2)\nfield: real\n");
    // Over an algebraically closed field only the empty subset survives.
    table("split A2, closed", "type: A2\nfield: closed\n");
}
