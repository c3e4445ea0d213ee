//! Field mode `oracle`: classification over other fields of characteristic
//! zero with a caller-supplied admissibility test.
//!
//! The engine decides everything combinatorial; only "does this Levi factor
//! admit an anisotropic maximal torus over k" is delegated. All-black
//! factors never reach the oracle: the anisotropic kernel is anisotropic by
//! definition.
//!
//! ```bash
//! cargo run -p maxsolv --example oracle_mode
//! ```

use maxsolv::admissible::Catalog;
use maxsolv::classify::enumerate_classes;
use maxsolv::index::{restricted_system, SatakeIndex};

fn main() {
    let idx = SatakeIndex::parse("type: A3\nfield: oracle\n").unwrap();
    let rrs = restricted_system(&idx).unwrap();
    let catalog = Catalog::bundled();

    // Oracle mimicking an algebraically closed field: nothing with white
    // nodes admits an anisotropic torus.
    let closed_like = |_: &SatakeIndex| false;
    let classes = enumerate_classes(&idx, &rrs, catalog, Some(&closed_like)).unwrap();
    println!("deny-all oracle: {} class(es)", classes.len());

    // Oracle mimicking the reals for a split index: a split factor of type
    // A_m admits an anisotropic torus only for m = 1 (so(2) inside sl(2)).
    let real_like = |factor: &SatakeIndex| factor.rank() == 1;
    let classes = enumerate_classes(&idx, &rrs, catalog, Some(&real_like)).unwrap();
    println!("rank-one oracle: {} class(es)", classes.len());
    for d in &classes {
        println!(
            "    theta = {:6} dim_B = {}",
            d.theta.display(&rrs),
            d.dim_b
        );
    }

    // Without an oracle, oracle mode refuses rather than guesses.
    let err = enumerate_classes(&idx, &rrs, catalog, None).unwrap_err();
    println!("no oracle supplied: {err}");
}
