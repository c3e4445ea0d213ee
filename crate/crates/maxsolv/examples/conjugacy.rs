//! The conjugacy verdict: exact on the theta component, conditional on the
//! torus parameter.
//!
//! ```bash
//! cargo run -p maxsolv --example conjugacy
//! ```

use maxsolv::admissible::Catalog;
use maxsolv::classify::{conjugate_classes, enumerate_classes};
use maxsolv::index::{restricted_system, SatakeIndex};
use maxsolv::rootsys::subsets_conjugate;

fn main() {
    let idx = SatakeIndex::parse("type: A2\nfield: real\n").unwrap(); // sl(3,R)
    let rrs = restricted_system(&idx).unwrap();
    let all = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
    let d1 = all.iter().find(|d| d.theta.display(&rrs) == "a1").unwrap();
    let d2 = all.iter().find(|d| d.theta.display(&rrs) == "a2").unwrap();

    // The subsets {a1} and {a2} lie in one Weyl orbit, yet the classes are
    // distinct: conjugacy demands equality of the subsets on the nose.
    println!(
        "{{a1}} and {{a2}} Weyl conjugate: {}",
        subsets_conjugate(rrs.base(), d1.theta.indices(), d2.theta.indices())
    );
    println!(
        "class(a1) vs class(a2): {}",
        conjugate_classes(d1, d2).unwrap().summary()
    );
    println!(
        "class(a1) vs class(a1): {}",
        conjugate_classes(d1, d1).unwrap().summary()
    );

    // With equal theta the verdict depends on the torus parameter, which the
    // combinatorial layer carries as an opaque slot.
    let with_t0 = d1.clone().with_torus_slot("T0");
    let with_t1 = d1.clone().with_torus_slot("T1");
    println!(
        "same theta, slots T0 vs T0: {}",
        conjugate_classes(&with_t0, &with_t0).unwrap().summary()
    );
    println!(
        "same theta, slots T0 vs T1: {}",
        conjugate_classes(&with_t0, &with_t1).unwrap().summary()
    );
}
