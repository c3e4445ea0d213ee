//! Root systems from Cartan matrices: generation by reflection closure and
//! Weyl orbits of subsets of simple roots.
//!
//! ```bash
//! cargo run -p maxsolv --example root_systems
//! ```

use maxsolv::rootsys::{generate_roots, subsets_conjugate, weyl_orbit_subsets, CartanMatrix};
use std::collections::BTreeSet;

fn main() {
    for t in ["A1", "A2", "B2", "G2", "A2+A1"] {
        let cartan = CartanMatrix::of_type(t).unwrap();
        let rs = generate_roots(&cartan).unwrap();
        println!(
            "{t:6} rank {}  roots {:3}  positives {:3}  reduced {}",
            rs.rank(),
            rs.roots().len(),
            rs.positives().len(),
            rs.is_reduced()
        );
    }

    // The two simple roots of A2 are Weyl conjugate as subsets; in B2 the
    // long and the short one are not.
    let a2 = generate_roots(&CartanMatrix::of_type("A2").unwrap()).unwrap();
    let orbit = weyl_orbit_subsets(&a2, &BTreeSet::from([0]));
    println!("\nA2: orbit of {{a1}} has {} subsets", orbit.len());
    let b2 = generate_roots(&CartanMatrix::of_type("B2").unwrap()).unwrap();
    println!(
        "B2: {{a1}} ~ {{a2}}? {}",
        subsets_conjugate(&b2, &BTreeSet::from([0]), &BTreeSet::from([1]))
    );

    // Non-finite matrices are rejected with an explicit nonpositive-norm
    // witness.
    let err = CartanMatrix::new(vec!["x".into(), "y".into()], vec![vec![2, -2], vec![-2, 2]])
        .unwrap_err();
    println!("\naffine matrix rejected: {err}");
}
