//! Desk-scale certification inside exact structure-constant realizations:
//! solvability by derived series, maximality by exhaustive adjunction, and
//! the invariant-nilpotent-subspace check for compact Cartans.
//!
//! ```bash
//! cargo run -p maxsolv --example certification
//! ```

use maxsolv::admissible::Catalog;
use maxsolv::index::{restricted_system, SatakeIndex};
use maxsolv::levi::ThetaSubset;
use maxsolv::liealg::{
    build_b_theta, certify_maximal_solvable, derived_series, invariant_nilpotents_check,
    realization_for, InvariantNilpotentsVerdict,
};

fn certify(name: &str, text: &str) {
    let idx = SatakeIndex::parse(text).unwrap();
    let rrs = restricted_system(&idx).unwrap();
    let cr = realization_for(&idx).expect("bundled realization");
    let lr = &cr.realization;
    println!(
        "{name}: realization {} of dimension {}",
        cr.form_id,
        lr.dim()
    );
    lr.validate().unwrap();
    println!("    structure table: antisymmetry and Jacobi hold exactly");

    for theta in ThetaSubset::power_set(rrs.rank()) {
        let admissible =
            maxsolv::admissible::is_admissible(&idx, &rrs, &theta, Catalog::bundled(), None)
                .unwrap()
                .admissible;
        if !admissible {
            continue;
        }
        let b = build_b_theta(cr, &rrs, &theta).unwrap();
        let chain: Vec<String> = derived_series(lr, &b)
            .iter()
            .map(|s| s.dim().to_string())
            .collect();
        let cert = certify_maximal_solvable(lr, &b).unwrap();
        println!(
            "    theta = {:5} dim {:2}  derived series {:12} {}  ({} adjunctions tested)",
            theta.display(&rrs),
            b.dim(),
            chain.join(","),
            if cert.is_maximal() {
                "MAXIMAL"
            } else {
                "NOT MAXIMAL"
            },
            cert.tested.len()
        );
    }

    match lr.anisotropic_cartan() {
        None => println!("    no designated anisotropic Cartan (not equal rank)"),
        Some(_) => match invariant_nilpotents_check(lr).unwrap() {
            InvariantNilpotentsVerdict::Holds { planes_tested } => println!(
                "    compact Cartan normalizes no invariant nilpotent subspace ({planes_tested} planes tested)"
            ),
            InvariantNilpotentsVerdict::Counterexample { .. } => println!("    counterexample found!"),
        },
    }
    println!();
}

fn main() {
    certify("sl(2,R)", "type: A1\nfield: real\n");
    certify("su(2,1)", "type: A2\ntau: (1 2)\nfield: real\n");
    certify("sp(4,R)", "type: C2\nfield: real\n");
    certify("split G2 (closed)", "type: G2\nfield: closed\n");
}
