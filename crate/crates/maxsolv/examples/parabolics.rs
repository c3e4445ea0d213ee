//! Standard parabolics over the subsets of the restricted simple roots:
//! Levi sub-index, nilradical inventory, torus dimensions.
//!
//! ```bash
//! cargo run -p maxsolv --example parabolics
//! ```

use maxsolv::index::{restricted_system, SatakeIndex};
use maxsolv::levi::{dim_b, parabolic, ThetaSubset};

fn main() {
    let idx = SatakeIndex::parse("type: A2\nfield: real\n").unwrap(); // sl(3,R)
    let rrs = restricted_system(&idx).unwrap();
    println!("sl(3,R): theta | dim_S | levi rank | dim_nilrad | dim_A | dim_B");
    for theta in ThetaSubset::power_set(rrs.rank()) {
        let pd = parabolic(&idx, &rrs, &theta).unwrap();
        println!(
            "    {:5} | {:5} | {:9} | {:10} | {:5} | {}",
            theta.display(&rrs),
            pd.dim_s_theta,
            pd.levi_absolute_rank,
            pd.dim_nilrad,
            pd.dim_a,
            dim_b(&pd)
        );
    }

    // su(2,1): the minimal parabolic has a one-dimensional anisotropic
    // central torus (dim_A = 1) next to the one-dimensional split part.
    let idx = SatakeIndex::parse("type: A2\ntau: (1 2)\nfield: real\n").unwrap();
    let rrs = restricted_system(&idx).unwrap();
    let pd = parabolic(&idx, &rrs, &ThetaSubset::empty()).unwrap();
    println!(
        "\nsu(2,1), minimal parabolic: r = {}, r_theta = {}, dim_S = {}, dim_A = {}",
        pd.absolute_rank, pd.levi_absolute_rank, pd.dim_s_theta, pd.dim_a
    );
    println!(
        "nilradical inventory: {}",
        pd.nilrad_restricted
            .iter()
            .map(|(root, m)| format!("{}(x{m})", root.combo(rrs.labels())))
            .collect::<Vec<_>>()
            .join(" ")
    );
}
