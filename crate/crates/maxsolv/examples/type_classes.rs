//! Types of semisimple elements: Weyl orbits of subsets of the restricted
//! simple roots, with orbit-constant admissibility.
//!
//! ```bash
//! cargo run -p maxsolv --example type_classes
//! ```

use maxsolv::admissible::Catalog;
use maxsolv::classify::type_classes;
use maxsolv::index::{restricted_system, SatakeIndex};

fn show(name: &str, text: &str) {
    let idx = SatakeIndex::parse(text).unwrap();
    let rrs = restricted_system(&idx).unwrap();
    let tcs = type_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
    println!("{name}: {} type classes", tcs.len());
    for tc in &tcs {
        let members: Vec<String> = tc.members.iter().map(|t| t.display(&rrs)).collect();
        println!(
            "    {{ {} }}  admissible: {}",
            members.join(", "),
            if tc.admissible { "yes" } else { "no" }
        );
    }
    println!();
}

fn main() {
    show("sl(3,R), restricted A2", "type: A2\nfield: real\n");
    show("sl(2,R), restricted A1", "type: A1\nfield: real\n");
    show(
        "su(2,1), restricted BC1",
        "type: A2\ntau: (1 2)\nfield: real\n",
    );
    show("sl(5,R), restricted A4", "type: A4\nfield: real\n");
}
