//! The realization catalog file format: serialize a bundled realization,
//! parse it back, and run the certificates on the parsed copy.
//!
//! ```bash
//! cargo run -p maxsolv --example realization_files
//! ```

use maxsolv::liealg::{invariant_nilpotents_check, su21_realization, LieRealization};

fn main() {
    let lr = su21_realization().unwrap();
    let text = lr.to_catalog_text();
    println!("--- su(2,1) in catalog format ---");
    for line in text.lines().take(12) {
        println!("{line}");
    }
    let total = text.lines().count();
    println!("... ({total} lines total)\n");

    let parsed = LieRealization::parse_catalog_text(&text).unwrap();
    parsed.validate().unwrap();
    println!(
        "parsed copy: dim {}, split Cartan {:?}",
        parsed.dim(),
        parsed.split_cartan()
    );
    println!(
        "designated anisotropic Cartan: {} generators",
        parsed.anisotropic_cartan().map(|v| v.len()).unwrap_or(0)
    );
    println!(
        "invariant-nilpotent check on the parsed copy: {}",
        if invariant_nilpotents_check(&parsed).unwrap().holds() {
            "HOLDS"
        } else {
            "FAILS"
        }
    );
}
