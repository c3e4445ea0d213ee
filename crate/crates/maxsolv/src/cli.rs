//! Command-line surface.
//!
//! One thin binary; every subcommand parses an index file, runs the
//! corresponding library stage, and emits a deterministic report. Exit
//! codes: 0 success, 1 invalid input (with the violated invariant), 2
//! certification failure (a theorem-check did not hold).

use crate::admissible::{AdmissibleError, Catalog};
use crate::classify::{
    conjugate_classes, enumerate_classes, membership_report, type_classes, ClassifyError,
};
use crate::index::{restricted_system, FieldMode, IndexError, RestrictedRootSystem, SatakeIndex};
use crate::levi::{dim_b, parabolic, LeviError, ThetaSubset};
use crate::liealg::{
    build_b_theta, certify_maximal_solvable, derived_series, invariant_nilpotents_check,
    realization_for, weight_decomposition, LieError,
};
use crate::report::Report;
use clap::{Parser, Subcommand};
use num::Zero;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Levi(#[from] LeviError),
    #[error(transparent)]
    Admissible(#[from] AdmissibleError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("field mode `oracle` needs a programmatic oracle; use the library API")]
    OracleModeUnsupported,
}

#[derive(Parser, Debug)]
#[command(
    name = "maxsolv",
    about = "Classify maximal connected solvable subgroups of semisimple groups given by Satake indices",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as a single JSON document.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the restricted root inventory with multiplicities.
    Roots { index: PathBuf },
    /// Print the restriction map from absolute positive roots.
    Restrict { index: PathBuf },
    /// Print the parabolic descriptor of a subset of restricted simples.
    Parabolic {
        index: PathBuf,
        /// Restricted simple roots, e.g. `a1,a3`; empty for the minimal parabolic.
        #[arg(long, default_value = "")]
        theta: String,
    },
    /// Print the admissibility certificate table over all subsets.
    Admissible { index: PathBuf },
    /// Enumerate the classes of maximal connected solvable subgroups.
    Classify { index: PathBuf },
    /// Print the Weyl-orbit type classes of subsets of the restricted simples.
    Types { index: PathBuf },
    /// Conjugacy verdict for two classes named by their subsets.
    Conjugate {
        index: PathBuf,
        #[arg(long)]
        theta1: String,
        #[arg(long)]
        theta2: String,
        /// Optional opaque torus-class parameter of the first class.
        #[arg(long)]
        slot1: Option<String>,
        /// Optional opaque torus-class parameter of the second class.
        #[arg(long)]
        slot2: Option<String>,
    },
    /// Report the class containing an element whose semisimple part has the given type.
    Membership {
        index: PathBuf,
        #[arg(long, default_value = "")]
        theta: String,
    },
    /// Run the full Lie-algebra certification for the index's bundled realization.
    Verify { index: PathBuf },
    /// List bundled realizations and the real-form catalog.
    Catalog,
}

fn load_index(path: &Path) -> Result<(SatakeIndex, RestrictedRootSystem), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let idx = SatakeIndex::parse(&text)?;
    let rrs = restricted_system(&idx)?;
    Ok((idx, rrs))
}

fn catalog() -> Result<Catalog, CliError> {
    Ok(Catalog::from_env_or_bundled()?)
}

fn reject_oracle_mode(idx: &SatakeIndex) -> Result<(), CliError> {
    if idx.field() == FieldMode::Oracle {
        return Err(CliError::OracleModeUnsupported);
    }
    Ok(())
}

fn index_header(idx: &SatakeIndex, report: &mut Report) {
    report.index_digest = Some(idx.digest());
    for line in idx.canonical_text().lines() {
        report.header.push(line.to_string());
    }
}

/// Runs one command line (`args[0]` is the program name) and returns the
/// report. Errors map to exit code 1 in `main_entry`. The `--json` flag
/// only selects the rendering, never the content.
pub fn run(args: &[&str]) -> Result<Report, CliError> {
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
    execute(&cli.command)
}

fn execute(command: &Command) -> Result<Report, CliError> {
    let report = match command {
        Command::Roots { index } => {
            let (idx, rrs) = load_index(index)?;
            let mut r = Report::new(format!("roots {}", index.display()));
            index_header(&idx, &mut r);
            r.header.push(format!(
                "restricted rank {}; absolute roots {}; reduced: {}",
                rrs.rank(),
                rrs.absolute().roots().len(),
                rrs.base().is_reduced()
            ));
            r.columns = vec!["root".into(), "positive".into(), "multiplicity".into()];
            for root in rrs.base().roots() {
                r.rows.push(vec![
                    root.combo(rrs.labels()),
                    if root.is_positive() {
                        "yes".into()
                    } else {
                        "no".into()
                    },
                    rrs.multiplicity(root).unwrap_or(0).to_string(),
                ]);
            }
            r
        }
        Command::Restrict { index } => {
            let (idx, rrs) = load_index(index)?;
            let mut r = Report::new(format!("restrict {}", index.display()));
            index_header(&idx, &mut r);
            r.columns = vec![
                "absolute_root".into(),
                "restricted".into(),
                "multiplicity".into(),
            ];
            let labels = idx.cartan().labels().to_vec();
            for root in rrs.absolute().positives() {
                let (image, mult) = match rrs.restriction_of(root) {
                    Some(img) => (
                        img.combo(rrs.labels()),
                        rrs.multiplicity(img).unwrap_or(0).to_string(),
                    ),
                    None => ("0".into(), "-".into()),
                };
                r.rows.push(vec![root.combo(&labels), image, mult]);
            }
            r
        }
        Command::Parabolic { index, theta } => {
            let (idx, rrs) = load_index(index)?;
            let theta = ThetaSubset::parse(&rrs, theta)?;
            let pd = parabolic(&idx, &rrs, &theta)?;
            let mut r = Report::new(format!("parabolic {}", index.display()));
            index_header(&idx, &mut r);
            r.columns = vec!["field".into(), "value".into()];
            let levi_type = if pd.levi_subindex.cartan().is_empty() {
                "-".to_string()
            } else {
                pd.levi_subindex.cartan().type_name()
            };
            let nilrad = pd
                .nilrad_restricted
                .iter()
                .map(|(root, m)| format!("{}(x{m})", root.combo(rrs.labels())))
                .collect::<Vec<_>>()
                .join(" ");
            r.rows = vec![
                vec!["theta".into(), theta.display(&rrs)],
                vec!["dim_S_theta".into(), pd.dim_s_theta.to_string()],
                vec!["levi".into(), levi_type],
                vec![
                    "levi_nodes".into(),
                    if pd.levi_nodes.is_empty() {
                        "-".into()
                    } else {
                        pd.levi_nodes
                            .iter()
                            .map(|&i| idx.cartan().labels()[i].clone())
                            .collect::<Vec<_>>()
                            .join(",")
                    },
                ],
                vec![
                    "nilradical".into(),
                    if nilrad.is_empty() {
                        "-".into()
                    } else {
                        nilrad
                    },
                ],
                vec!["dim_nilrad".into(), pd.dim_nilrad.to_string()],
                vec!["dim_A".into(), pd.dim_a.to_string()],
                vec!["absolute_rank".into(), pd.absolute_rank.to_string()],
                vec![
                    "levi_absolute_rank".into(),
                    pd.levi_absolute_rank.to_string(),
                ],
                vec!["dim_B".into(), dim_b(&pd).to_string()],
            ];
            r
        }
        Command::Admissible { index } => {
            let (idx, rrs) = load_index(index)?;
            reject_oracle_mode(&idx)?;
            let catalog = catalog()?;
            let mut r = Report::new(format!("admissible {}", index.display()));
            index_header(&idx, &mut r);
            r.columns = vec!["theta".into(), "admissible".into(), "factors".into()];
            for theta in ThetaSubset::power_set(rrs.rank()) {
                let cert = crate::admissible::is_admissible(&idx, &rrs, &theta, &catalog, None)?;
                let factors = if cert.factors.is_empty() {
                    "-".to_string()
                } else {
                    cert.factors
                        .iter()
                        .map(|f| f.describe())
                        .collect::<Vec<_>>()
                        .join("; ")
                };
                r.rows.push(vec![
                    theta.display(&rrs),
                    if cert.admissible {
                        "yes".into()
                    } else {
                        "no".into()
                    },
                    factors,
                ]);
            }
            r
        }
        Command::Classify { index } => {
            let (idx, rrs) = load_index(index)?;
            reject_oracle_mode(&idx)?;
            let catalog = catalog()?;
            let classes = enumerate_classes(&idx, &rrs, &catalog, None)?;
            let mut r = Report::new(format!("classify {}", index.display()));
            index_header(&idx, &mut r);
            r.columns = vec![
                "theta".into(),
                "dim_B".into(),
                "dim_S".into(),
                "dim_nilrad".into(),
                "dim_A".into(),
                "levi_factors".into(),
                "torus_slot".into(),
            ];
            for d in &classes {
                let factors = if d.levi_factors.is_empty() {
                    "-".to_string()
                } else {
                    d.levi_factors
                        .iter()
                        .map(|f| f.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                r.rows.push(vec![
                    d.theta.display(&rrs),
                    d.dim_b.to_string(),
                    d.parabolic.dim_s_theta.to_string(),
                    d.parabolic.dim_nilrad.to_string(),
                    d.parabolic.dim_a.to_string(),
                    factors,
                    d.torus_slot.clone().unwrap_or_else(|| "unbound".into()),
                ]);
            }
            r
        }
        Command::Types { index } => {
            let (idx, rrs) = load_index(index)?;
            reject_oracle_mode(&idx)?;
            let catalog = catalog()?;
            let tcs = type_classes(&idx, &rrs, &catalog, None)?;
            let mut r = Report::new(format!("types {}", index.display()));
            index_header(&idx, &mut r);
            r.columns = vec!["representatives".into(), "size".into(), "admissible".into()];
            for tc in &tcs {
                r.rows.push(vec![
                    tc.members
                        .iter()
                        .map(|t| t.display(&rrs))
                        .collect::<Vec<_>>()
                        .join(" | "),
                    tc.members.len().to_string(),
                    if tc.admissible {
                        "yes".into()
                    } else {
                        "no".into()
                    },
                ]);
            }
            r
        }
        Command::Conjugate {
            index,
            theta1,
            theta2,
            slot1,
            slot2,
        } => {
            let (idx, rrs) = load_index(index)?;
            reject_oracle_mode(&idx)?;
            let catalog = catalog()?;
            let t1 = ThetaSubset::parse(&rrs, theta1)?;
            let t2 = ThetaSubset::parse(&rrs, theta2)?;
            let mut d1 = membership_report(&idx, &rrs, &catalog, None, &t1)?;
            let mut d2 = membership_report(&idx, &rrs, &catalog, None, &t2)?;
            if let Some(s) = slot1 {
                d1 = d1.with_torus_slot(s);
            }
            if let Some(s) = slot2 {
                d2 = d2.with_torus_slot(s);
            }
            let verdict = conjugate_classes(&d1, &d2)?;
            let mut r = Report::new(format!(
                "conjugate {} --theta1 {} --theta2 {}",
                index.display(),
                t1.display(&rrs),
                t2.display(&rrs)
            ));
            index_header(&idx, &mut r);
            r.columns = vec!["field".into(), "value".into()];
            r.rows = vec![
                vec!["theta1".into(), t1.display(&rrs)],
                vec!["theta2".into(), t2.display(&rrs)],
                vec![
                    "slot1".into(),
                    slot1.clone().unwrap_or_else(|| "unbound".into()),
                ],
                vec![
                    "slot2".into(),
                    slot2.clone().unwrap_or_else(|| "unbound".into()),
                ],
                vec!["verdict".into(), verdict.summary()],
            ];
            r
        }
        Command::Membership { index, theta } => {
            let (idx, rrs) = load_index(index)?;
            reject_oracle_mode(&idx)?;
            let catalog = catalog()?;
            let t = ThetaSubset::parse(&rrs, theta)?;
            let d = membership_report(&idx, &rrs, &catalog, None, &t)?;
            let mut r = Report::new(format!("membership {}", index.display()));
            index_header(&idx, &mut r);
            r.columns = vec!["field".into(), "value".into()];
            r.rows = vec![
                vec!["type".into(), t.display(&rrs)],
                vec!["dim_B".into(), d.dim_b.to_string()],
                vec!["dim_nilrad".into(), d.parabolic.dim_nilrad.to_string()],
                vec!["torus_slot".into(), "unbound".into()],
            ];
            r
        }
        Command::Verify { index } => {
            let (idx, rrs) = load_index(index)?;
            reject_oracle_mode(&idx)?;
            verify_report(index, &idx, &rrs)?
        }
        Command::Catalog => {
            let catalog = catalog()?;
            let mut r = Report::new("catalog");
            r.columns = vec!["kind".into(), "name".into(), "detail".into()];
            for cr in crate::liealg::bundled_realizations() {
                r.rows.push(vec![
                    "realization".into(),
                    cr.form_id.clone(),
                    format!(
                        "dim {}; {}; field {}",
                        cr.realization.dim(),
                        cr.index.canonical_text().lines().next().unwrap_or(""),
                        cr.index.field()
                    ),
                ]);
            }
            for entry in catalog.entries() {
                r.rows.push(vec![
                    "real-form".into(),
                    entry.label.to_string(),
                    format!(
                        "{}; rank {}; compact rank {}",
                        entry.label.diagram, entry.label.rank, entry.label.compact_rank
                    ),
                ]);
            }
            r
        }
    };
    Ok(report)
}

fn verify_report(
    path: &Path,
    idx: &SatakeIndex,
    rrs: &RestrictedRootSystem,
) -> Result<Report, CliError> {
    let cr = realization_for(idx).ok_or(LieError::NoRealization)?;
    let lr = &cr.realization;
    let mut r = Report::new(format!("verify {}", path.display()));
    index_header(idx, &mut r);
    r.header
        .push(format!("realization: {} (dim {})", cr.form_id, lr.dim()));
    r.columns = vec![
        "check".into(),
        "subject".into(),
        "result".into(),
        "detail".into(),
    ];
    let mut failed = false;
    let push = |r: &mut Report, check: &str, subject: String, ok: bool, detail: String| {
        r.rows.push(vec![
            check.into(),
            subject,
            if ok { "PASS".into() } else { "FAIL".into() },
            detail,
        ]);
        ok
    };

    let table_ok = lr.validate();
    failed |= !push(
        &mut r,
        "structure-table",
        "antisymmetry + Jacobi".into(),
        table_ok.is_ok(),
        table_ok.err().map(|e| e.to_string()).unwrap_or_default(),
    );

    // Weight multiplicities against the restricted system.
    let weights_ok = (|| -> Result<bool, LieError> {
        let wd = weight_decomposition(lr)?;
        for ws in &wd {
            if ws.weight.iter().all(|q| q.is_zero()) {
                continue;
            }
            let matched = rrs.base().roots().iter().find(|root| {
                let mut t = vec![crate::liealg::Q::zero(); lr.split_cartan().len()];
                for (j, &c) in root.coords().iter().enumerate() {
                    for (i, val) in cr.simple_tuples[j].iter().enumerate() {
                        t[i] += val.clone() * crate::liealg::Q::from_integer(c.into());
                    }
                }
                t == ws.weight
            });
            match matched {
                Some(root) if rrs.multiplicity(root) == Some(ws.space.dim()) => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    })()?;
    failed |= !push(
        &mut r,
        "weight-multiplicities",
        "eigenspace dims = restricted multiplicities".into(),
        weights_ok,
        String::new(),
    );

    let catalog = catalog()?;
    for theta in ThetaSubset::power_set(rrs.rank()) {
        let cert = crate::admissible::is_admissible(idx, rrs, &theta, &catalog, None)?;
        if !cert.admissible {
            continue;
        }
        let subject = format!("theta={}", theta.display(rrs));
        let b = build_b_theta(cr, rrs, &theta)?;
        let pd = parabolic(idx, rrs, &theta)?;
        let chain: Vec<String> = derived_series(lr, &b)
            .iter()
            .map(|s| s.dim().to_string())
            .collect();
        let solvable = chain.last().map(|d| d == "0").unwrap_or(false);
        failed |= !push(
            &mut r,
            "solvable",
            subject.clone(),
            solvable,
            format!("derived series {}", chain.join(" ")),
        );
        let dim_ok = b.dim() == dim_b(&pd);
        failed |= !push(
            &mut r,
            "dimension",
            subject.clone(),
            dim_ok,
            format!("built {} expected {}", b.dim(), dim_b(&pd)),
        );
        let cert = certify_maximal_solvable(lr, &b)?;
        let detail = match &cert.verdict {
            crate::liealg::MaximalityVerdict::Maximal => {
                format!("{} adjunctions all non-solvable", cert.tested.len())
            }
            crate::liealg::MaximalityVerdict::NotMaximal { witness } => {
                format!("solvable extension by {}", lr.display_vector(witness))
            }
        };
        failed |= !push(&mut r, "maximal", subject, cert.is_maximal(), detail);
    }

    match lr.anisotropic_cartan() {
        None => {
            r.rows.push(vec![
                "anisotropic-cartan".into(),
                "-".into(),
                "SKIPPED".into(),
                "no designated anisotropic Cartan".into(),
            ]);
        }
        Some(_) => {
            let verdict = invariant_nilpotents_check(lr)?;
            let detail = match &verdict {
                crate::liealg::InvariantNilpotentsVerdict::Holds { planes_tested } => {
                    format!("{planes_tested} frequency planes, none nilpotent")
                }
                crate::liealg::InvariantNilpotentsVerdict::Counterexample { plane } => {
                    format!("invariant nilpotent plane {}", lr.display_vector(&plane[0]))
                }
            };
            failed |= !push(
                &mut r,
                "no-invariant-nilpotents",
                "designated compact Cartan".into(),
                verdict.holds(),
                detail,
            );
        }
    }

    if failed {
        r.exit = 2;
    }
    Ok(r)
}

/// Entry point used by the binary: parses `std::env::args`, prints the
/// report, returns the exit code.
pub fn main_entry() -> i32 {
    use std::io::Write;
    // A closed pipe on stdout is not an error worth panicking over.
    let emit = |text: String| {
        let _ = std::io::stdout().write_all(text.as_bytes());
    };
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are ordinary output, not usage errors.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                emit(e.to_string());
                return 0;
            }
            eprintln!("{e}");
            return 1;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            if cli.json {
                emit(format!("{}\n", report.render_json()));
            } else {
                emit(report.render_tsv());
            }
            report.exit
        }
        Err(e) => {
            eprintln!("maxsolv: {e}");
            1
        }
    }
}
