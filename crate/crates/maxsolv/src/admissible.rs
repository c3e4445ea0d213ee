//! Admissibility of subsets of the restricted simple roots.
//!
//! `Θ` is admissible when the derived group of the Levi admits a maximal
//! `k`-torus that is `k`-anisotropic. Over an algebraically closed field
//! only the trivial derived Levi qualifies. Over the reals a semisimple
//! algebra has a compact Cartan subalgebra exactly when each of its simple
//! ideals does, so the test is equal rank (rank = rank of a maximal compact
//! subalgebra) factor by factor, decided against a bundled catalog of simple
//! real forms keyed by their Satake diagrams. A user-supplied oracle covers
//! other fields.

use crate::index::{
    components, validate_index, Color, FieldMode, IndexError, RestrictedRootSystem, SatakeIndex,
};
use crate::levi::{parabolic, LeviError, ThetaSubset};
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdmissibleError {
    #[error("unrecognized index (no catalog match): {structure} diagram\n{canonical}")]
    Unrecognized { structure: String, canonical: String },
    #[error("ambiguous catalog: matching entries disagree on ranks for the {structure} diagram\n{canonical}")]
    Ambiguous { structure: String, canonical: String },
    #[error("field mode `oracle` requires a caller-supplied admissibility oracle")]
    MissingOracle,
    #[error("real-form recognition requires field mode `real`")]
    NotRealMode,
    #[error("catalog parse error: {0}")]
    CatalogParse(String),
    #[error("cannot read catalog file `{path}`: {message}")]
    CatalogIo { path: String, message: String },
    #[error(transparent)]
    Levi(#[from] LeviError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RealFormFamily {
    SlR,
    SlH,
    SuPQ,
    SoPQ,
    SoStar,
    SpR,
    SpPQ,
    Compact,
    ComplexType,
    Exceptional,
}

impl RealFormFamily {
    fn from_token(t: &str) -> Option<Self> {
        Some(match t {
            "sl_R" => RealFormFamily::SlR,
            "sl_H" => RealFormFamily::SlH,
            "su_pq" => RealFormFamily::SuPQ,
            "so_pq" => RealFormFamily::SoPQ,
            "so_star" => RealFormFamily::SoStar,
            "sp_R" => RealFormFamily::SpR,
            "sp_pq" => RealFormFamily::SpPQ,
            "exceptional_id" => RealFormFamily::Exceptional,
            _ => return None,
        })
    }
}

/// Identification of a simple real Lie algebra (or of a compact or
/// complex-type factor): family, integer parameters, the Cartan type of its
/// diagram, and the two ranks deciding admissibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFormLabel {
    pub family: RealFormFamily,
    pub params: Vec<i64>,
    pub diagram: String,
    pub rank: usize,
    pub compact_rank: usize,
}

impl RealFormLabel {
    pub fn equal_rank(&self) -> bool {
        self.rank == self.compact_rank
    }
}

impl fmt::Display for RealFormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            RealFormFamily::SlR => write!(f, "sl({},R)", self.params[0]),
            RealFormFamily::SlH => write!(f, "sl({},H)", self.params[0]),
            RealFormFamily::SuPQ => write!(f, "su({},{})", self.params[0], self.params[1]),
            RealFormFamily::SoPQ => write!(f, "so({},{})", self.params[0], self.params[1]),
            RealFormFamily::SoStar => write!(f, "so*({})", 2 * self.params[0]),
            RealFormFamily::SpR => write!(f, "sp({},R)", 2 * self.params[0]),
            RealFormFamily::SpPQ => write!(f, "sp({},{})", self.params[0], self.params[1]),
            RealFormFamily::Compact => write!(f, "compact({})", self.diagram),
            RealFormFamily::ComplexType => write!(f, "complex({})", self.diagram),
            RealFormFamily::Exceptional => {
                write!(f, "{}({})", self.diagram.to_lowercase(), self.params[0])
            }
        }
    }
}

/// One catalog record: a Satake diagram with its identification.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: RealFormLabel,
    pub index: SatakeIndex,
}

/// The bundled (or user-overridden) table of simple real forms.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

const BUNDLED_CATALOG: &str = include_str!("../data/realforms.catalog");

impl Catalog {
    pub fn parse(text: &str) -> Result<Self, AdmissibleError> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() < 6 {
                return Err(AdmissibleError::CatalogParse(format!(
                    "line {}: expected `family params type coloring tau rank compact_rank`",
                    lineno + 1
                )));
            }
            let family = RealFormFamily::from_token(toks[0]).ok_or_else(|| {
                AdmissibleError::CatalogParse(format!(
                    "line {}: unknown family `{}`",
                    lineno + 1,
                    toks[0]
                ))
            })?;
            let params: Vec<i64> = toks[1]
                .split(',')
                .map(|p| p.parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| {
                    AdmissibleError::CatalogParse(format!(
                        "line {}: bad params `{}`",
                        lineno + 1,
                        toks[1]
                    ))
                })?;
            let diagram = toks[2].to_string();
            let coloring = toks[3];
            let rank: usize = toks[toks.len() - 2].parse().map_err(|_| {
                AdmissibleError::CatalogParse(format!("line {}: bad rank", lineno + 1))
            })?;
            let compact_rank: usize = toks[toks.len() - 1].parse().map_err(|_| {
                AdmissibleError::CatalogParse(format!("line {}: bad compact rank", lineno + 1))
            })?;
            let tau_text = toks[4..toks.len() - 2].join(" ");
            let source = format!(
                "type: {}\nblack: {}\ntau: {}\nfield: real\n",
                diagram,
                coloring_to_blacks(coloring),
                tau_text
            );
            let index = SatakeIndex::parse(&source).map_err(|e| {
                AdmissibleError::CatalogParse(format!("line {}: {}", lineno + 1, e))
            })?;
            if coloring.len() != index.rank() {
                return Err(AdmissibleError::CatalogParse(format!(
                    "line {}: coloring length does not match type {}",
                    lineno + 1,
                    diagram
                )));
            }
            entries.push(CatalogEntry {
                label: RealFormLabel {
                    family,
                    params,
                    diagram,
                    rank,
                    compact_rank,
                },
                index,
            });
        }
        Ok(Catalog { entries })
    }

    /// The catalog shipped with the crate.
    pub fn bundled() -> &'static Catalog {
        static BUNDLED: OnceLock<Catalog> = OnceLock::new();
        BUNDLED.get_or_init(|| Catalog::parse(BUNDLED_CATALOG).expect("bundled catalog parses"))
    }

    /// Honors the `MAXSOLV_CATALOG` override, falling back to the bundled
    /// table.
    pub fn from_env_or_bundled() -> Result<Catalog, AdmissibleError> {
        match std::env::var("MAXSOLV_CATALOG") {
            Ok(path) if !path.is_empty() => {
                let text =
                    std::fs::read_to_string(&path).map_err(|e| AdmissibleError::CatalogIo {
                        path,
                        message: e.to_string(),
                    })?;
                Catalog::parse(&text)
            }
            _ => Ok(Catalog::bundled().clone()),
        }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }
}

fn coloring_to_blacks(coloring: &str) -> String {
    let blacks: Vec<String> = coloring
        .chars()
        .enumerate()
        .filter(|(_, c)| *c == 'b')
        .map(|(i, _)| (i + 1).to_string())
        .collect();
    if blacks.is_empty() {
        "none".into()
    } else {
        blacks.join(",")
    }
}

/// Colored-diagram isomorphism commuting with the involutions; backtracking
/// over node assignments, exact on the Cartan entries.
fn diagram_isomorphic(a: &SatakeIndex, b: &SatakeIndex) -> bool {
    let n = a.rank();
    if n != b.rank() {
        return false;
    }
    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn assign(
        a: &SatakeIndex,
        b: &SatakeIndex,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let n = a.rank();
        if i == n {
            // Involution equivariance on the full assignment.
            return (0..n).all(|k| map[a.tau()[k]] == Some(b.tau()[map[k].unwrap()]));
        }
        for cand in 0..n {
            if used[cand] || a.color(i) != b.color(cand) {
                continue;
            }
            let ok = (0..i).all(|j| {
                let mj = map[j].unwrap();
                a.cartan().entry(i, j) == b.cartan().entry(cand, mj)
                    && a.cartan().entry(j, i) == b.cartan().entry(mj, cand)
            });
            if !ok {
                continue;
            }
            map[i] = Some(cand);
            used[cand] = true;
            if assign(a, b, map, used, i + 1) {
                return true;
            }
            map[i] = None;
            used[cand] = false;
        }
        false
    }
    assign(a, b, &mut map, &mut used, 0)
}

/// Identifies a single factor (one tau-orbit of diagram components) against
/// the catalog. All-black factors are compact; tau-swapped component pairs
/// are complex type; everything else is looked up by diagram isomorphism and
/// never guessed.
pub fn recognize_real_form(
    factor: &crate::index::IndexFactor,
    catalog: &Catalog,
) -> Result<RealFormLabel, AdmissibleError> {
    let idx = &factor.index;
    let n = idx.rank();
    if factor.complex_pair {
        let half = n / 2;
        let comp_nodes = idx.cartan().components();
        // tau swaps the two components, so the node set of one component is
        // not tau-stable; name the type straight off the Cartan sub-matrix.
        let comp_sig = idx.cartan().sub_matrix(&comp_nodes[0]).type_name();
        return Ok(RealFormLabel {
            family: RealFormFamily::ComplexType,
            params: vec![half as i64],
            diagram: comp_sig,
            rank: n,
            compact_rank: half,
        });
    }
    if idx.colors().iter().all(|&c| c == Color::Black) {
        return Ok(RealFormLabel {
            family: RealFormFamily::Compact,
            params: vec![],
            diagram: idx.cartan().type_name(),
            rank: n,
            compact_rank: n,
        });
    }
    if idx.field() != FieldMode::Real {
        return Err(AdmissibleError::NotRealMode);
    }
    let mut matches: Vec<&CatalogEntry> = Vec::new();
    for entry in catalog.entries() {
        if entry.index.rank() == n && diagram_isomorphic(idx, &entry.index) {
            matches.push(entry);
        }
    }
    match matches.split_first() {
        None => Err(AdmissibleError::Unrecognized {
            structure: idx.cartan().type_name(),
            canonical: idx.canonical_text(),
        }),
        Some((first, rest)) => {
            // Isomorphic real forms must agree on both ranks; disagreement is
            // a broken catalog, not a silent pick.
            if rest.iter().any(|e| {
                e.label.rank != first.label.rank || e.label.compact_rank != first.label.compact_rank
            }) {
                return Err(AdmissibleError::Ambiguous {
                    structure: idx.cartan().type_name(),
                    canonical: idx.canonical_text(),
                });
            }
            Ok(first.label.clone())
        }
    }
}

/// Per-factor admissibility evidence.
#[derive(Debug, Clone, PartialEq)]
pub enum FactorVerdict {
    EqualRank {
        label: RealFormLabel,
        equal_rank: bool,
    },
    Oracle {
        factor: String,
        admissible: bool,
    },
}

impl FactorVerdict {
    pub fn admissible(&self) -> bool {
        match self {
            FactorVerdict::EqualRank { equal_rank, .. } => *equal_rank,
            FactorVerdict::Oracle { admissible, .. } => *admissible,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FactorVerdict::EqualRank { label, equal_rank } => format!(
                "{} rank {} compact {}{}",
                label,
                label.rank,
                label.compact_rank,
                if *equal_rank { "" } else { " (not equal rank)" }
            ),
            FactorVerdict::Oracle { factor, admissible } => {
                format!("oracle({}) -> {}", factor.replace('\n', "; "), admissible)
            }
        }
    }
}

/// The admissibility decision for one `Θ` together with its evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityCertificate {
    pub theta: ThetaSubset,
    pub admissible: bool,
    pub mode: FieldMode,
    pub factors: Vec<FactorVerdict>,
}

/// Caller-supplied decision procedure for field mode `oracle`: whether the
/// derived group of the given (simple, white-containing) factor admits a
/// `k`-anisotropic maximal torus.
pub trait AdmissibilityOracle {
    fn factor_admits_anisotropic_torus(&self, factor: &SatakeIndex) -> bool;
}

impl<F: Fn(&SatakeIndex) -> bool> AdmissibilityOracle for F {
    fn factor_admits_anisotropic_torus(&self, factor: &SatakeIndex) -> bool {
        self(factor)
    }
}

/// Decides admissibility of `Θ`.
///
/// Algebraically closed mode: admissible iff the Levi sub-index is empty.
/// Real mode: every simple factor of the Levi sub-index must be equal rank.
/// Oracle mode: all-black factors are anisotropic by definition of the
/// kernel; every other factor is delegated to the caller's oracle.
pub fn is_admissible(
    idx: &SatakeIndex,
    rrs: &RestrictedRootSystem,
    theta: &ThetaSubset,
    catalog: &Catalog,
    oracle: Option<&dyn AdmissibilityOracle>,
) -> Result<AdmissibilityCertificate, AdmissibleError> {
    validate_index(idx)?;
    let pd = parabolic(idx, rrs, theta)?;
    let levi = &pd.levi_subindex;
    let mode = idx.field();
    match mode {
        FieldMode::AlgebraicallyClosed => Ok(AdmissibilityCertificate {
            theta: theta.clone(),
            admissible: levi.cartan().is_empty(),
            mode,
            factors: vec![],
        }),
        FieldMode::Real => {
            let mut factors = Vec::new();
            for factor in components(levi) {
                let label = recognize_real_form(&factor, catalog)?;
                let equal_rank = label.equal_rank();
                factors.push(FactorVerdict::EqualRank { label, equal_rank });
            }
            let admissible = factors.iter().all(|f| f.admissible());
            Ok(AdmissibilityCertificate {
                theta: theta.clone(),
                admissible,
                mode,
                factors,
            })
        }
        FieldMode::Oracle => {
            let mut factors = Vec::new();
            for factor in components(levi) {
                if factor.index.colors().iter().all(|&c| c == Color::Black) {
                    // The anisotropic kernel is anisotropic over k; its
                    // derived group vacuously admits an anisotropic torus.
                    let label = recognize_real_form(&factor, catalog)?;
                    factors.push(FactorVerdict::EqualRank {
                        label,
                        equal_rank: true,
                    });
                } else {
                    let oracle = oracle.ok_or(AdmissibleError::MissingOracle)?;
                    let verdict = oracle.factor_admits_anisotropic_torus(&factor.index);
                    factors.push(FactorVerdict::Oracle {
                        factor: format!(
                            "{} diagram; {}",
                            factor.index.cartan().type_name(),
                            factor.index.canonical_text().trim_end().replace('\n', "; ")
                        ),
                        admissible: verdict,
                    });
                }
            }
            let admissible = factors.iter().all(|f| f.admissible());
            Ok(AdmissibilityCertificate {
                theta: theta.clone(),
                admissible,
                mode,
                factors,
            })
        }
    }
}
