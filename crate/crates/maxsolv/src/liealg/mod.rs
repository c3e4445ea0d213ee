//! Exact structure-constant Lie algebra engine.
//!
//! Realizations are bracket tables over the Gaussian rationals with a
//! designated split toral sub-basis and, for the real forms that have one, a
//! designated anisotropic (compact) Cartan. The engine builds the solvable
//! subalgebras underlying the classification and certifies, by brute-force
//! exact computation, that they are solvable and maximal, and that compact
//! Cartans normalize no nonzero invariant subspace of nilpotent elements.

mod certify;
mod chevalley;
mod forms;
mod linalg;
mod poly;
mod scalar;

pub use certify::{
    build_b_theta, certify_maximal_solvable, derived_series, generated_subalgebra,
    invariant_nilpotents_check, is_solvable, nilpotent_radical, weight_decomposition,
    InvariantNilpotentsVerdict, MaximalityCertificate, MaximalityVerdict, TestedAdjunction,
    WeightSpace,
};
pub use chevalley::chevalley_realization;
pub use forms::{bundled_realizations, realization_for, su21_realization, CatalogRealization};
pub use linalg::Subspace;
pub use scalar::{display_scalar, fmt_scalar, parse_scalar, Scalar, Q};

use crate::admissible::AdmissibleError;
use crate::index::IndexError;
use crate::levi::LeviError;
use crate::rootsys::{CartanError, RootSystemError};
use scalar::{is_zero, sc};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("rank {0} exceeds the desk-scale bound of 4")]
    RankBound(usize),
    #[error("span is not closed under the bracket: {0}")]
    NotClosed(String),
    #[error("vector does not lie in the realization's span")]
    OutsideRealization,
    #[error("split part does not act diagonalizably with rational eigenvalues: {0}")]
    SplitNotDiagonalizable(String),
    #[error("realization has an empty split Cartan designation")]
    EmptySplitCartan,
    #[error("realization designates no anisotropic Cartan")]
    NoAnisotropicCartan,
    #[error("designated Cartan is not anisotropic: {0}")]
    NotAnisotropic(String),
    #[error("designated Cartan elements do not commute")]
    CartanNotCommuting,
    #[error("subalgebra is not solvable")]
    NotSolvable,
    #[error("theta `{0}` is not admissible; no solvable class exists for it")]
    NotAdmissibleTheta(String),
    #[error("no bundled realization for this index; see `maxsolv catalog`")]
    NoRealization,
    #[error("realization parse error: {0}")]
    Parse(String),
    #[error("structure table violates {0}")]
    TableInvariant(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Admissible(#[from] AdmissibleError),
    #[error(transparent)]
    Levi(#[from] LeviError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

type SparseVec = Vec<(usize, Scalar)>;

/// An exact structure-constant realization: basis labels, the full bracket
/// table, the split toral sub-basis, and (optionally) a designated
/// anisotropic Cartan given by explicit vectors.
#[derive(Debug, Clone)]
pub struct LieRealization {
    form_id: String,
    basis_labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    split_cartan: Vec<usize>,
    anisotropic_cartan: Option<Vec<Vec<Scalar>>>,
}

impl LieRealization {
    pub fn new(
        form_id: String,
        basis_labels: Vec<String>,
        table: Vec<Vec<SparseVec>>,
        split_cartan: Vec<usize>,
        anisotropic_cartan: Option<Vec<Vec<Scalar>>>,
    ) -> Result<Self, LieError> {
        let dim = basis_labels.len();
        if table.len() != dim || table.iter().any(|row| row.len() != dim) {
            return Err(LieError::TableInvariant("table shape".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &basis_labels {
            if !seen.insert(l.clone()) {
                return Err(LieError::Parse(format!("duplicate basis label `{l}`")));
            }
        }
        if split_cartan.iter().any(|&i| i >= dim) {
            return Err(LieError::Parse("split Cartan index out of range".into()));
        }
        let lr = LieRealization {
            form_id,
            basis_labels,
            table,
            split_cartan,
            anisotropic_cartan,
        };
        lr.check_antisymmetry()?;
        Ok(lr)
    }

    pub fn form_id(&self) -> &str {
        &self.form_id
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn split_cartan(&self) -> &[usize] {
        &self.split_cartan
    }

    pub fn anisotropic_cartan(&self) -> Option<&[Vec<Scalar>]> {
        self.anisotropic_cartan.as_deref()
    }

    pub fn with_anisotropic_cartan(mut self, vectors: Vec<Vec<Scalar>>) -> Self {
        self.anisotropic_cartan = Some(vectors);
        self
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![sc(0); self.dim()];
        v[i] = sc(1);
        v
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    /// `[u, v]` for arbitrary coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![sc(0); n];
        for i in 0..n {
            if is_zero(&u[i]) {
                continue;
            }
            for j in 0..n {
                if is_zero(&v[j]) {
                    continue;
                }
                let f = u[i].clone() * v[j].clone();
                for (k, c) in &self.table[i][j] {
                    let s = c.clone() * f.clone();
                    out[*k] = out[*k].clone() + s;
                }
            }
        }
        out
    }

    /// Matrix of `ad(v)` acting on coordinates: column `c` is `[v, e_c]`.
    pub fn ad_matrix(&self, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut m = vec![vec![sc(0); n]; n];
        for c in 0..n {
            let col = self.bracket(v, &self.basis_vector(c));
            for r in 0..n {
                if !is_zero(&col[r]) {
                    m[r][c] = col[r].clone();
                }
            }
        }
        m
    }

    fn check_antisymmetry(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let mut sum: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, c) in &self.table[i][j] {
                    let e = sum.entry(*k).or_insert_with(|| sc(0));
                    *e = e.clone() + c.clone();
                }
                for (k, c) in &self.table[j][i] {
                    let e = sum.entry(*k).or_insert_with(|| sc(0));
                    *e = e.clone() + c.clone();
                }
                if sum.values().any(|c| !is_zero(c)) {
                    return Err(LieError::TableInvariant(format!(
                        "antisymmetry at ({}, {})",
                        self.basis_labels[i], self.basis_labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive Jacobi identity over all basis triples plus pairwise
    /// commuting of the split Cartan. Exact, zero tolerance.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim();
        for &a in &self.split_cartan {
            for &b in &self.split_cartan {
                if !self.table[a][b].iter().all(|(_, c)| is_zero(c)) {
                    return Err(LieError::TableInvariant(
                        "split Cartan commutativity".into(),
                    ));
                }
            }
        }
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.bracket(&basis[i], &basis[j]);
                for k in j + 1..n {
                    let bjk = self.bracket(&basis[j], &basis[k]);
                    let bik = self.bracket(&basis[i], &basis[k]);
                    let t1 = self.bracket(&bij, &basis[k]);
                    let t2 = self.bracket(&bjk, &basis[i]);
                    let mut t3 = self.bracket(&bik, &basis[j]);
                    for (r, x) in t3.iter_mut().enumerate() {
                        *x = t1[r].clone() + t2[r].clone() - x.clone();
                    }
                    if t3.iter().any(|c| !is_zero(c)) {
                        return Err(LieError::TableInvariant(format!(
                            "Jacobi identity at ({}, {}, {})",
                            self.basis_labels[i], self.basis_labels[j], self.basis_labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable linear combination of basis labels.
    pub fn display_vector(&self, v: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if is_zero(c) {
                continue;
            }
            let coeff = display_scalar(c);
            let term = match coeff.as_str() {
                "1" => self.basis_labels[i].clone(),
                "-1" => format!("-{}", self.basis_labels[i]),
                _ => format!("{}*{}", coeff, self.basis_labels[i]),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }

    /// Serializes to the realization catalog format: basis labels, sparse
    /// bracket triples `i j k <scalar>` (1-based, `i < j` only), designated
    /// Cartans as (combinations of) labels.
    pub fn to_catalog_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("form: {}\n", self.form_id));
        s.push_str(&format!("basis: {}\n", self.basis_labels.join(" ")));
        s.push_str(&format!(
            "split: {}\n",
            self.split_cartan
                .iter()
                .map(|&i| self.basis_labels[i].clone())
                .collect::<Vec<_>>()
                .join(" ")
        ));
        if let Some(vs) = &self.anisotropic_cartan {
            let combos: Vec<String> = vs.iter().map(|v| self.combo_text(v)).collect();
            s.push_str(&format!("anisotropic: {}\n", combos.join(", ")));
        }
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                for (k, c) in &self.table[i][j] {
                    if !is_zero(c) {
                        s.push_str(&format!(
                            "{} {} {} {}\n",
                            i + 1,
                            j + 1,
                            k + 1,
                            fmt_scalar(c)
                        ));
                    }
                }
            }
        }
        s
    }

    fn combo_text(&self, v: &[Scalar]) -> String {
        // Terms carry a rational or purely imaginary coefficient each; a
        // general complex coefficient becomes two terms on the same label.
        let mut terms: Vec<String> = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if is_zero(c) {
                continue;
            }
            use num::Zero;
            if !c.re.is_zero() {
                let coeff = format!("{}/{}", c.re.numer(), c.re.denom());
                terms.push(match coeff.as_str() {
                    "1/1" => self.basis_labels[i].clone(),
                    "-1/1" => format!("-{}", self.basis_labels[i]),
                    _ => format!("{}*{}", coeff, self.basis_labels[i]),
                });
            }
            if !c.im.is_zero() {
                terms.push(format!(
                    "{}/{}i*{}",
                    c.im.numer(),
                    c.im.denom(),
                    self.basis_labels[i]
                ));
            }
        }
        let mut out = String::new();
        for t in terms {
            if out.is_empty() || t.starts_with('-') {
                out.push_str(&t);
            } else {
                out.push('+');
                out.push_str(&t);
            }
        }
        out
    }

    /// Parses the catalog format written by [`Self::to_catalog_text`].
    pub fn parse_catalog_text(text: &str) -> Result<Self, LieError> {
        let mut form_id = String::new();
        let mut labels: Vec<String> = Vec::new();
        let mut split: Vec<String> = Vec::new();
        let mut aniso: Option<Vec<String>> = None;
        let mut triples: Vec<(usize, usize, usize, Scalar)> = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("form:") {
                form_id = rest.trim().to_string();
            } else if let Some(rest) = line.strip_prefix("basis:") {
                labels = rest.split_whitespace().map(|s| s.to_string()).collect();
            } else if let Some(rest) = line.strip_prefix("split:") {
                split = rest.split_whitespace().map(|s| s.to_string()).collect();
            } else if let Some(rest) = line.strip_prefix("anisotropic:") {
                aniso = Some(rest.split(',').map(|s| s.trim().to_string()).collect());
            } else {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 4 {
                    return Err(LieError::Parse(format!("bad bracket line `{line}`")));
                }
                let i: usize = toks[0].parse().map_err(|_| LieError::Parse(line.into()))?;
                let j: usize = toks[1].parse().map_err(|_| LieError::Parse(line.into()))?;
                let k: usize = toks[2].parse().map_err(|_| LieError::Parse(line.into()))?;
                let c = parse_scalar(toks[3])
                    .ok_or_else(|| LieError::Parse(format!("bad scalar `{}`", toks[3])))?;
                triples.push((i, j, k, c));
            }
        }
        let dim = labels.len();
        if dim == 0 {
            return Err(LieError::Parse("missing basis".into()));
        }
        let mut table: Vec<Vec<SparseVec>> = vec![vec![vec![]; dim]; dim];
        for (i, j, k, c) in triples {
            if i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim {
                return Err(LieError::Parse("bracket index out of range".into()));
            }
            table[i - 1][j - 1].push((k - 1, c.clone()));
            table[j - 1][i - 1].push((k - 1, -c));
        }
        let label_at = |l: &str| -> Result<usize, LieError> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| LieError::Parse(format!("unknown label `{l}`")))
        };
        let split_idx: Vec<usize> = split
            .iter()
            .map(|l| label_at(l))
            .collect::<Result<_, _>>()?;
        let aniso_vecs = match aniso {
            None => None,
            Some(combos) => {
                let mut out = Vec::new();
                for combo in combos {
                    out.push(parse_combo(&combo, &labels)?);
                }
                Some(out)
            }
        };
        LieRealization::new(form_id, labels, table, split_idx, aniso_vecs)
    }
}

/// `[coef*]label` terms joined by `+`/`-`; coefficients are rational
/// (`n/d`) or purely imaginary (`n/di`) tokens.
fn parse_combo(text: &str, labels: &[String]) -> Result<Vec<Scalar>, LieError> {
    let mut v = vec![sc(0); labels.len()];
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if (ch == '+' || ch == '-') && !cur.trim().is_empty() {
            terms.push(cur.clone());
            cur.clear();
        }
        if ch == '+' && cur.is_empty() {
            continue;
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        terms.push(cur);
    }
    for t in terms {
        let t = t.trim();
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (sc(-1), b.trim()),
            None => (sc(1), t),
        };
        let (coef, label) = match body.split_once('*') {
            Some((c, l)) => (
                parse_scalar(c)
                    .ok_or_else(|| LieError::Parse(format!("bad coefficient in `{t}`")))?,
                l,
            ),
            None => (sc(1), body),
        };
        let i = labels
            .iter()
            .position(|x| x == label.trim())
            .ok_or_else(|| LieError::Parse(format!("unknown label `{label}`")))?;
        v[i] = v[i].clone() + sign * coef;
    }
    Ok(v)
}

/// A bracket-closed subspace of a realization, stored in canonical reduced
/// echelon form. Two equal subalgebras have identical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    space: Subspace,
}

impl Subalgebra {
    /// Wraps a span after verifying bracket closure.
    pub fn from_span(
        lr: &LieRealization,
        vectors: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Result<Self, LieError> {
        let space = Subspace::from_vectors(lr.dim(), vectors);
        let basis = space.basis();
        for (i, u) in basis.iter().enumerate() {
            for v in &basis[i + 1..] {
                let br = lr.bracket(u, v);
                if !space.contains(&br) {
                    return Err(LieError::NotClosed(lr.display_vector(&br)));
                }
            }
        }
        Ok(Subalgebra { space })
    }

    pub(crate) fn from_closed_space(space: Subspace) -> Self {
        Subalgebra { space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        self.space.basis()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(v)
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }
}
