//! Satake/Tits indices and restricted root systems.
//!
//! A semisimple group over `k` is presented as its absolute Dynkin diagram
//! together with a node coloring (black nodes form the anisotropic kernel)
//! and a diagram involution `tau`. Restriction to the maximal split torus is
//! computed combinatorially: black coordinates are dropped and coordinates
//! are summed over the tau-orbits of white nodes, which become the
//! restricted simple roots. The induced inner product, and with it the
//! restricted Cartan pairing, comes from orthogonal projection with respect
//! to the symmetrized absolute Cartan matrix. Restricted systems may be
//! non-reduced (type BC).

use crate::rootsys::{rat, CartanError, CartanMatrix, Rat, Root, RootSystem, RootSystemError};
use num::{One, Zero};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldMode {
    AlgebraicallyClosed,
    Real,
    Oracle,
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::AlgebraicallyClosed => write!(f, "closed"),
            FieldMode::Real => write!(f, "real"),
            FieldMode::Oracle => write!(f, "oracle"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("tau is not a permutation of the nodes")]
    TauNotPermutation,
    #[error("tau is not an involution at node `{0}`")]
    TauNotInvolution(String),
    #[error("tau is not a diagram automorphism: entry ({0}, {1}) changes under tau")]
    TauNotAutomorphism(String, String),
    #[error("tau breaks coloring at node `{0}`")]
    TauBreaksColoring(String),
    #[error("algebraically closed mode requires all nodes white; node `{0}` is black")]
    ClosedModeBlackNode(String),
    #[error("algebraically closed mode requires tau = id; node `{0}` moves")]
    ClosedModeNontrivialTau(String),
    #[error("black sub-diagram is not a valid Cartan matrix: {0}")]
    BlackSubdiagram(CartanError),
    #[error("restriction does not produce a root system: {0}")]
    Restriction(#[from] RootSystemError),
    #[error("restricted pairing 2(λ{0},λ{1})/(λ{0},λ{0}) is not an integer; the index is not a valid Satake diagram")]
    NonIntegralPairing(usize, usize),
    #[error("index parse error: {0}")]
    Parse(String),
}

/// A Satake/Tits index: absolute Cartan matrix, node coloring, diagram
/// involution and the field mode the group is considered over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeIndex {
    cartan: CartanMatrix,
    color: Vec<Color>,
    tau: Vec<usize>,
    field: FieldMode,
}

impl SatakeIndex {
    pub fn new(
        cartan: CartanMatrix,
        color: Vec<Color>,
        tau: Vec<usize>,
        field: FieldMode,
    ) -> Result<Self, IndexError> {
        let idx = SatakeIndex {
            cartan,
            color,
            tau,
            field,
        };
        validate_index(&idx)?;
        Ok(idx)
    }

    /// The split index of a given type: all nodes white, trivial involution.
    pub fn split(type_spec: &str, field: FieldMode) -> Result<Self, IndexError> {
        let cartan = CartanMatrix::of_type(type_spec)?;
        let n = cartan.rank();
        SatakeIndex::new(cartan, vec![Color::White; n], (0..n).collect(), field)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn color(&self, i: usize) -> Color {
        self.color[i]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn field(&self) -> FieldMode {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn black_nodes(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.color[i] == Color::Black)
            .collect()
    }

    pub fn white_nodes(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.color[i] == Color::White)
            .collect()
    }

    pub fn is_split(&self) -> bool {
        self.black_nodes().is_empty() && self.tau.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// Sub-index on the given nodes (which must be tau-stable); labels are
    /// preserved.
    pub fn sub_index(&self, nodes: &[usize]) -> SatakeIndex {
        let pos: BTreeMap<usize, usize> = nodes
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        SatakeIndex {
            cartan: self.cartan.sub_matrix(nodes),
            color: nodes.iter().map(|&i| self.color[i]).collect(),
            tau: nodes.iter().map(|&i| pos[&self.tau[i]]).collect(),
            field: self.field,
        }
    }

    /// Canonical single-document form of the index; independent of the
    /// directive order of the source file.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        s.push_str("type: ");
        s.push_str(&self.type_signature());
        s.push('\n');
        let blacks: Vec<String> = self
            .black_nodes()
            .iter()
            .map(|&i| self.cartan.labels()[i].clone())
            .collect();
        let black_list = if blacks.is_empty() {
            "none".to_string()
        } else {
            blacks.join(",")
        };
        s.push_str("black: ");
        s.push_str(&black_list);
        s.push('\n');
        s.push_str("tau: ");
        s.push_str(&cycles_text(&self.tau));
        s.push('\n');
        s.push_str(&format!("field: {}\n", self.field));
        s
    }

    /// Short stable digest of the canonical form.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.canonical_text().as_bytes());
        // Entries matter too: labels alone do not pin the matrix.
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                h.update(self.cartan.entry(i, j).to_le_bytes());
            }
        }
        let out = h.finalize();
        out.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    fn type_signature(&self) -> String {
        // Labels are `<type>.<pos>`; recover the factor list from them.
        let mut pieces: Vec<String> = Vec::new();
        for l in self.cartan.labels() {
            let piece = l.split('.').next().unwrap_or(l).to_string();
            if pieces.last() != Some(&piece) {
                pieces.push(piece);
            }
        }
        pieces.join("+")
    }

    /// Parses the index text format: one directive per line, `#` comments.
    ///
    /// ```text
    /// type: A2        # or sums like A2+A1
    /// black: A2.1     # labels or 1-based positions, `none` for empty
    /// tau: (1 2)      # cycles on 1-based positions, or `id`
    /// field: real     # closed | real | oracle
    /// ```
    pub fn parse(text: &str) -> Result<Self, IndexError> {
        let mut type_spec: Option<String> = None;
        let mut black_spec: Option<String> = None;
        let mut tau_spec: Option<String> = None;
        let mut field_spec: Option<String> = None;
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| IndexError::Parse(format!("expected `key: value`, got `{line}`")))?;
            let value = value.trim().to_string();
            match key.trim() {
                "type" => type_spec = Some(value),
                "black" => black_spec = Some(value),
                "tau" => tau_spec = Some(value),
                "field" => field_spec = Some(value),
                other => return Err(IndexError::Parse(format!("unknown directive `{other}`"))),
            }
        }
        let type_spec =
            type_spec.ok_or_else(|| IndexError::Parse("missing `type:` directive".into()))?;
        let field = match field_spec.as_deref() {
            Some("closed") => FieldMode::AlgebraicallyClosed,
            Some("real") => FieldMode::Real,
            Some("oracle") => FieldMode::Oracle,
            Some(other) => {
                return Err(IndexError::Parse(format!(
                    "unknown field mode `{other}` (expected closed | real | oracle)"
                )))
            }
            None => return Err(IndexError::Parse("missing `field:` directive".into())),
        };
        let cartan = CartanMatrix::of_type(&type_spec)?;
        let n = cartan.rank();
        let mut color = vec![Color::White; n];
        if let Some(blacks) = black_spec {
            let blacks = blacks.trim();
            if !blacks.is_empty() && blacks != "none" && blacks != "-" {
                for item in blacks.split(',') {
                    let item = item.trim();
                    let i = resolve_node(&cartan, item)?;
                    color[i] = Color::Black;
                }
            }
        }
        let tau = match tau_spec.as_deref().map(str::trim) {
            None | Some("id") | Some("") => (0..n).collect(),
            Some(cycles) => parse_cycles(cycles, n)?,
        };
        SatakeIndex::new(cartan, color, tau, field)
    }
}

fn resolve_node(cartan: &CartanMatrix, item: &str) -> Result<usize, IndexError> {
    if let Some(i) = cartan.label_index(item) {
        return Ok(i);
    }
    if let Ok(pos) = item.parse::<usize>() {
        if pos >= 1 && pos <= cartan.rank() {
            return Ok(pos - 1);
        }
    }
    Err(IndexError::Parse(format!("unknown node `{item}`")))
}

fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>, IndexError> {
    let mut tau: Vec<usize> = (0..n).collect();
    let mut rest = text;
    let mut leftover = String::new();
    while let Some(open) = rest.find('(') {
        leftover.push_str(&rest[..open]);
        let close = rest[open..]
            .find(')')
            .ok_or_else(|| IndexError::Parse("unbalanced parenthesis in tau".into()))?
            + open;
        let inner = &rest[open + 1..close];
        let items: Vec<usize> = inner
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| IndexError::Parse(format!("bad node `{t}` in tau cycle")))
            })
            .collect::<Result<_, _>>()?;
        for &p in &items {
            if p < 1 || p > n {
                return Err(IndexError::Parse(format!("tau position {p} out of range")));
            }
        }
        for k in 0..items.len() {
            tau[items[k] - 1] = items[(k + 1) % items.len()] - 1;
        }
        rest = &rest[close + 1..];
    }
    leftover.push_str(rest);
    if !leftover.trim().is_empty() {
        return Err(IndexError::Parse(format!("cannot parse tau `{text}`")));
    }
    Ok(tau)
}

fn cycles_text(tau: &[usize]) -> String {
    let n = tau.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] || tau[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut cur = tau[start];
        while cur != start {
            seen[cur] = true;
            cyc.push(cur);
            cur = tau[cur];
        }
        let min_pos = cyc
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        cyc.rotate_left(min_pos);
        cycles.push(cyc);
    }
    if cycles.is_empty() {
        return "id".into();
    }
    cycles.sort();
    cycles
        .into_iter()
        .map(|c| {
            format!(
                "({})",
                c.into_iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        })
        .collect()
}

/// Confirms all index invariants, or reports the first violated one with a
/// witness. Each violation has its own error code.
pub fn validate_index(idx: &SatakeIndex) -> Result<(), IndexError> {
    let n = idx.rank();
    let labels = idx.cartan.labels();
    if idx.tau.len() != n || idx.color.len() != n {
        return Err(IndexError::TauNotPermutation);
    }
    let mut hit = vec![false; n];
    for &t in &idx.tau {
        if t >= n || hit[t] {
            return Err(IndexError::TauNotPermutation);
        }
        hit[t] = true;
    }
    for i in 0..n {
        if idx.tau[idx.tau[i]] != i {
            return Err(IndexError::TauNotInvolution(labels[i].clone()));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if idx.cartan.entry(idx.tau[i], idx.tau[j]) != idx.cartan.entry(i, j) {
                return Err(IndexError::TauNotAutomorphism(
                    labels[i].clone(),
                    labels[j].clone(),
                ));
            }
        }
    }
    for i in 0..n {
        if idx.color[idx.tau[i]] != idx.color[i] {
            return Err(IndexError::TauBreaksColoring(labels[i].clone()));
        }
    }
    if idx.field == FieldMode::AlgebraicallyClosed {
        if let Some(&b) = idx.black_nodes().first() {
            return Err(IndexError::ClosedModeBlackNode(labels[b].clone()));
        }
        if let Some(i) = (0..n).find(|&i| idx.tau[i] != i) {
            return Err(IndexError::ClosedModeNontrivialTau(labels[i].clone()));
        }
    }
    let blacks = idx.black_nodes();
    if !blacks.is_empty() {
        // A principal submatrix of a finite-type matrix is again finite type,
        // but the check is cheap and guards hand-built indices.
        let sub = idx.cartan.sub_matrix(&blacks);
        CartanMatrix::new(sub.labels().to_vec(), matrix_entries(&sub))
            .map_err(IndexError::BlackSubdiagram)?;
    }
    Ok(())
}

fn matrix_entries(m: &CartanMatrix) -> Vec<Vec<i64>> {
    (0..m.rank())
        .map(|i| (0..m.rank()).map(|j| m.entry(i, j)).collect())
        .collect()
}

/// The restricted root system of an index: the base (possibly non-reduced)
/// root system on the restricted simple roots, the restriction map from
/// absolute roots, and the multiplicities (numbers of absolute roots over
/// each restricted root).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedRootSystem {
    base: RootSystem,
    absolute: RootSystem,
    restriction: BTreeMap<Root, Option<Root>>,
    multiplicity: BTreeMap<Root, usize>,
    classes: Vec<BTreeSet<usize>>,
    labels: Vec<String>,
}

impl RestrictedRootSystem {
    pub fn base(&self) -> &RootSystem {
        &self.base
    }

    pub fn absolute(&self) -> &RootSystem {
        &self.absolute
    }

    /// Number of restricted simple roots (the k-rank of the index).
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// tau-orbits of white nodes, one per restricted simple root, ordered.
    pub fn classes(&self) -> &[BTreeSet<usize>] {
        &self.classes
    }

    /// Display labels `a1..ar` of the restricted simple roots.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn restriction_of(&self, absolute_root: &Root) -> Option<&Root> {
        self.restriction.get(absolute_root).and_then(|o| o.as_ref())
    }

    pub fn multiplicity(&self, restricted_root: &Root) -> Option<usize> {
        self.multiplicity.get(restricted_root).copied()
    }

    pub fn multiplicities(&self) -> &BTreeMap<Root, usize> {
        &self.multiplicity
    }
}

/// Computes the restricted root system of a valid index: restricted simple
/// roots are the tau-orbits of white nodes, restriction is the class-wise
/// coordinate sum with black coordinates dropped, multiplicities count the
/// absolute roots over each nonzero image.
pub fn restricted_system(idx: &SatakeIndex) -> Result<RestrictedRootSystem, IndexError> {
    validate_index(idx)?;
    let absolute = crate::rootsys::generate_roots(idx.cartan())?;
    let n = idx.rank();

    // tau-orbits of white nodes, ordered by smallest member.
    let mut classes: Vec<BTreeSet<usize>> = Vec::new();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if idx.color[i] == Color::Black || class_of[i].is_some() {
            continue;
        }
        let k = classes.len();
        let orbit = BTreeSet::from([i, idx.tau[i]]);
        for &m in &orbit {
            class_of[m] = Some(k);
        }
        classes.push(orbit);
    }
    let r = classes.len();
    let labels: Vec<String> = (1..=r).map(|k| format!("a{k}")).collect();

    // Restriction of each absolute root.
    let mut restriction: BTreeMap<Root, Option<Root>> = BTreeMap::new();
    let mut multiplicity: BTreeMap<Root, usize> = BTreeMap::new();
    let mut images: BTreeSet<Root> = BTreeSet::new();
    for root in absolute.roots() {
        let mut coords = vec![0i64; r];
        for (i, &c) in root.coords().iter().enumerate() {
            if let Some(k) = class_of[i] {
                coords[k] += c;
            }
        }
        if coords.iter().all(|&c| c == 0) {
            restriction.insert(root.clone(), None);
        } else {
            let img = Root::new(coords).expect("class sums of a one-signed vector are one-signed");
            *multiplicity.entry(img.clone()).or_insert(0) += 1;
            images.insert(img.clone());
            restriction.insert(root.clone(), Some(img));
        }
    }

    let base = if r == 0 {
        RootSystem::from_parts(CartanMatrix::new(vec![], vec![])?, BTreeSet::new())?
    } else {
        let pairing = restricted_pairing(idx, &classes)?;
        RootSystem::from_parts(CartanMatrix::new(labels.clone(), pairing)?, images)?
    };

    Ok(RestrictedRootSystem {
        base,
        absolute,
        restriction,
        multiplicity,
        classes,
        labels,
    })
}

/// Restricted Cartan pairing `⟨λ_L, λ_K^∨⟩` via orthogonal projection onto
/// the split part: project the class representatives orthogonally to the
/// span of the black simple roots and of the differences `α_i − α_tau(i)`.
fn restricted_pairing(
    idx: &SatakeIndex,
    classes: &[BTreeSet<usize>],
) -> Result<Vec<Vec<i64>>, IndexError> {
    let n = idx.rank();
    let gram = idx.cartan().gram();
    let ip = |a: &[Rat], b: &[Rat]| -> Rat {
        let mut acc = Rat::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[j].is_zero() {
                    acc += a[i].clone() * b[j].clone() * gram[i][j].clone();
                }
            }
        }
        acc
    };
    let unit = |i: usize| -> Vec<Rat> {
        (0..n)
            .map(|j| if i == j { Rat::one() } else { Rat::zero() })
            .collect()
    };

    let mut u_basis: Vec<Vec<Rat>> = Vec::new();
    for &b in &idx.black_nodes() {
        u_basis.push(unit(b));
    }
    for i in idx.white_nodes() {
        if idx.tau()[i] > i {
            let mut v = unit(i);
            v[idx.tau()[i]] = -Rat::one();
            u_basis.push(v);
        }
    }

    // Projection of x onto the complement of span(u_basis):
    // x − Σ c_k u_k with Gram(u) c = (u, x).
    let m = u_basis.len();
    let gram_u: Vec<Vec<Rat>> = (0..m)
        .map(|a| (0..m).map(|b| ip(&u_basis[a], &u_basis[b])).collect())
        .collect();
    let project = |x: &[Rat]| -> Vec<Rat> {
        if m == 0 {
            return x.to_vec();
        }
        let rhs: Vec<Rat> = (0..m).map(|a| ip(&u_basis[a], x)).collect();
        let c = solve_rational(&gram_u, &rhs).expect("Gram matrix of independent vectors");
        let mut out = x.to_vec();
        for (k, ck) in c.iter().enumerate() {
            for i in 0..n {
                let s = u_basis[k][i].clone() * ck.clone();
                out[i] -= s;
            }
        }
        out
    };

    let reps: Vec<Vec<Rat>> = classes
        .iter()
        .map(|k| project(&unit(*k.iter().next().unwrap())))
        .collect();
    let r = classes.len();
    let mut pairing = vec![vec![0i64; r]; r];
    for k in 0..r {
        let norm = ip(&reps[k], &reps[k]);
        for l in 0..r {
            let val = rat(2) * ip(&reps[k], &reps[l]) / norm.clone();
            if !val.is_integer() {
                return Err(IndexError::NonIntegralPairing(k, l));
            }
            let v: num::BigInt = val.to_integer();
            pairing[k][l] = i64::try_from(&v).expect("small pairing entry");
        }
    }
    Ok(pairing)
}

/// Dense Gaussian elimination for small rational systems.
fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let s = m[col][c].clone() * f.clone();
                    m[r][c] -= s;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

/// One factor of an index: a tau-orbit of connected components of the
/// diagram. A pair of components swapped by tau is a single factor of
/// complex type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFactor {
    pub index: SatakeIndex,
    pub nodes: Vec<usize>,
    pub complex_pair: bool,
}

/// Connected components of the diagram grouped into tau-orbits of
/// components; colors and tau restrict to each factor.
pub fn components(idx: &SatakeIndex) -> Vec<IndexFactor> {
    let comps = idx.cartan().components();
    let mut used = vec![false; comps.len()];
    let mut factors = Vec::new();
    for (ci, comp) in comps.iter().enumerate() {
        if used[ci] {
            continue;
        }
        used[ci] = true;
        let image: BTreeSet<usize> = comp.iter().map(|&i| idx.tau()[i]).collect();
        let mut nodes: Vec<usize> = comp.clone();
        let mut complex_pair = false;
        if image != comp.iter().copied().collect::<BTreeSet<_>>() {
            let partner = comps
                .iter()
                .position(|c| c.iter().copied().collect::<BTreeSet<_>>() == image)
                .expect("tau permutes diagram components");
            used[partner] = true;
            nodes.extend(comps[partner].iter().copied());
            nodes.sort_unstable();
            complex_pair = true;
        }
        factors.push(IndexFactor {
            index: idx.sub_index(&nodes),
            nodes,
            complex_pair,
        });
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su21() -> SatakeIndex {
        SatakeIndex::parse("type: A2\ntau: (1 2)\nfield: real\n").unwrap()
    }

    #[test]
    fn split_a2_is_valid() {
        let idx = SatakeIndex::split("A2", FieldMode::AlgebraicallyClosed).unwrap();
        assert!(validate_index(&idx).is_ok());
    }

    #[test]
    fn quasi_split_a2_is_valid() {
        // tau must preserve the A2 Cartan matrix; the swap does.
        assert!(validate_index(&su21()).is_ok());
    }

    #[test]
    fn tau_breaking_coloring_is_rejected() {
        let cartan = CartanMatrix::of_type("A2").unwrap();
        let err = SatakeIndex::new(
            cartan,
            vec![Color::White, Color::Black],
            vec![1, 0],
            FieldMode::Real,
        )
        .unwrap_err();
        assert!(matches!(err, IndexError::TauBreaksColoring(_)));
    }

    #[test]
    fn closed_mode_restrictions() {
        let cartan = CartanMatrix::of_type("A2").unwrap();
        let err = SatakeIndex::new(
            cartan.clone(),
            vec![Color::Black, Color::White],
            vec![0, 1],
            FieldMode::AlgebraicallyClosed,
        )
        .unwrap_err();
        assert!(matches!(err, IndexError::ClosedModeBlackNode(_)));
        let err = SatakeIndex::new(
            cartan,
            vec![Color::White, Color::White],
            vec![1, 0],
            FieldMode::AlgebraicallyClosed,
        )
        .unwrap_err();
        assert!(matches!(err, IndexError::ClosedModeNontrivialTau(_)));
    }

    #[test]
    fn non_involutive_tau_rejected() {
        let cartan = CartanMatrix::of_type("A3").unwrap();
        let err = SatakeIndex::new(
            cartan,
            vec![Color::White; 3],
            vec![1, 2, 0],
            FieldMode::Real,
        )
        .unwrap_err();
        assert!(matches!(err, IndexError::TauNotInvolution(_)));
    }

    #[test]
    fn split_restriction_is_identity() {
        for t in ["A2", "B3", "G2"] {
            let idx = SatakeIndex::split(t, FieldMode::AlgebraicallyClosed).unwrap();
            let rrs = restricted_system(&idx).unwrap();
            assert_eq!(rrs.rank(), idx.rank());
            assert_eq!(rrs.base().roots().len(), rrs.absolute().roots().len());
            assert!(rrs.multiplicities().values().all(|&m| m == 1));
            // Same coordinate vectors on both sides.
            for root in rrs.absolute().roots() {
                assert_eq!(rrs.restriction_of(root), Some(root));
            }
        }
    }

    #[test]
    fn su21_restricts_to_bc1() {
        // Direct computation: the three absolute positives α1, α2, α1+α2
        // restrict under the swap to λ, λ, 2λ.
        let rrs = restricted_system(&su21()).unwrap();
        assert_eq!(rrs.rank(), 1);
        assert!(!rrs.base().is_reduced());
        let lambda = Root::new(vec![1]).unwrap();
        let two_lambda = Root::new(vec![2]).unwrap();
        assert_eq!(rrs.base().roots().len(), 4);
        assert_eq!(rrs.multiplicity(&lambda), Some(2));
        assert_eq!(rrs.multiplicity(&two_lambda), Some(1));
        assert_eq!(
            rrs.restriction_of(&Root::new(vec![1, 1]).unwrap()),
            Some(&two_lambda)
        );
    }

    #[test]
    fn sl2r_restriction_trivial() {
        let idx = SatakeIndex::split("A1", FieldMode::Real).unwrap();
        let rrs = restricted_system(&idx).unwrap();
        assert_eq!(rrs.rank(), 1);
        assert!(rrs.base().is_reduced());
        assert_eq!(rrs.multiplicity(&Root::new(vec![1]).unwrap()), Some(1));
    }

    #[test]
    fn multiplicity_sum_counts_non_black_roots() {
        // sl(2,H): A3 with black ends, white middle. All 4 non-black-supported
        // positives restrict onto a single multiplicity-4 root.
        let idx = SatakeIndex::parse("type: A3\nblack: A3.1, A3.3\nfield: real\n").unwrap();
        let rrs = restricted_system(&idx).unwrap();
        assert_eq!(rrs.rank(), 1);
        assert_eq!(rrs.multiplicity(&Root::new(vec![1]).unwrap()), Some(4));
        let total: usize = rrs.multiplicities().values().sum();
        let black_supported = rrs
            .absolute()
            .roots()
            .iter()
            .filter(|r| rrs.restriction_of(r).is_none())
            .count();
        assert_eq!(total + black_supported, rrs.absolute().roots().len());
    }

    #[test]
    fn component_grouping() {
        let two_factors = SatakeIndex::split("A1+A1", FieldMode::AlgebraicallyClosed).unwrap();
        assert_eq!(components(&two_factors).len(), 2);

        let complex = SatakeIndex::parse("type: A1+A1\ntau: (1 2)\nfield: real\n").unwrap();
        let f = components(&complex);
        assert_eq!(f.len(), 1);
        assert!(f[0].complex_pair);

        let connected = SatakeIndex::split("A3", FieldMode::AlgebraicallyClosed).unwrap();
        let f = components(&connected);
        assert_eq!(f.len(), 1);
        assert!(!f[0].complex_pair);

        // A pair swapped across a middle factor groups the outer components.
        let wide = SatakeIndex::parse("type: A1+A2+A1\ntau: (1 4)\nfield: real\n").unwrap();
        let f = components(&wide);
        assert_eq!(f.len(), 2);
        let pair = f.iter().find(|x| x.complex_pair).unwrap();
        assert_eq!(pair.nodes, vec![0, 3]);
        assert_eq!(pair.index.tau(), &[1, 0]);
    }

    #[test]
    fn trailing_garbage_in_tau_is_rejected() {
        assert!(SatakeIndex::parse("type: A2\ntau: (1 2) x\nfield: real\n").is_err());
        assert!(SatakeIndex::parse("type: A2\ntau: x\nfield: real\n").is_err());
        assert!(SatakeIndex::parse("type: A2\ntau: (1 2\nfield: real\n").is_err());
    }

    #[test]
    fn canonical_text_and_digest_are_stable_under_line_order() {
        let a = SatakeIndex::parse("type: A2\ntau: (1 2)\nfield: real\n").unwrap();
        let b = SatakeIndex::parse("field: real\n# swapped\ntau: (2 1)\ntype: A2\n").unwrap();
        assert_eq!(a.canonical_text(), b.canonical_text());
        assert_eq!(a.digest(), b.digest());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn parsing_tolerates_whitespace_comments_and_order(
                pad in proptest::collection::vec("[ \t]{0,3}", 8),
                swap in any::<bool>(),
            ) {
                let lines = [
                    format!("{}type{}: A2", pad[0], pad[1]),
                    format!("{}tau{}: (1 2) # swap", pad[2], pad[3]),
                    format!("{}field{}: real", pad[4], pad[5]),
                    format!("{}# a comment line{}", pad[6], pad[7]),
                ];
                let order: Vec<usize> = if swap { vec![2, 0, 3, 1] } else { vec![0, 1, 2, 3] };
                let text: String =
                    order.iter().map(|&i| format!("{}\n", lines[i])).collect();
                let idx = SatakeIndex::parse(&text).unwrap();
                let reference = SatakeIndex::parse("type: A2\ntau: (1 2)\nfield: real\n").unwrap();
                prop_assert_eq!(idx.canonical_text(), reference.canonical_text());
                prop_assert_eq!(idx.digest(), reference.digest());
            }
        }
    }

    #[test]
    fn restricted_system_is_closed_for_su_like_indices() {
        // su(1,3): A3 with black middle and flipped ends; restricted BC1 with
        // multiplicities 4 and 1.
        let idx = SatakeIndex::parse("type: A3\nblack: A3.2\ntau: (1 3)\nfield: real\n").unwrap();
        let rrs = restricted_system(&idx).unwrap();
        assert_eq!(rrs.rank(), 1);
        assert_eq!(rrs.multiplicity(&Root::new(vec![1]).unwrap()), Some(4));
        assert_eq!(rrs.multiplicity(&Root::new(vec![2]).unwrap()), Some(1));
    }
}
