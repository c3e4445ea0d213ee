//! Bundled realizations and their designated Cartans.
//!
//! Split forms (over the algebraic closure or the reals) come from the
//! Chevalley construction. The one genuinely unitary realization at desk
//! scale, su(2,1), is built from explicit 3×3 matrices preserving the
//! antidiagonal Hermitian form of signature (2,1), so its split torus is
//! diagonal and restricted weights are visible; its bracket table is
//! computed, not transcribed.
//!
//! Anisotropic Cartans of equal-rank split forms are rotation spans
//! `e_γ − f_γ` over a Kostant cascade of strongly orthogonal roots; the
//! cascade also hands each admissible `Θ` a compact Cartan of its derived
//! Levi.

use super::linalg::solve_columns;
use super::scalar::{is_zero, q_int, sc, sc_i, Scalar, Q};
use super::{LieError, LieRealization};
use crate::index::{FieldMode, SatakeIndex};
use crate::levi::ThetaSubset;
use crate::rootsys::{Root, RootSystem};
use num::Zero;
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// 3×3 matrices over ℚ(i), used only to assemble su(2,1).
type CMat = Vec<Vec<Scalar>>;

fn zeros() -> CMat {
    vec![vec![sc(0); 3]; 3]
}

fn e_unit(i: usize, j: usize, c: Scalar) -> CMat {
    let mut m = zeros();
    m[i][j] = c;
    m
}

fn madd(a: &CMat, b: &CMat) -> CMat {
    (0..3)
        .map(|i| (0..3).map(|j| a[i][j].clone() + b[i][j].clone()).collect())
        .collect()
}

fn mmul(a: &CMat, b: &CMat) -> CMat {
    let mut out = zeros();
    for i in 0..3 {
        for k in 0..3 {
            if is_zero(&a[i][k]) {
                continue;
            }
            for j in 0..3 {
                if !is_zero(&b[k][j]) {
                    let s = a[i][k].clone() * b[k][j].clone();
                    out[i][j] = out[i][j].clone() + s;
                }
            }
        }
    }
    out
}

fn commutator(a: &CMat, b: &CMat) -> CMat {
    let ab = mmul(a, b);
    let ba = mmul(b, a);
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| ab[i][j].clone() - ba[i][j].clone())
                .collect()
        })
        .collect()
}

fn flatten(m: &CMat) -> Vec<Scalar> {
    m.iter().flat_map(|row| row.iter().cloned()).collect()
}

/// su(2,1) with respect to the Hermitian form with matrix antidiag(1,1,1):
/// the diagonal real matrices give the 1-dimensional split torus, the
/// compact direction of the minimal Levi and the rotation of the long
/// restricted root span the designated compact Cartan.
pub fn su21_realization() -> Result<LieRealization, LieError> {
    let h = madd(&e_unit(0, 0, sc(1)), &e_unit(2, 2, sc(-1)));
    let z = madd(
        &madd(&e_unit(0, 0, sc_i(1)), &e_unit(1, 1, sc_i(-2))),
        &e_unit(2, 2, sc_i(1)),
    );
    let e1 = madd(&e_unit(0, 1, sc(1)), &e_unit(1, 2, sc(-1)));
    let e2 = madd(&e_unit(0, 1, sc_i(1)), &e_unit(1, 2, sc_i(1)));
    let f1 = madd(&e_unit(1, 0, sc(1)), &e_unit(2, 1, sc(-1)));
    let f2 = madd(&e_unit(1, 0, sc_i(1)), &e_unit(2, 1, sc_i(1)));
    let k = madd(&e_unit(0, 2, sc_i(1)), &e_unit(2, 0, sc_i(1)));
    let v = madd(&e_unit(0, 2, sc_i(1)), &e_unit(2, 0, sc_i(-1)));

    let mats = [h, z, e1, e2, f1, f2, k, v];
    let labels: Vec<String> = ["h", "z", "e1", "e2", "f1", "f2", "k", "v"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let columns: Vec<Vec<Scalar>> = mats.iter().map(flatten).collect();

    let dim = mats.len();
    let mut table = vec![vec![vec![]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let c = flatten(&commutator(&mats[i], &mats[j]));
            let coords = solve_columns(&columns, &c)
                .ok_or_else(|| LieError::Internal("su(2,1) bracket left the span".into()))?;
            table[i][j] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !is_zero(c))
                .collect();
        }
    }
    let aniso = vec![unit_vec(dim, 1), unit_vec(dim, 6)]; // z and k
    LieRealization::new("su(2,1)".into(), labels, table, vec![0], Some(aniso))
}

fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![sc(0); n];
    v[i] = sc(1);
    v
}

/// Kostant cascade of a set of positive roots (closed under the ambient
/// root system): per irreducible component take the highest root, recurse
/// into its orthogonal complement. The result is a strongly orthogonal
/// family; for an equal-rank split subsystem its size equals the rank.
pub(crate) fn kostant_cascade(rs: &RootSystem, positives: &BTreeSet<Root>) -> Vec<Root> {
    if positives.is_empty() {
        return vec![];
    }
    let items: Vec<Root> = positives.iter().cloned().collect();
    // Components under the non-orthogonality relation.
    let n = items.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0usize;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX && !rs.inner(&items[i], &items[j]).is_zero() {
                    comp[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    let mut out = Vec::new();
    for c in 0..next {
        let members: BTreeSet<Root> = items
            .iter()
            .zip(&comp)
            .filter(|(_, &k)| k == c)
            .map(|(r, _)| r.clone())
            .collect();
        // The highest root of the component: the unique positive whose sum
        // with every member leaves the subsystem.
        let candidates: Vec<&Root> = members
            .iter()
            .filter(|gamma| {
                members.iter().all(|beta| {
                    let sum: Vec<i64> = gamma
                        .coords()
                        .iter()
                        .zip(beta.coords())
                        .map(|(a, b)| a + b)
                        .collect();
                    match Root::new(sum) {
                        Ok(s) => !members.contains(&s),
                        Err(_) => true,
                    }
                })
            })
            .collect();
        assert_eq!(
            candidates.len(),
            1,
            "irreducible component has one highest root"
        );
        let theta = candidates[0].clone();
        let rest: BTreeSet<Root> = members
            .iter()
            .filter(|b| *b != &theta && rs.inner(b, &theta).is_zero())
            .cloned()
            .collect();
        out.push(theta);
        out.extend(kostant_cascade(rs, &rest));
    }
    out.sort_by_key(|r| (r.height(), r.coords().to_vec()));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RealizationKind {
    Split,
    Su21,
}

/// A bundled realization paired with the index it certifies and the data
/// binding restricted simple roots to split-Cartan weight tuples.
#[derive(Debug, Clone)]
pub struct CatalogRealization {
    pub form_id: String,
    pub index: SatakeIndex,
    pub realization: LieRealization,
    kind: RealizationKind,
    /// Weight tuple (over the split Cartan, in order) of each restricted
    /// simple root.
    pub simple_tuples: Vec<Vec<Q>>,
}

impl CatalogRealization {
    /// Compact Cartan of the derived Levi of `Θ`, as explicit vectors, for
    /// admissible `Θ`; `None` when the Levi is not equal rank.
    pub fn anisotropic_levi_cartan(&self, theta: &ThetaSubset) -> Option<Vec<Vec<Scalar>>> {
        match self.kind {
            RealizationKind::Su21 => {
                if theta.is_empty() {
                    Some(vec![])
                } else {
                    // Full Θ: the derived Levi is the whole algebra.
                    self.realization.anisotropic_cartan().map(|v| v.to_vec())
                }
            }
            RealizationKind::Split => {
                let rank = self.index.rank();
                let rs = crate::rootsys::generate_roots(self.index.cartan()).ok()?;
                let sub: BTreeSet<Root> = rs
                    .positives()
                    .iter()
                    .filter(|r| r.support().iter().all(|i| theta.contains(*i)))
                    .cloned()
                    .collect();
                let cascade = kostant_cascade(&rs, &sub);
                if cascade.len() != theta.len() {
                    return None; // not equal rank
                }
                let mut positives: Vec<Root> = rs.positives().to_vec();
                positives.sort_by_key(|r| (r.height(), r.coords().to_vec()));
                let m = positives.len();
                let dim = rank + 2 * m;
                Some(
                    cascade
                        .iter()
                        .map(|gamma| {
                            let k = positives.iter().position(|p| p == gamma).unwrap();
                            let mut v = vec![sc(0); dim];
                            v[rank + k] = sc(1); // e_γ
                            v[rank + m + k] = sc(-1); // −f_γ
                            v
                        })
                        .collect(),
                )
            }
        }
    }
}

fn split_tuples(index: &SatakeIndex) -> Vec<Vec<Q>> {
    let n = index.rank();
    (0..n)
        .map(|j| (0..n).map(|i| q_int(index.cartan().entry(i, j))).collect())
        .collect()
}

fn split_entry(form_id: &str, type_spec: &str, field: FieldMode) -> CatalogRealization {
    let index = SatakeIndex::split(type_spec, field).expect("bundled index is valid");
    let mut realization = super::chevalley::chevalley_realization_named(index.cartan(), form_id)
        .expect("bundled realization builds");
    if field == FieldMode::Real {
        // Designate the compact Cartan when the split form is equal rank.
        let rs = crate::rootsys::generate_roots(index.cartan()).expect("finite type");
        let all: BTreeSet<Root> = rs.positives().iter().cloned().collect();
        let cascade = kostant_cascade(&rs, &all);
        if cascade.len() == index.rank() {
            let mut positives: Vec<Root> = rs.positives().to_vec();
            positives.sort_by_key(|r| (r.height(), r.coords().to_vec()));
            let m = positives.len();
            let vectors: Vec<Vec<Scalar>> = cascade
                .iter()
                .map(|gamma| {
                    let k = positives.iter().position(|p| p == gamma).unwrap();
                    let mut v = vec![sc(0); index.rank() + 2 * m];
                    v[index.rank() + k] = sc(1);
                    v[index.rank() + m + k] = sc(-1);
                    v
                })
                .collect();
            realization = realization.with_anisotropic_cartan(vectors);
        }
    }
    CatalogRealization {
        form_id: form_id.to_string(),
        simple_tuples: split_tuples(&index),
        kind: RealizationKind::Split,
        realization,
        index,
    }
}

/// The bundled realization catalog: split types of rank ≤ 4 over the
/// algebraic closure, the real split forms sl(n≤4,R), sp(4,R), so(2,2),
/// so(3,2), and su(2,1).
pub fn bundled_realizations() -> &'static [CatalogRealization] {
    static CATALOG: OnceLock<Vec<CatalogRealization>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut out = Vec::new();
        for t in [
            "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D2", "D3", "D4", "G2",
            "F4",
        ] {
            out.push(split_entry(t, t, FieldMode::AlgebraicallyClosed));
        }
        for (id, t) in [
            ("sl(2,R)", "A1"),
            ("sl(3,R)", "A2"),
            ("sl(4,R)", "A3"),
            ("sp(4,R)", "C2"),
            ("so(3,2)", "B2"),
            ("so(2,2)", "D2"),
        ] {
            out.push(split_entry(id, t, FieldMode::Real));
        }
        let su_index = SatakeIndex::parse("type: A2\ntau: (1 2)\nfield: real\n")
            .expect("su(2,1) index is valid");
        out.push(CatalogRealization {
            form_id: "su(2,1)".into(),
            index: su_index,
            realization: su21_realization().expect("su(2,1) builds"),
            kind: RealizationKind::Su21,
            simple_tuples: vec![vec![q_int(1)]],
        });
        out
    })
}

/// Finds the bundled realization certifying the given index. Matching is
/// structural (Cartan entries, colors, involution, field mode), so e.g.
/// `A1+A1` and `D2` name the same realization.
pub fn realization_for(idx: &SatakeIndex) -> Option<&'static CatalogRealization> {
    bundled_realizations().iter().find(|cr| {
        let a = &cr.index;
        a.field() == idx.field()
            && a.rank() == idx.rank()
            && a.colors() == idx.colors()
            && a.tau() == idx.tau()
            && (0..a.rank())
                .all(|i| (0..a.rank()).all(|j| a.cartan().entry(i, j) == idx.cartan().entry(i, j)))
    })
}
