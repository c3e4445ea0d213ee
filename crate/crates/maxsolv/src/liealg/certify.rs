//! Desk-scale certificates: weight decompositions, subalgebra closures,
//! derived series, the solvable classes themselves, exhaustive maximality
//! certification, and the invariant-nilpotent-subspace check for compact
//! Cartans.

use super::forms::CatalogRealization;
use super::linalg::{kernel, Subspace};
use super::poly::{imaginary_roots, min_poly, rational_roots};
use super::scalar::{conj, is_zero, q_int, sc, sc_q, Scalar, Q};
use super::{LieError, LieRealization, Subalgebra};
use crate::admissible::{is_admissible, Catalog};
use crate::index::RestrictedRootSystem;
use crate::levi::ThetaSubset;
use crate::rootsys::Root;
use num::Zero;
use std::collections::BTreeMap;

/// A simultaneous eigenspace of the adjoint action of the split Cartan:
/// the weight tuple (one rational per split generator, in order) and the
/// subspace.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub weight: Vec<Q>,
    pub space: Subspace,
}

fn lift(ambient_basis: &[Vec<Scalar>], coords: &[Scalar]) -> Vec<Scalar> {
    let n = ambient_basis[0].len();
    let mut out = vec![sc(0); n];
    for (k, c) in coords.iter().enumerate() {
        if is_zero(c) {
            continue;
        }
        for r in 0..n {
            if !is_zero(&ambient_basis[k][r]) {
                let s = ambient_basis[k][r].clone() * c.clone();
                out[r] = out[r].clone() + s;
            }
        }
    }
    out
}

/// Exact simultaneous eigenspace decomposition of the adjoint action of the
/// split Cartan. The split part must act diagonalizably with rational
/// eigenvalues; anything else is an invariant violation, not a tolerance.
pub fn weight_decomposition(lr: &LieRealization) -> Result<Vec<WeightSpace>, LieError> {
    if lr.split_cartan().is_empty() {
        return Err(LieError::EmptySplitCartan);
    }
    let n = lr.dim();
    let whole = Subspace::from_vectors(n, (0..n).map(|i| lr.basis_vector(i)));
    let mut pieces: Vec<(Vec<Q>, Subspace)> = vec![(vec![], whole)];
    for &hidx in lr.split_cartan() {
        let h = lr.basis_vector(hidx);
        let mut next = Vec::new();
        for (weight, space) in pieces {
            let basis = space.basis().to_vec();
            let d = basis.len();
            let mut m = vec![vec![sc(0); d]; d];
            for (c, v) in basis.iter().enumerate() {
                let img = lr.bracket(&h, v);
                let coords = space.coordinates(&img).ok_or_else(|| {
                    LieError::Internal("split action does not preserve a weight piece".into())
                })?;
                for (r, x) in coords.into_iter().enumerate() {
                    m[r][c] = x;
                }
            }
            let mp = min_poly(&m);
            let roots = rational_roots(&mp).ok_or_else(|| {
                LieError::SplitNotDiagonalizable(format!(
                    "ad({}) has a non-rational spectrum",
                    lr.basis_labels()[hidx]
                ))
            })?;
            if roots.iter().any(|(_, mult)| *mult > 1) {
                return Err(LieError::SplitNotDiagonalizable(format!(
                    "ad({}) is not semisimple",
                    lr.basis_labels()[hidx]
                )));
            }
            for (lambda, _) in roots {
                let mut shifted = m.clone();
                for k in 0..d {
                    shifted[k][k] = shifted[k][k].clone() - sc_q(lambda.clone());
                }
                let ker = kernel(d, d, &shifted);
                if ker.dim() == 0 {
                    continue;
                }
                let lifted = Subspace::from_vectors(n, ker.basis().iter().map(|y| lift(&basis, y)));
                let mut w = weight.clone();
                w.push(lambda);
                next.push((w, lifted));
            }
        }
        pieces = next;
    }
    let total: usize = pieces.iter().map(|(_, s)| s.dim()).sum();
    if total != n {
        return Err(LieError::Internal(
            "weight space dimensions do not add up".into(),
        ));
    }
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(pieces
        .into_iter()
        .map(|(weight, space)| WeightSpace { weight, space })
        .collect())
}

/// Smallest bracket-closed subspace containing the vectors.
pub fn generated_subalgebra(lr: &LieRealization, vectors: &[Vec<Scalar>]) -> Subalgebra {
    let mut space = Subspace::from_vectors(lr.dim(), vectors.iter().cloned());
    loop {
        let basis = space.basis().to_vec();
        let mut grew = false;
        'outer: for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let br = lr.bracket(&basis[i], &basis[j]);
                if space.insert(&br) {
                    grew = true;
                    if space.dim() == lr.dim() {
                        break 'outer;
                    }
                }
            }
        }
        if !grew {
            return Subalgebra::from_closed_space(space);
        }
    }
}

fn derived(lr: &LieRealization, s: &Subalgebra) -> Subalgebra {
    let basis = s.basis();
    let mut space = Subspace::empty(lr.dim());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            space.insert(&lr.bracket(&basis[i], &basis[j]));
        }
    }
    Subalgebra::from_closed_space(space)
}

/// The chain `s ⊇ [s,s] ⊇ …`, strictly decreasing until stable.
pub fn derived_series(lr: &LieRealization, s: &Subalgebra) -> Vec<Subalgebra> {
    let mut chain = vec![s.clone()];
    loop {
        let next = derived(lr, chain.last().unwrap());
        if next.dim() == chain.last().unwrap().dim() {
            return chain;
        }
        let done = next.dim() == 0;
        chain.push(next);
        if done {
            return chain;
        }
    }
}

pub fn is_solvable(lr: &LieRealization, s: &Subalgebra) -> bool {
    derived_series(lr, s).last().unwrap().dim() == 0
}

/// `{x ∈ space : [x, space] = 0}`, lifted to ambient coordinates.
fn center_of(lr: &LieRealization, space: &Subspace) -> Vec<Vec<Scalar>> {
    let basis = space.basis();
    let d = basis.len();
    if d == 0 {
        return vec![];
    }
    let n = lr.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for bj in basis {
        let brackets: Vec<Vec<Scalar>> = basis.iter().map(|bk| lr.bracket(bk, bj)).collect();
        for r in 0..n {
            if brackets.iter().all(|v| is_zero(&v[r])) {
                continue;
            }
            rows.push(brackets.iter().map(|v| v[r].clone()).collect());
        }
    }
    let nrows = rows.len();
    let ker = kernel(nrows, d, &rows);
    ker.basis().iter().map(|c| lift(basis, c)).collect()
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![sc(0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if is_zero(&a[i][k]) {
                continue;
            }
            for j in 0..n {
                if !is_zero(&b[k][j]) {
                    let s = a[i][k].clone() * b[k][j].clone();
                    out[i][j] = out[i][j].clone() + s;
                }
            }
        }
    }
    out
}

fn trace_of_product(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Scalar {
    let n = a.len();
    let mut acc = sc(0);
    for r in 0..n {
        for c in 0..n {
            if !is_zero(&a[r][c]) && !is_zero(&b[c][r]) {
                acc = acc + a[r][c].clone() * b[c][r].clone();
            }
        }
    }
    acc
}

/// The nilpotent radical used by the maximality certificate: the derived
/// algebra plus the ad-nilpotent part of the center of `s`. The central
/// part is cut out exactly by trace moments against the (commutative)
/// associative algebra generated by the central adjoints, so no eigenvalue
/// extraction is needed. The result is a nilpotent ideal of `s`; a witness
/// found through it is intrinsic either way.
pub fn nilpotent_radical(lr: &LieRealization, s: &Subalgebra) -> Subalgebra {
    let n = lr.dim();
    let mut space = derived(lr, s).space().clone();
    let center = center_of(lr, s.space());
    if !center.is_empty() {
        let ops: Vec<Vec<Vec<Scalar>>> = center.iter().map(|z| lr.ad_matrix(z)).collect();
        let identity: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { sc(1) } else { sc(0) }).collect())
            .collect();
        let flat = |m: &Vec<Vec<Scalar>>| -> Vec<Scalar> {
            m.iter().flat_map(|row| row.iter().cloned()).collect()
        };
        let mut span = Subspace::empty(n * n);
        span.insert(&flat(&identity));
        let mut algebra = vec![identity.clone()];
        let mut queue = vec![identity];
        while let Some(w) = queue.pop() {
            for op in &ops {
                let prod = mat_mul(&w, op);
                if span.insert(&flat(&prod)) {
                    algebra.push(prod.clone());
                    queue.push(prod);
                }
            }
        }
        let rows: Vec<Vec<Scalar>> = algebra
            .iter()
            .map(|w| ops.iter().map(|op| trace_of_product(op, w)).collect())
            .collect();
        let ker = kernel(rows.len(), ops.len(), &rows);
        for coef in ker.basis() {
            space.insert(&lift(&center, coef));
        }
    }
    Subalgebra::from_closed_space(space)
}

#[derive(Debug, Clone, PartialEq)]
pub enum MaximalityVerdict {
    Maximal,
    NotMaximal { witness: Vec<Scalar> },
}

/// One adjunction trial recorded by the certificate.
#[derive(Debug, Clone)]
pub struct TestedAdjunction {
    pub weight: Vec<Q>,
    pub vector: Vec<Scalar>,
    pub extension_solvable: bool,
    pub stage: &'static str,
}

#[derive(Debug, Clone)]
pub struct MaximalityCertificate {
    pub verdict: MaximalityVerdict,
    pub tested: Vec<TestedAdjunction>,
}

impl MaximalityCertificate {
    pub fn is_maximal(&self) -> bool {
        matches!(self.verdict, MaximalityVerdict::Maximal)
    }
}

/// Certifies maximality of a solvable subalgebra by brute force: every
/// weight-space basis vector outside `s` must generate a non-solvable
/// extension, and the normalizer of the nilpotent radical of `s` inside
/// each weight space must add no solvable extension either.
pub fn certify_maximal_solvable(
    lr: &LieRealization,
    s: &Subalgebra,
) -> Result<MaximalityCertificate, LieError> {
    if !is_solvable(lr, s) {
        return Err(LieError::NotSolvable);
    }
    let wd = weight_decomposition(lr)?;
    let mut tested = Vec::new();
    let try_vector = |tested: &mut Vec<TestedAdjunction>,
                      weight: &[Q],
                      v: &[Scalar],
                      stage: &'static str|
     -> Option<Vec<Scalar>> {
        if s.contains(v) {
            return None;
        }
        let mut gens: Vec<Vec<Scalar>> = s.basis().to_vec();
        gens.push(v.to_vec());
        let ext = generated_subalgebra(lr, &gens);
        let solvable = is_solvable(lr, &ext);
        tested.push(TestedAdjunction {
            weight: weight.to_vec(),
            vector: v.to_vec(),
            extension_solvable: solvable,
            stage,
        });
        solvable.then(|| v.to_vec())
    };

    for ws in &wd {
        for v in ws.space.basis() {
            if let Some(witness) = try_vector(&mut tested, &ws.weight, v, "weight-basis") {
                return Ok(MaximalityCertificate {
                    verdict: MaximalityVerdict::NotMaximal { witness },
                    tested,
                });
            }
        }
    }

    // Second pass: elements of each weight space normalizing the nilpotent
    // radical (these may be combinations the basis pass cannot see).
    let nil = nilpotent_radical(lr, s);
    for ws in &wd {
        let basis = ws.space.basis();
        let d = basis.len();
        if d == 0 {
            continue;
        }
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for nj in nil.basis() {
            let reduced: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|v| nil.space().reduce(&lr.bracket(v, nj)))
                .collect();
            for r in 0..lr.dim() {
                if reduced.iter().all(|x| is_zero(&x[r])) {
                    continue;
                }
                rows.push(reduced.iter().map(|x| x[r].clone()).collect());
            }
        }
        let normalizer = if rows.is_empty() {
            // Everything normalizes (e.g. the radical is zero).
            Subspace::from_vectors(
                d,
                (0..d).map(|i| {
                    let mut v = vec![sc(0); d];
                    v[i] = sc(1);
                    v
                }),
            )
        } else {
            let nrows = rows.len();
            kernel(nrows, d, &rows)
        };
        for coef in normalizer.basis() {
            let v = lift(basis, coef);
            if let Some(witness) = try_vector(&mut tested, &ws.weight, &v, "nilradical-normalizer")
            {
                return Ok(MaximalityCertificate {
                    verdict: MaximalityVerdict::NotMaximal { witness },
                    tested,
                });
            }
        }
    }
    Ok(MaximalityCertificate {
        verdict: MaximalityVerdict::Maximal,
        tested,
    })
}

#[derive(Debug, Clone)]
pub enum InvariantNilpotentsVerdict {
    /// No plane of any nonzero frequency consists of nilpotent elements.
    Holds { planes_tested: usize },
    /// A nonzero invariant subspace of ad-nilpotent elements, spanned by the
    /// two listed real vectors.
    Counterexample { plane: Vec<Vec<Scalar>> },
}

impl InvariantNilpotentsVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, InvariantNilpotentsVerdict::Holds { .. })
    }
}

fn nilpotent_matrix(m: &[Vec<Scalar>]) -> bool {
    let n = m.len();
    for start in 0..n {
        let mut v = vec![sc(0); n];
        v[start] = sc(1);
        for _ in 0..n {
            let mut next = vec![sc(0); n];
            for (r, row) in m.iter().enumerate() {
                let mut acc = sc(0);
                for c in 0..n {
                    if !is_zero(&row[c]) && !is_zero(&v[c]) {
                        acc = acc + row[c].clone() * v[c].clone();
                    }
                }
                next[r] = acc;
            }
            v = next;
            if v.iter().all(is_zero) {
                break;
            }
        }
        if v.iter().any(|x| !is_zero(x)) {
            return false;
        }
    }
    true
}

/// Checks that the designated anisotropic Cartan normalizes no nonzero
/// invariant subspace of ad-nilpotent elements: decompose over a generic
/// element of the Cartan (spectrum in `i·ℚ`), pair conjugate frequencies
/// into real rotation planes, and test each plane for nilpotency. Nilpotency
/// is constant on a plane minus zero, since the rotation orbit of any
/// element sweeps every direction.
pub fn invariant_nilpotents_check(
    lr: &LieRealization,
) -> Result<InvariantNilpotentsVerdict, LieError> {
    let t_vecs: Vec<Vec<Scalar>> = lr
        .anisotropic_cartan()
        .ok_or(LieError::NoAnisotropicCartan)?
        .to_vec();
    let n = lr.dim();
    for a in &t_vecs {
        for b in &t_vecs {
            if lr.bracket(a, b).iter().any(|c| !is_zero(c)) {
                return Err(LieError::CartanNotCommuting);
            }
        }
    }
    // Anisotropy of each designated generator: purely imaginary, semisimple
    // spectrum. The split-Cartan-in-place-of-t guard trips here.
    for (k, t) in t_vecs.iter().enumerate() {
        let mp = min_poly(&lr.ad_matrix(t));
        match imaginary_roots(&mp) {
            Some(roots) if roots.iter().all(|(_, m)| *m == 1) => {}
            _ => {
                return Err(LieError::NotAnisotropic(format!(
                    "generator {} = {} has spectrum outside i·Q",
                    k + 1,
                    lr.display_vector(t)
                )))
            }
        }
    }
    // Generic element: all nonzero eigenspaces one-dimensional, kernel equal
    // to the designated Cartan itself.
    let t_space = Subspace::from_vectors(n, t_vecs.iter().cloned());
    for multiplier in 1i64..=40 {
        let mut t0 = vec![sc(0); n];
        let mut weight = q_int(1);
        for t in &t_vecs {
            for (r, x) in t.iter().enumerate() {
                let s = x.clone() * sc_q(weight.clone());
                t0[r] = t0[r].clone() + s;
            }
            weight *= q_int(multiplier);
        }
        let m = lr.ad_matrix(&t0);
        let mp = min_poly(&m);
        let Some(roots) = imaginary_roots(&mp) else {
            continue;
        };
        let mut eigen: Vec<(Q, Subspace)> = Vec::new();
        for (q, _) in &roots {
            let mut shifted = m.clone();
            for k in 0..n {
                shifted[k][k] = shifted[k][k].clone() - Scalar::new(Q::zero(), q.clone());
            }
            eigen.push((q.clone(), kernel(n, n, &shifted)));
        }
        let zero_piece = eigen.iter().find(|(q, _)| q.is_zero());
        let kernel_ok = match zero_piece {
            Some((_, space)) => {
                space.dim() == t_space.dim() && t_vecs.iter().all(|t| space.contains(t))
            }
            None => t_space.dim() == 0,
        };
        let regular = kernel_ok && eigen.iter().all(|(q, s)| q.is_zero() || s.dim() == 1);
        if !regular {
            continue;
        }
        // Pair ±q into real planes and test nilpotency of one element each.
        let mut planes = 0usize;
        for (q, space) in &eigen {
            if *q <= Q::zero() {
                continue;
            }
            planes += 1;
            let w = &space.basis()[0];
            let wbar: Vec<Scalar> = w.iter().map(conj).collect();
            let x1: Vec<Scalar> = w
                .iter()
                .zip(&wbar)
                .map(|(a, b)| a.clone() + b.clone())
                .collect();
            let x2: Vec<Scalar> = w
                .iter()
                .zip(&wbar)
                .map(|(a, b)| (a.clone() - b.clone()) * Scalar::new(Q::zero(), q_int(1)))
                .collect();
            if nilpotent_matrix(&lr.ad_matrix(&x1)) {
                return Ok(InvariantNilpotentsVerdict::Counterexample {
                    plane: vec![x1, x2],
                });
            }
        }
        return Ok(InvariantNilpotentsVerdict::Holds {
            planes_tested: planes,
        });
    }
    Err(LieError::Internal(
        "no regular element of the designated Cartan found".into(),
    ))
}

/// The solvable subalgebra of an admissible `Θ`: a compact Cartan of the
/// derived Levi, the center of the Levi, and every weight space of a
/// positive restricted root outside the span of `Θ`.
pub fn build_b_theta(
    cr: &CatalogRealization,
    rrs: &RestrictedRootSystem,
    theta: &ThetaSubset,
) -> Result<Subalgebra, LieError> {
    let cert = is_admissible(&cr.index, rrs, theta, Catalog::bundled(), None)?;
    if !cert.admissible {
        return Err(LieError::NotAdmissibleTheta(theta.display(rrs)));
    }
    let compact = cr.anisotropic_levi_cartan(theta).ok_or_else(|| {
        LieError::Internal("admissible theta without a designated compact Levi Cartan".into())
    })?;
    let lr = &cr.realization;
    let wd = weight_decomposition(lr)?;

    let tuple_of = |root: &Root| -> Vec<Q> {
        let mut t = vec![Q::zero(); lr.split_cartan().len()];
        for (j, &c) in root.coords().iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, val) in cr.simple_tuples[j].iter().enumerate() {
                t[i] += val.clone() * q_int(c);
            }
        }
        t
    };
    let mut root_of: BTreeMap<Vec<Q>, Root> = BTreeMap::new();
    for root in rrs.base().roots() {
        if root_of.insert(tuple_of(root), root.clone()).is_some() {
            return Err(LieError::Internal(
                "restricted roots share a weight tuple".into(),
            ));
        }
    }

    let mut levi_vectors: Vec<Vec<Scalar>> = Vec::new();
    let mut nilrad_vectors: Vec<Vec<Scalar>> = Vec::new();
    for ws in &wd {
        if ws.weight.iter().all(|q| q.is_zero()) {
            levi_vectors.extend(ws.space.basis().iter().cloned());
            continue;
        }
        let root = root_of
            .get(&ws.weight)
            .ok_or_else(|| LieError::Internal("weight does not match a restricted root".into()))?;
        if root.support().iter().all(|i| theta.contains(*i)) {
            levi_vectors.extend(ws.space.basis().iter().cloned());
        } else if root.is_positive() {
            nilrad_vectors.extend(ws.space.basis().iter().cloned());
        }
    }

    let levi_space = Subspace::from_vectors(lr.dim(), levi_vectors);
    let mut vectors = compact;
    vectors.extend(center_of(lr, &levi_space));
    vectors.extend(nilrad_vectors);
    Subalgebra::from_span(lr, vectors)
}
