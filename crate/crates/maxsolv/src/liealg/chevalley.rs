//! Chevalley basis of the split form from a Cartan matrix.
//!
//! Basis `{h_i} ∪ {e_γ, f_γ}` with integer structure constants. The signs of
//! the constants `N_{α,β} = ±(p+1)` are fixed by the extraspecial-pair
//! convention: positive roots are totally ordered by (height, lex); for each
//! positive root the minimal special pair writing it as a sum gets the
//! positive sign, and every other constant is propagated through the cyclic
//! and quadruple identities. Any consistent convention would do; the
//! exhaustive Jacobi check in `LieRealization::validate` pins this one down.

use super::scalar::{q_int, sc_q, Scalar, Q};
use super::{LieError, LieRealization};
use crate::rootsys::{generate_roots, CartanMatrix, Root, RootSystem};
use num::Zero;
use std::collections::BTreeMap;

fn add_coords(a: &Root, b: &Root) -> Option<Root> {
    let coords: Vec<i64> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x + y)
        .collect();
    Root::new(coords).ok()
}

fn sub_coords(a: &Root, b: &Root) -> Option<Root> {
    let coords: Vec<i64> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x - y)
        .collect();
    Root::new(coords).ok()
}

fn order_key(r: &Root) -> (i64, Vec<i64>) {
    (r.height(), r.coords().to_vec())
}

struct Constants<'a> {
    rs: &'a RootSystem,
    norms: BTreeMap<Root, Q>,
    // N for positive special pairs (a, b), a < b in the total order.
    table: BTreeMap<(Root, Root), Q>,
}

impl<'a> Constants<'a> {
    fn norm(&self, r: &Root) -> Q {
        self.norms[r].clone()
    }

    /// Largest `k` with `b − k·a` a root.
    fn chain_down(&self, a: &Root, b: &Root) -> i64 {
        let mut k = 0;
        let mut cur = b.clone();
        loop {
            match sub_coords(&cur, a) {
                Some(next) if self.rs.contains(&next) => {
                    cur = next;
                    k += 1;
                }
                _ => return k,
            }
        }
    }

    /// `N_{x,y}` for arbitrary roots, resolved to the positive-pair table
    /// through `N_{−α,−β} = −N_{α,β}` and the cyclic identity
    /// `N_{α,β}/|γ|² = N_{β,γ}/|α|²` for `α+β+γ = 0`.
    fn nval(&self, x: &Root, y: &Root) -> Q {
        let Some(s) = add_coords(x, y) else {
            return Q::zero();
        };
        if !self.rs.contains(&s) {
            return Q::zero();
        }
        match (x.is_positive(), y.is_positive()) {
            (true, true) => {
                if order_key(x) < order_key(y) {
                    self.table[&(x.clone(), y.clone())].clone()
                } else {
                    -self.table[&(y.clone(), x.clone())].clone()
                }
            }
            (false, false) => -self.nval(&x.negated(), &y.negated()),
            _ => {
                let w = s.negated();
                self.nval(y, &w) * self.norm(&w) / self.norm(x)
            }
        }
    }
}

/// Split form of a finite-type Cartan matrix of rank at most 4.
pub fn chevalley_realization(cartan: &CartanMatrix) -> Result<LieRealization, LieError> {
    chevalley_realization_named(cartan, &format!("split {}", type_of(cartan)))
}

pub(crate) fn chevalley_realization_named(
    cartan: &CartanMatrix,
    form_id: &str,
) -> Result<LieRealization, LieError> {
    let rank = cartan.rank();
    if rank > 4 {
        return Err(LieError::RankBound(rank));
    }
    let rs = generate_roots(cartan)?;
    let mut positives: Vec<Root> = rs.positives().to_vec();
    positives.sort_by_key(order_key);

    let norms: BTreeMap<Root, Q> = rs
        .roots()
        .iter()
        .map(|r| (r.clone(), rs.inner(r, r)))
        .collect();
    let mut cons = Constants {
        rs: &rs,
        norms,
        table: BTreeMap::new(),
    };

    // Fill the positive-pair table in increasing order of the sum.
    for gamma in &positives {
        if gamma.height() < 2 {
            continue;
        }
        let mut special: Vec<(Root, Root)> = Vec::new();
        for alpha in &positives {
            if order_key(alpha) >= order_key(gamma) {
                break;
            }
            if let Some(beta) = sub_coords(gamma, alpha) {
                if beta.is_positive() && rs.contains(&beta) && order_key(alpha) < order_key(&beta) {
                    special.push((alpha.clone(), beta.clone()));
                }
            }
        }
        special.sort_by_key(|(a, _)| order_key(a));
        let (alpha1, beta1) = special[0].clone();
        let p = cons.chain_down(&alpha1, &beta1);
        cons.table
            .insert((alpha1.clone(), beta1.clone()), q_int(p + 1));
        for (alpha, beta) in &special[1..] {
            // Jacobi on (e_{−α1}, e_α, e_β), all terms landing in e_{β1}.
            let t1 = match sub_coords(alpha, &alpha1) {
                Some(d) if rs.contains(&d) => {
                    cons.nval(&alpha1.negated(), alpha) * cons.nval(&d, beta)
                }
                _ => Q::zero(),
            };
            let t2 = match sub_coords(beta, &alpha1) {
                Some(d) if rs.contains(&d) => {
                    cons.nval(beta, &alpha1.negated()) * cons.nval(&d, alpha)
                }
                _ => Q::zero(),
            };
            let n_extra = cons.table[&(alpha1.clone(), beta1.clone())].clone();
            let val = (t1 + t2) * cons.norm(gamma) / (n_extra * cons.norm(&beta1));
            if !val.is_integer() || val.is_zero() {
                return Err(LieError::Internal(format!(
                    "structure constant for {:?}+{:?} came out {}",
                    alpha.coords(),
                    beta.coords(),
                    val
                )));
            }
            cons.table.insert((alpha.clone(), beta.clone()), val);
        }
    }

    // Basis: h_1..h_r, then e_γ, then f_γ in the height order.
    let m = positives.len();
    let dim = rank + 2 * m;
    let mut labels: Vec<String> = (1..=rank).map(|i| format!("h{i}")).collect();
    for r in &positives {
        labels.push(format!("e{}", coord_tag(r)));
    }
    for r in &positives {
        labels.push(format!("f{}", coord_tag(r)));
    }

    let index_of = |r: &Root| -> usize {
        let pos = positives.binary_search_by_key(&order_key(r), order_key);
        match pos {
            Ok(k) => rank + k,
            Err(_) => {
                let neg = r.negated();
                let k = positives
                    .binary_search_by_key(&order_key(&neg), order_key)
                    .expect("root or its negative is positive");
                rank + m + k
            }
        }
    };
    let root_at = |idx: usize| -> Root {
        if idx < rank + m {
            positives[idx - rank].clone()
        } else {
            positives[idx - rank - m].negated()
        }
    };

    let mut table: Vec<Vec<Vec<(usize, Scalar)>>> = vec![vec![vec![]; dim]; dim];
    let put = |table: &mut Vec<Vec<Vec<(usize, Scalar)>>>, i: usize, j: usize, k: usize, c: Q| {
        if !c.is_zero() {
            table[i][j].push((k, sc_q(c.clone())));
            table[j][i].push((k, sc_q(-c)));
        }
    };

    // [h_i, e_δ] = ⟨δ, α_i^∨⟩ e_δ
    for i in 0..rank {
        for idx in rank..dim {
            let delta = root_at(idx);
            let pairing: i64 = (0..rank)
                .map(|j| cartan.entry(i, j) * delta.coords()[j])
                .sum();
            put(&mut table, i, idx, idx, q_int(pairing));
        }
    }
    // Root-root brackets.
    for i in rank..dim {
        for j in i + 1..dim {
            let (a, b) = (root_at(i), root_at(j));
            match add_coords(&a, &b) {
                None => {
                    // b = −a is the only zero-sum case: [e_γ, f_γ] = h_γ.
                    let zero_sum = a.coords().iter().zip(b.coords()).all(|(x, y)| x + y == 0);
                    if zero_sum {
                        let positive = if a.is_positive() { &a } else { &b };
                        let sign = if a.is_positive() { 1 } else { -1 };
                        let g = rs.inner(positive, positive);
                        for (t, &mi) in positive.coords().iter().enumerate() {
                            if mi == 0 {
                                continue;
                            }
                            let simple = &rs.simples()[t];
                            let coef = q_int(mi * sign) * rs.inner(simple, simple) / g.clone();
                            if !coef.is_integer() {
                                return Err(LieError::Internal("non-integral coroot".into()));
                            }
                            put(&mut table, i, j, t, coef);
                        }
                    }
                }
                Some(sum) => {
                    if rs.contains(&sum) {
                        let n = cons.nval(&a, &b);
                        if !n.is_integer() {
                            return Err(LieError::Internal(
                                "non-integral structure constant".into(),
                            ));
                        }
                        put(&mut table, i, j, index_of(&sum), n);
                    }
                }
            }
        }
    }

    LieRealization::new(
        form_id.to_string(),
        labels,
        table,
        (0..rank).collect(),
        None,
    )
}

fn coord_tag(r: &Root) -> String {
    r.coords().iter().map(|c| c.to_string()).collect()
}

fn type_of(cartan: &CartanMatrix) -> String {
    let mut pieces: Vec<String> = Vec::new();
    for l in cartan.labels() {
        let piece = l.split('.').next().unwrap_or(l).to_string();
        if pieces.last() != Some(&piece) {
            pieces.push(piece);
        }
    }
    pieces.join("+")
}
