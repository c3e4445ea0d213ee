//! Exact linear algebra over the Gaussian rationals.
//!
//! The workhorse is [`Subspace`], an incrementally maintained reduced row
//! echelon form. Insertion keeps the representation canonical at all times,
//! so two equal subspaces have identical bases and subspace equality is
//! plain matrix equality.

use super::scalar::{is_zero, Scalar};
use num::{One, Zero};

fn zero() -> Scalar {
    Scalar::new(num::BigRational::zero(), num::BigRational::zero())
}

/// A subspace of `ℚ(i)^n` in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn empty(cols: usize) -> Self {
        Subspace {
            cols,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn from_vectors(cols: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut s = Subspace::empty(cols);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Residue of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !is_zero(&v[p]) {
                let f = v[p].clone();
                for c in 0..self.cols {
                    if !is_zero(&row[c]) {
                        let s = row[c].clone() * f.clone();
                        v[c] = v[c].clone() - s;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(is_zero)
    }

    /// Inserts a vector; returns true when the dimension grew. The basis
    /// stays fully reduced.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !is_zero(x)) else {
            return false;
        };
        let inv = Scalar::new(num::BigRational::one(), num::BigRational::zero()) / v[p].clone();
        for x in v.iter_mut() {
            if !is_zero(x) {
                *x = x.clone() * inv.clone();
            }
        }
        // Back-eliminate the new pivot column from existing rows.
        for row in self.rows.iter_mut() {
            if !is_zero(&row[p]) {
                let f = row[p].clone();
                for c in 0..v.len() {
                    if !is_zero(&v[c]) {
                        let s = v[c].clone() * f.clone();
                        row[c] = row[c].clone() - s;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of `v` in the row basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut v = v.to_vec();
        let mut coords = vec![zero(); self.rows.len()];
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if !is_zero(&v[p]) {
                let f = v[p].clone();
                coords[k] = f.clone();
                for c in 0..self.cols {
                    if !is_zero(&row[c]) {
                        let s = row[c].clone() * f.clone();
                        v[c] = v[c].clone() - s;
                    }
                }
            }
        }
        v.iter().all(is_zero).then_some(coords)
    }
}

/// Kernel of the linear map given by `matrix` (rows × cols applied as
/// `matrix · x`), as a canonical subspace of `ℚ(i)^cols`.
pub fn kernel(rows: usize, cols: usize, matrix: &[Vec<Scalar>]) -> Subspace {
    // Row-reduce the matrix, then read off the free columns.
    let mut m: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(r) = (rank..rows).find(|&r| !is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(rank, r);
        let inv =
            Scalar::new(num::BigRational::one(), num::BigRational::zero()) / m[rank][col].clone();
        for c in 0..cols {
            if !is_zero(&m[rank][c]) {
                m[rank][c] = m[rank][c].clone() * inv.clone();
            }
        }
        for r2 in 0..rows {
            if r2 != rank && !is_zero(&m[r2][col]) {
                let f = m[r2][col].clone();
                for c in 0..cols {
                    if !is_zero(&m[rank][c]) {
                        let s = m[rank][c].clone() * f.clone();
                        m[r2][c] = m[r2][c].clone() - s;
                    }
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let mut out = Subspace::empty(cols);
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![zero(); cols];
        v[free] = Scalar::new(num::BigRational::one(), num::BigRational::zero());
        for (k, &p) in pivots.iter().enumerate() {
            v[p] = -m[k][free].clone();
        }
        out.insert(&v);
    }
    out
}

/// Solves `Σ x_k · columns[k] = b` exactly; `None` when `b` is outside the
/// column span.
pub fn solve_columns(columns: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = b.len();
    let n = columns.len();
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Scalar> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(r) = (rank..rows).find(|&r| !is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(rank, r);
        let inv =
            Scalar::new(num::BigRational::one(), num::BigRational::zero()) / m[rank][col].clone();
        for x in m[rank].iter_mut() {
            if !is_zero(x) {
                *x = x.clone() * inv.clone();
            }
        }
        for r2 in 0..rows {
            if r2 != rank && !is_zero(&m[r2][col]) {
                let f = m[r2][col].clone();
                for c in 0..=n {
                    if !is_zero(&m[rank][c]) {
                        let s = m[rank][c].clone() * f.clone();
                        m[r2][c] = m[r2][c].clone() - s;
                    }
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // Consistency: no row of the form (0 … 0 | nonzero).
    for r in rank..rows {
        if !is_zero(&m[r][n]) {
            return None;
        }
    }
    let mut x = vec![zero(); n];
    for (r, c) in pivots {
        x[c] = m[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{sc, sc_i};
    use super::*;

    #[test]
    fn canonical_rref() {
        let a = Subspace::from_vectors(
            3,
            vec![vec![sc(1), sc(2), sc(3)], vec![sc(2), sc(4), sc(7)]],
        );
        let b = Subspace::from_vectors(
            3,
            vec![vec![sc(0), sc(0), sc(1)], vec![sc(3), sc(6), sc(2)]],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[sc(1), sc(2), sc(0)]));
        assert!(!a.contains(&[sc(1), sc(0), sc(0)]));
    }

    #[test]
    fn complex_pivot_normalization() {
        let s = Subspace::from_vectors(2, vec![vec![sc_i(2), sc(2)]]);
        assert_eq!(s.basis()[0], vec![sc(1), sc_i(-1)]);
    }

    #[test]
    fn kernel_and_solve() {
        // x + y + z = 0
        let k = kernel(1, 3, &[vec![sc(1), sc(1), sc(1)]]);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            let sum = v[0].clone() + v[1].clone() + v[2].clone();
            assert!(is_zero(&sum));
        }
        let cols = vec![vec![sc(1), sc(0), sc(1)], vec![sc(0), sc(1), sc(1)]];
        let x = solve_columns(&cols, &[sc(2), sc(3), sc(5)]).unwrap();
        assert_eq!(x, vec![sc(2), sc(3)]);
        assert!(solve_columns(&cols, &[sc(1), sc(0), sc(0)]).is_none());
    }

    #[test]
    fn coordinates_in_basis() {
        let s = Subspace::from_vectors(
            3,
            vec![vec![sc(1), sc(1), sc(0)], vec![sc(0), sc(0), sc(1)]],
        );
        let c = s.coordinates(&[sc(2), sc(2), sc(5)]).unwrap();
        assert_eq!(c, vec![sc(2), sc(5)]);
        assert!(s.coordinates(&[sc(1), sc(0), sc(0)]).is_none());
    }
}
