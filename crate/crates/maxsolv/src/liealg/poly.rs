//! Polynomials over the Gaussian rationals, minimal polynomials of exact
//! matrices, and complete root extraction for the two spectra that occur
//! here: rational (split toral parts) and purely imaginary (compact toral
//! parts). Root finding is rational-root-theorem enumeration after clearing
//! denominators; when a polynomial does not split over the expected field
//! the caller receives `None` and reports the invariant violation instead of
//! approximating.

use super::scalar::{is_zero, q_int, sc, Scalar, Q};
use num::{BigInt, One, Signed, Zero};

/// Coefficients low to high, no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn one() -> Self {
        Poly(vec![sc(1)])
    }

    pub fn monomial(deg: usize) -> Self {
        let mut c = vec![sc(0); deg + 1];
        c[deg] = sc(1);
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn trim(mut self) -> Self {
        while self.0.last().map(is_zero).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    pub fn scale(&self, f: &Scalar) -> Poly {
        Poly(self.0.iter().map(|c| c.clone() * f.clone()).collect()).trim()
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            None => Poly::zero(),
            Some(lead) => self.scale(&(sc(1) / lead.clone())),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![sc(0); n];
        for (k, c) in self.0.iter().enumerate() {
            out[k] = out[k].clone() + c.clone();
        }
        for (k, c) in other.0.iter().enumerate() {
            out[k] = out[k].clone() + c.clone();
        }
        Poly(out).trim()
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&sc(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![sc(0); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if is_zero(a) {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !is_zero(b) {
                    let s = a.clone() * b.clone();
                    out[i + j] = out[i + j].clone() + s;
                }
            }
        }
        Poly(out).trim()
    }

    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![sc(0); self.0.len()];
        let dlead = divisor.0.last().unwrap().clone();
        while !rem.is_zero() && rem.degree() >= divisor.degree() {
            let shift = rem.degree() - divisor.degree();
            let f = rem.0.last().unwrap().clone() / dlead.clone();
            quot[shift] = quot[shift].clone() + f.clone();
            for (k, c) in divisor.0.iter().enumerate() {
                let s = c.clone() * f.clone();
                rem.0[k + shift] = rem.0[k + shift].clone() - s;
            }
            rem = rem.trim();
        }
        (Poly(quot).trim(), rem)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.mul(other).divmod(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = sc(0);
        for c in self.0.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn all_real(&self) -> bool {
        self.0.iter().all(|c| c.im.is_zero())
    }
}

fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    let n = m.len();
    let mut out = vec![sc(0); n];
    for (r, row) in m.iter().enumerate() {
        let mut acc = sc(0);
        for (c, x) in row.iter().enumerate() {
            if !is_zero(x) && !is_zero(&v[c]) {
                acc = acc + x.clone() * v[c].clone();
            }
        }
        out[r] = acc;
    }
    out
}

/// Monic annihilator of `v` under the matrix `m` (the minimal `p` with
/// `p(m)·v = 0`), via an augmented Krylov echelon.
fn annihilator(m: &[Vec<Scalar>], v: &[Scalar]) -> Poly {
    let n = m.len();
    // rows: reduced Krylov vectors with the polynomial that produced them.
    let mut polys: Vec<Poly> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut power = v.to_vec();
    for d in 0..=n {
        let mut vec = power.clone();
        let mut poly = Poly::monomial(d);
        for (k, row) in rows.iter().enumerate() {
            let p = pivots[k];
            if !is_zero(&vec[p]) {
                let f = vec[p].clone();
                for c in 0..n {
                    if !is_zero(&row[c]) {
                        let s = row[c].clone() * f.clone();
                        vec[c] = vec[c].clone() - s;
                    }
                }
                poly = poly.sub(&polys[k].scale(&f));
            }
        }
        match vec.iter().position(|x| !is_zero(x)) {
            None => return poly.monic(),
            Some(p) => {
                let inv = sc(1) / vec[p].clone();
                let vec: Vec<Scalar> = vec.iter().map(|x| x.clone() * inv.clone()).collect();
                let poly = poly.scale(&inv);
                rows.push(vec);
                polys.push(poly);
                pivots.push(p);
            }
        }
        power = mat_vec(m, &power);
    }
    unreachable!("Krylov sequence of length dim+1 is dependent");
}

/// Minimal polynomial of an exact square matrix.
pub fn min_poly(m: &[Vec<Scalar>]) -> Poly {
    let n = m.len();
    let mut acc = Poly::one();
    for k in 0..n {
        let mut e = vec![sc(0); n];
        e[k] = sc(1);
        acc = acc.lcm(&annihilator(m, &e));
        if acc.degree() == n {
            break;
        }
    }
    acc
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let mut e = 0u32;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            primes.push((d.clone(), e));
        }
        d += 1;
        // Desk-scale guard: constants here come from small spectra.
        if d > BigInt::from(1_000_000) {
            break;
        }
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let base = out.clone();
        let mut pe = BigInt::one();
        for _ in 0..e {
            pe = &pe * &p;
            out.extend(base.iter().map(|b| b * &pe));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All roots (with multiplicity) of a real-rational polynomial, provided it
/// splits completely over ℚ; `None` otherwise.
pub fn rational_roots(p: &Poly) -> Option<Vec<(Q, usize)>> {
    if !p.all_real() || p.is_zero() {
        return None;
    }
    let mut out: Vec<(Q, usize)> = Vec::new();
    let mut p = p.clone();
    // Root zero first.
    let mut zero_mult = 0usize;
    while !p.0.is_empty() && is_zero(&p.0[0]) {
        p.0.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((Q::zero(), zero_mult));
    }
    if p.degree() == 0 {
        return Some(out);
    }
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in &p.0 {
        lcm = num::integer::lcm(lcm, c.re.denom().clone());
    }
    let ints: Vec<BigInt> =
        p.0.iter()
            .map(|c| c.re.numer() * (&lcm / c.re.denom()))
            .collect();
    let a0 = ints.first().unwrap().clone();
    let ad = ints.last().unwrap().clone();
    let mut candidates: Vec<Q> = Vec::new();
    for num in divisors(&a0) {
        for den in divisors(&ad) {
            let q = Q::new(num.clone(), den.clone());
            candidates.push(q.clone());
            candidates.push(-q);
        }
    }
    candidates.sort();
    candidates.dedup();
    for cand in candidates {
        let x = Scalar::new(cand.clone(), Q::zero());
        let mut mult = 0usize;
        while !p.is_zero() && p.degree() >= 1 && is_zero(&p.eval(&x)) {
            let linear = Poly(vec![-x.clone(), sc(1)]);
            let (q, r) = p.divmod(&linear);
            debug_assert!(r.is_zero());
            p = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((cand, mult));
        }
    }
    if p.degree() > 0 {
        return None; // does not split over ℚ
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Some(out)
}

/// All roots of `p` of the form `i·q` with `q` rational, provided `p` splits
/// completely that way; returns the list of `q` with multiplicity.
pub fn imaginary_roots(p: &Poly) -> Option<Vec<(Q, usize)>> {
    if p.is_zero() {
        return None;
    }
    // Substitute x = i·y and normalize by i^deg: the coefficient of y^k
    // becomes c_k · i^(k − d), which must be real throughout.
    let d = p.degree() as i64;
    let mut coeffs = Vec::with_capacity(p.0.len());
    for (k, c) in p.0.iter().enumerate() {
        let twist = ((k as i64 - d) % 4 + 4) % 4;
        let t = match twist {
            0 => c.clone(),
            1 => c.clone() * Scalar::new(Q::zero(), q_int(1)),
            2 => c.clone() * sc(-1),
            _ => c.clone() * Scalar::new(Q::zero(), q_int(-1)),
        };
        if !t.im.is_zero() {
            return None;
        }
        coeffs.push(t);
    }
    rational_roots(&Poly(coeffs).trim())
}
