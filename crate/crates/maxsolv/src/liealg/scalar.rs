//! Gaussian rational scalars.
//!
//! Every Lie-algebra computation runs over `ℚ(i)`: rationals suffice for the
//! split forms, the imaginary unit enters through unitary realizations and
//! through eigenvalue analysis of compact tori. Zero tolerance everywhere —
//! equality is exact.

use num::complex::Complex;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Q = BigRational;
pub type Scalar = Complex<BigRational>;

pub fn q_int(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn sc(n: i64) -> Scalar {
    Complex::new(q_int(n), Q::zero())
}

pub fn sc_q(q: Q) -> Scalar {
    Complex::new(q, Q::zero())
}

pub fn sc_i(n: i64) -> Scalar {
    Complex::new(Q::zero(), q_int(n))
}

pub fn is_zero(s: &Scalar) -> bool {
    s.re.is_zero() && s.im.is_zero()
}

pub fn conj(s: &Scalar) -> Scalar {
    Complex::new(s.re.clone(), -s.im.clone())
}

fn fmt_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Scalar in the catalog-file syntax: `num/den`, with an optional imaginary
/// part appended as `+num/deni`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.im.is_zero() {
        fmt_q(&s.re)
    } else {
        format!("{}+{}i", fmt_q(&s.re), fmt_q(&s.im))
    }
}

fn parse_q(text: &str) -> Option<Q> {
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = n.parse().ok()?;
    let denom: BigInt = d.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(BigRational::new(numer, denom))
}

pub fn parse_scalar(text: &str) -> Option<Scalar> {
    if let Some(im_part) = text.strip_suffix('i') {
        // Split at the '+' introducing the imaginary part; the real part may
        // itself start with '-', so search from index 1. A bare `n/di` is
        // purely imaginary.
        if im_part.len() > 1 {
            if let Some(pos) = im_part[1..].find('+').map(|p| p + 1) {
                let re = parse_q(&im_part[..pos])?;
                let im = parse_q(&im_part[pos + 1..])?;
                return Some(Complex::new(re, im));
            }
        }
        return Some(Complex::new(Q::zero(), parse_q(im_part)?));
    }
    Some(Complex::new(parse_q(text)?, Q::zero()))
}

/// Pretty form for reports: `2`, `-1/2`, `i`, `1+2i`.
pub fn display_scalar(s: &Scalar) -> String {
    let re = |q: &Q| {
        if q.is_integer() {
            q.numer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    };
    match (s.re.is_zero(), s.im.is_zero()) {
        (_, true) => re(&s.re),
        (true, false) => {
            if s.im.is_one() {
                "i".into()
            } else if (-s.im.clone()).is_one() {
                "-i".into()
            } else {
                format!("{}i", re(&s.im))
            }
        }
        (false, false) => {
            let im = &s.im;
            if im.is_positive() {
                format!("{}+{}i", re(&s.re), re(im))
            } else {
                format!("{}{}i", re(&s.re), re(im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        for s in [
            sc(0),
            sc(3),
            sc(-2),
            sc_i(1),
            sc(1) + sc_i(-2),
            sc_q(BigRational::new(BigInt::from(-3), BigInt::from(4))),
        ] {
            assert_eq!(parse_scalar(&fmt_scalar(&s)).unwrap(), s);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(display_scalar(&sc(2)), "2");
        assert_eq!(display_scalar(&sc_i(1)), "i");
        assert_eq!(display_scalar(&sc_i(-1)), "-i");
        assert_eq!(display_scalar(&(sc(1) + sc_i(-2))), "1-2i");
    }
}
