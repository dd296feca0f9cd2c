//! Dense univariate polynomials over Q.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// A polynomial with rational coefficients in ascending order of degree.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k - dd + i] -= t;
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s·a + t·b = g` and `g` monic.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::constant(Rational::one()), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = lead.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Canonical Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let r = seq.last().unwrap().rem(&next).neg();
            seq.push(next);
            next = r;
        }
        seq
    }
}

/// Number of sign changes of the sequence evaluated at `x`, zeros skipped.
fn sign_variations(seq: &[Poly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if last.is_some_and(|l| l != positive) {
            count += 1;
        }
        last = Some(positive);
    }
    count
}

/// Number of distinct real roots in the closed interval `[lo, hi]` of the
/// squarefree polynomial whose Sturm sequence is `seq`.
pub fn count_roots_closed(seq: &[Poly], lo: &Rational, hi: &Rational) -> usize {
    let half_open = sign_variations(seq, lo).saturating_sub(sign_variations(seq, hi));
    half_open + usize::from(seq[0].eval(lo).is_zero())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    #[test]
    fn division_identity() {
        let a = p(&[5, 0, -10, 0, 1]);
        let b = p(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_detects_square_factor() {
        let sq = p(&[4, -4, 1]);
        assert_eq!(Poly::gcd(&sq, &sq.derivative()), p(&[-2, 1]));
        let sf = p(&[-5, 0, 1]);
        assert_eq!(Poly::gcd(&sf, &sf.derivative()).degree(), Some(0));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-5, 0, 1]);
        let b = p(&[1, 3]);
        let (g, s, t) = Poly::ext_gcd(&a, &b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, p(&[1]));
    }

    #[test]
    fn sturm_counts_quartic_roots() {
        // x^4 - 10x^2 + 5 has roots ±0.7265, ±3.0777
        let q = p(&[5, 0, -10, 0, 1]);
        let seq = q.sturm_sequence();
        let r = |n: i64| Rational::from_integer(n.into());
        assert_eq!(count_roots_closed(&seq, &r(-4), &r(4)), 4);
        assert_eq!(count_roots_closed(&seq, &r(3), &r(4)), 1);
        assert_eq!(count_roots_closed(&seq, &r(0), &r(1)), 1);
        assert_eq!(count_roots_closed(&seq, &r(1), &r(3)), 0);
    }

    #[test]
    fn sturm_counts_endpoint_roots() {
        let q = p(&[-1, 0, 1]);
        let seq = q.sturm_sequence();
        let r = |n: i64| Rational::from_integer(n.into());
        assert_eq!(count_roots_closed(&seq, &r(1), &r(2)), 1);
        assert_eq!(count_roots_closed(&seq, &r(-1), &r(1)), 2);
        assert_eq!(count_roots_closed(&seq, &r(0), &r(1)), 1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-5, 0, 1]).to_string(), "x^2 - 5");
        assert_eq!(p(&[1, -3]).to_string(), "-3*x + 1");
    }
}
