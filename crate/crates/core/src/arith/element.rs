//! Elements of a real algebraic field in the power basis `1, α, …, α^{δ-1}`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::RealAlgebraicField;
use super::poly::Poly;
use super::{ArithError, Rational};

/// Bisections attempted before checking whether the element vanishes at `α`
/// without being zero in the power basis, which only happens when the
/// modulus is reducible.
const GCD_CHECK_AFTER: usize = 64;

#[derive(Clone)]
pub struct FieldElement {
    field: RealAlgebraicField,
    coeffs: Vec<Rational>,
}

/// Closed rational interval used for enclosures of real values.
fn interval_mul(a: (&Rational, &Rational), b: (&Rational, &Rational)) -> (Rational, Rational) {
    let products = [a.0 * b.0, a.0 * b.1, a.1 * b.0, a.1 * b.1];
    let lo = products.iter().min().unwrap().clone();
    let hi = products.iter().max().unwrap().clone();
    (lo, hi)
}

impl FieldElement {
    /// Builds an element from power-basis coefficients. Shorter lists are
    /// padded with zeros; longer lists are reduced modulo the minimal
    /// polynomial.
    pub fn new(field: &RealAlgebraicField, coeffs: Vec<Rational>) -> Self {
        let mut e = FieldElement { field: field.clone(), coeffs };
        e.reduce();
        e
    }

    pub fn zero(field: &RealAlgebraicField) -> Self {
        FieldElement { field: field.clone(), coeffs: vec![Rational::zero(); field.degree()] }
    }

    pub fn one(field: &RealAlgebraicField) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &RealAlgebraicField, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = q;
        FieldElement { field: field.clone(), coeffs }
    }

    pub fn from_int(field: &RealAlgebraicField, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(n.into()))
    }

    /// The primitive element `α` itself.
    pub fn generator(field: &RealAlgebraicField) -> Self {
        Self::new(field, vec![Rational::zero(), Rational::one()])
    }

    pub fn field(&self) -> &RealAlgebraicField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in the prime field `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    fn reduce(&mut self) {
        let degree = self.field.degree();
        if self.coeffs.len() > degree {
            let minpoly = self.field.minpoly().coeffs().to_vec();
            for k in (degree..self.coeffs.len()).rev() {
                let c = std::mem::take(&mut self.coeffs[k]);
                if c.is_zero() {
                    continue;
                }
                for (i, m) in minpoly.iter().take(degree).enumerate() {
                    self.coeffs[k - degree + i] -= &c * m;
                }
            }
            self.coeffs.truncate(degree);
        }
        self.coeffs.resize(degree, Rational::zero());
    }

    fn check_field(&self, other: &Self) -> Result<(), ArithError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ArithError::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_field(other)?;
        if self.field.is_rational() {
            let coeffs = vec![&self.coeffs[0] * &other.coeffs[0]];
            return Ok(FieldElement { field: self.field.clone(), coeffs });
        }
        let mut out = vec![Rational::zero(); 2 * self.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(&self.field, out))
    }

    /// Multiplicative inverse via the extended gcd with the minimal polynomial.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.field.is_rational() {
            return Ok(Self::from_rational(&self.field, self.coeffs[0].recip()));
        }
        let p = Poly::new(self.coeffs.clone());
        let (g, s, _) = Poly::ext_gcd(&p, self.field.minpoly());
        if g.degree() != Some(0) {
            return Err(ArithError::NotInvertible);
        }
        Ok(Self::new(&self.field, s.into_coeffs()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElement { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Encloses the real value of the element over the isolating interval
    /// `[lo, hi]` using interval Horner evaluation.
    fn enclose(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        let mut acc = (Rational::zero(), Rational::zero());
        for c in self.coeffs.iter().rev() {
            let (a, b) = interval_mul((&acc.0, &acc.1), (lo, hi));
            acc = (a + c, b + c);
        }
        acc
    }

    /// Sign of the real value: `-1`, `0` or `1`.
    ///
    /// Zero is decided exactly from the coefficients. For nonzero elements the
    /// isolating interval is bisected until the interval enclosure excludes
    /// zero.
    pub fn signum(&self) -> i8 {
        if self.is_rational() {
            let c = &self.coeffs[0];
            return if c.is_zero() { 0 } else if c.is_positive() { 1 } else { -1 };
        }
        let (lo, hi) = self.field.interval();
        let (mut lo, mut hi) = (lo.clone(), hi.clone());
        for step in 0.. {
            let (a, b) = self.enclose(&lo, &hi);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            if lo == hi {
                return 0;
            }
            if step == GCD_CHECK_AFTER {
                let p = Poly::new(self.coeffs.clone());
                let g = Poly::gcd(&p, self.field.minpoly());
                if g.degree().unwrap_or(0) > 0 && self.field.root_in(&g, &lo, &hi) {
                    return 0;
                }
            }
            (lo, hi) = self.field.bisect_interval(&lo, &hi);
        }
        unreachable!()
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Exact comparison of real values. Panics on elements of different
    /// fields; use [`FieldElement::checked_sub`] when mixing is possible.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// A rational enclosure of width at most `width`.
    pub fn enclosure(&self, width: &Rational) -> (Rational, Rational) {
        if self.is_rational() {
            return (self.coeffs[0].clone(), self.coeffs[0].clone());
        }
        let (lo, hi) = self.field.interval();
        let (mut lo, mut hi) = (lo.clone(), hi.clone());
        loop {
            let (a, b) = self.enclose(&lo, &hi);
            if &(&b - &a) <= width {
                return (a, b);
            }
            (lo, hi) = self.field.bisect_interval(&lo, &hi);
        }
    }

    /// Largest integer not exceeding the real value.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.to_rational() {
            return q.floor().to_integer();
        }
        let mut width = Rational::new(1.into(), 1024.into());
        loop {
            let (a, b) = self.enclosure(&width);
            let (fa, fb) = (a.floor().to_integer(), b.floor().to_integer());
            if fa == fb {
                return fa;
            }
            let candidate = Self::from_rational(&self.field, Rational::from_integer(fb.clone()));
            if self.cmp_value(&candidate) != Ordering::Less {
                return fb;
            }
            width /= Rational::from_integer(1024.into());
        }
    }

    /// Decimal approximation for display. Never feed it back into exact code.
    pub fn to_f64(&self) -> f64 {
        let width = Rational::new(1.into(), BigInt::one() << 60u32);
        let (a, b) = self.enclosure(&width);
        let mid = (a + b) / Rational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
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
                1 => write!(f, "α")?,
                _ => write!(f, "α^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
