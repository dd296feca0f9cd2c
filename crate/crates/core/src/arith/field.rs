//! Real algebraic number fields `Q(α)` with an isolating interval for `α`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use super::poly::{count_roots_closed, Poly};
use super::{ArithError, Rational};

/// Width below which construction stops refining the isolating interval.
/// Refinement is exact, so this only trades construction time against the
/// number of bisections a later sign computation needs.
const INITIAL_WIDTH_EXPONENT: u32 = 48;

#[derive(Debug)]
struct FieldData {
    minpoly: Poly,
    lo: Rational,
    hi: Rational,
    /// Sign of `minpoly(lo)`; zero only when the interval is a single point.
    lo_sign: i8,
}

/// A real algebraic number field `Q(α)`, where `α` is the unique root of a
/// monic squarefree polynomial inside an isolating interval.
///
/// Handles are cheap to clone and immutable; refinement returns a new handle.
/// Two handles are equal when they share the polynomial and isolate the same
/// root.
#[derive(Clone)]
pub struct RealAlgebraicField {
    data: Arc<FieldData>,
}

impl RealAlgebraicField {
    /// Builds `Q(α)` from the ascending coefficients of a monic polynomial and
    /// an interval `[lo, hi]` that must contain exactly one of its real roots.
    pub fn new(minpoly: Vec<Rational>, interval: (Rational, Rational)) -> Result<Self, ArithError> {
        let poly = Poly::new(minpoly);
        let degree = poly.degree().unwrap_or(0);
        if degree == 0 {
            return Err(ArithError::InvalidMinpoly("degree must be at least 1".into()));
        }
        if !poly.leading().unwrap().is_one() {
            return Err(ArithError::InvalidMinpoly("polynomial must be monic".into()));
        }
        let (lo, hi) = interval;
        if lo >= hi {
            return Err(ArithError::InvalidInterval);
        }
        if Poly::gcd(&poly, &poly.derivative()).degree() != Some(0) {
            return Err(ArithError::NotSquarefree);
        }
        let seq = poly.sturm_sequence();
        match count_roots_closed(&seq, &lo, &hi) {
            0 => return Err(ArithError::NoRootInInterval),
            1 => {}
            _ => return Err(ArithError::MultipleRootsInInterval),
        }
        let (lo, hi) = if poly.eval(&lo).is_zero() {
            (lo.clone(), lo)
        } else if poly.eval(&hi).is_zero() {
            (hi.clone(), hi)
        } else {
            (lo, hi)
        };
        let mut field = Self::from_parts(poly, lo, hi);
        let target = Rational::new(1.into(), num_bigint::BigInt::one() << INITIAL_WIDTH_EXPONENT);
        while field.width() > target {
            field = field.refine();
        }
        Ok(field)
    }

    fn from_parts(minpoly: Poly, lo: Rational, hi: Rational) -> Self {
        let v = minpoly.eval(&lo);
        let lo_sign = if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 };
        RealAlgebraicField { data: Arc::new(FieldData { minpoly, lo, hi, lo_sign }) }
    }

    /// The field of rationals, presented as `Q(α)` with `α = 0` a root of `x`.
    pub fn rationals() -> Self {
        static Q: OnceLock<RealAlgebraicField> = OnceLock::new();
        Q.get_or_init(|| {
            let poly = Poly::new(vec![Rational::zero(), Rational::one()]);
            Self::from_parts(poly, Rational::zero(), Rational::zero())
        })
        .clone()
    }

    /// `Q(√k)` with the positive square root, for a positive non-square `k`.
    pub fn sqrt(k: i64) -> Result<Self, ArithError> {
        if k <= 0 {
            return Err(ArithError::InvalidMinpoly(format!("sqrt of non-positive {k}")));
        }
        let minpoly = vec![Rational::from_integer((-k).into()), Rational::zero(), Rational::one()];
        Self::new(minpoly, (Rational::zero(), Rational::from_integer((k + 1).into())))
    }

    pub fn degree(&self) -> usize {
        self.data.minpoly.degree().unwrap()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minpoly(&self) -> &Poly {
        &self.data.minpoly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.data.lo, &self.data.hi)
    }

    pub fn width(&self) -> Rational {
        &self.data.hi - &self.data.lo
    }

    /// One bisection step. The returned handle isolates the same root in an
    /// interval of half the width (or a single point if the midpoint is the
    /// root).
    pub fn refine(&self) -> Self {
        let (lo, hi) = bisect(&self.data.minpoly, &self.data.lo, &self.data.hi, self.data.lo_sign);
        RealAlgebraicField {
            data: Arc::new(FieldData {
                minpoly: self.data.minpoly.clone(),
                lo_sign: if lo == hi { 0 } else { self.data.lo_sign },
                lo,
                hi,
            }),
        }
    }

    /// Bisection on a borrowed interval without allocating a new handle.
    pub(crate) fn bisect_interval(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        bisect(&self.data.minpoly, lo, hi, self.data.lo_sign)
    }

    /// True when the isolated root of `self` lies in the closed interval.
    pub(crate) fn root_in(&self, poly: &Poly, lo: &Rational, hi: &Rational) -> bool {
        lo <= hi && count_roots_closed(&poly.sturm_sequence(), lo, hi) > 0
    }

    fn same_root(&self, other: &Self) -> bool {
        if self.data.minpoly != other.data.minpoly {
            return false;
        }
        // Both intervals isolate a root of the same squarefree polynomial, so
        // the roots agree exactly when the intersection contains a root.
        let lo = (&self.data.lo).max(&other.data.lo);
        let hi = (&self.data.hi).min(&other.data.hi);
        self.root_in(&self.data.minpoly, lo, hi)
    }
}

fn bisect(minpoly: &Poly, lo: &Rational, hi: &Rational, lo_sign: i8) -> (Rational, Rational) {
    if lo == hi {
        return (lo.clone(), hi.clone());
    }
    let mid = (lo + hi) / Rational::from_integer(2.into());
    let v = minpoly.eval(&mid);
    if v.is_zero() {
        (mid.clone(), mid)
    } else if v.is_positive() == (lo_sign > 0) {
        (mid, hi.clone())
    } else {
        (lo.clone(), mid)
    }
}

impl PartialEq for RealAlgebraicField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.same_root(other)
    }
}

impl Eq for RealAlgebraicField {}

impl fmt::Debug for RealAlgebraicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(root of {} in [{}, {}])", self.data.minpoly, self.data.lo, self.data.hi)
    }
}

impl fmt::Display for RealAlgebraicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
