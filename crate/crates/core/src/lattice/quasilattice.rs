use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{FieldElement, Rational, RealAlgebraicField};
use crate::geometry::{positively_proportional, rank_of};
use crate::linalg::{hnf, integer_kernel, integer_solve, FieldMatrix, IntegerMatrix};

use super::LatticeError;

/// The Z-span of finitely many vectors of `Kⁿ` that span `Rⁿ`.
///
/// Expanding each coordinate in the power basis of `K` turns a vector into a
/// rational vector of length `n·δ`; `flat` holds the generators as columns,
/// row `r` scaled by `denominators[r]` to make it integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasilattice {
    field: RealAlgebraicField,
    dim: usize,
    generators: Vec<Vec<FieldElement>>,
    flat: IntegerMatrix,
    denominators: Vec<BigInt>,
}

/// Z-span of `generators`; they must span `Rⁿ`.
pub fn ql_span(
    field: &RealAlgebraicField,
    dim: usize,
    generators: Vec<Vec<FieldElement>>,
) -> Result<Quasilattice, LatticeError> {
    if generators.is_empty() {
        return Err(LatticeError::NoGenerators);
    }
    for g in &generators {
        if g.len() != dim {
            return Err(LatticeError::DimensionMismatch { expected: dim, found: g.len() });
        }
        if g.iter().any(|x| x.field() != field) {
            return Err(LatticeError::MixedFields);
        }
    }
    let refs: Vec<&[FieldElement]> = generators.iter().map(Vec::as_slice).collect();
    if rank_of(field, dim, &refs) < dim {
        return Err(LatticeError::NotSpanning);
    }
    let columns: Vec<Vec<Rational>> = generators.iter().map(|g| flatten(g)).collect();
    let rows = columns[0].len();
    let mut denominators = Vec::with_capacity(rows);
    let mut flat_rows = Vec::with_capacity(rows);
    for r in 0..rows {
        let den = columns.iter().fold(BigInt::one(), |acc, c| acc.lcm(c[r].denom()));
        flat_rows.push(columns.iter().map(|c| (&c[r] * Rational::from_integer(den.clone())).to_integer()).collect());
        denominators.push(den);
    }
    let flat = IntegerMatrix::from_rows(generators.len(), flat_rows);
    Ok(Quasilattice { field: field.clone(), dim, generators, flat, denominators })
}

/// Power-basis coordinates, coordinate-major.
pub(crate) fn flatten(v: &[FieldElement]) -> Vec<Rational> {
    v.iter().flat_map(|x| x.coeffs().iter().cloned()).collect()
}

impl Quasilattice {
    pub fn field(&self) -> &RealAlgebraicField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<FieldElement>] {
        &self.generators
    }

    pub fn flattened(&self) -> &IntegerMatrix {
        &self.flat
    }

    pub fn denominators(&self) -> &[BigInt] {
        &self.denominators
    }

    /// Rank of the Z-module, i.e. of the flattened matrix over Q.
    pub fn flattened_rank(&self) -> usize {
        let (h, _) = hnf(&self.flat.transpose());
        (0..h.rows()).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }

    /// `Σ xᵢ gᵢ`
    pub fn combine(&self, x: &[BigInt]) -> Vec<FieldElement> {
        let zero = FieldElement::zero(&self.field);
        (0..self.dim)
            .map(|i| {
                self.generators.iter().zip(x).fold(zero.clone(), |acc, (g, c)| {
                    &acc + &g[i].scale(&Rational::from_integer(c.clone()))
                })
            })
            .collect()
    }
}

/// Integer coefficients expressing `v` in the generators, or `None` when
/// `v ∉ Q`.
pub fn ql_contains(q: &Quasilattice, v: &[FieldElement]) -> Option<Vec<BigInt>> {
    if v.len() != q.dim || v.iter().any(|x| x.field() != &q.field) {
        return None;
    }
    let mut b = Vec::with_capacity(q.denominators.len());
    for (r, d) in flatten(v).iter().zip(&q.denominators) {
        let scaled = r * Rational::from_integer(d.clone());
        if !scaled.is_integer() {
            return None;
        }
        b.push(scaled.to_integer());
    }
    integer_solve(&q.flat, &b)
}

/// A Z-module spanning `Rⁿ` is discrete exactly when its rank equals `n`.
pub fn ql_is_lattice(q: &Quasilattice) -> bool {
    q.flattened_rank() == q.dim
}

/// A point of `Q` on the open ray `R_{>0}·u`, with its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayGenerator {
    pub vector: Vec<FieldElement>,
    pub coefficients: Vec<BigInt>,
    /// `vector = scale·u`
    pub scale: FieldElement,
    /// Always false: quasilattices have no preferred point on a ray.
    pub canonical: bool,
}

/// Some nonzero `w ∈ Q ∩ R_{>0}·u`, or `None` when the ray misses `Q \ {0}`.
///
/// The integer vectors `x` with `G·x ∈ K·u` form a lattice `L`, the kernel of
/// the flattened generator matrix composed with the projection killing the
/// Q-span of `{αᵏ u}`. When the scale map `t : L → K` has cyclic image the
/// smallest positive multiple is returned; otherwise the first `±gᵢ` on the
/// ray, or else the first lattice basis vector with `t ≠ 0`.
pub fn ray_generator(q: &Quasilattice, u: &[FieldElement]) -> Result<Option<RayGenerator>, LatticeError> {
    if u.len() != q.dim {
        return Err(LatticeError::DimensionMismatch { expected: q.dim, found: u.len() });
    }
    if u.iter().any(|x| x.field() != &q.field) {
        return Err(LatticeError::MixedFields);
    }
    let Some(pivot) = u.iter().position(|x| !x.is_zero()) else {
        return Err(LatticeError::ZeroDirection);
    };
    let field = &q.field;
    let delta = field.degree();
    let rat = RealAlgebraicField::rationals();

    // columns flat(αᵏ u) span K·u inside Q^{nδ}; C is its left kernel
    let alpha = FieldElement::generator(field);
    let line: Vec<Vec<Rational>> = (0..delta)
        .map(|k| {
            let ak = alpha.pow(k as u32);
            flatten(&u.iter().map(|x| x * &ak).collect::<Vec<_>>())
        })
        .collect();
    let line_rows: Vec<Vec<FieldElement>> =
        line.iter().map(|c| c.iter().map(|r| FieldElement::from_rational(&rat, r.clone())).collect()).collect();
    let c = FieldMatrix::from_rows(&rat, q.dim * delta, &line_rows)?.kernel();

    // P = C · diag(1/den) · flat, cleared to integers row by row
    let mut p_rows = Vec::with_capacity(c.len());
    for crow in &c {
        let vals: Vec<Rational> = (0..q.generators.len())
            .map(|j| {
                crow.iter().enumerate().fold(Rational::zero(), |acc, (r, cr)| {
                    let entry = Rational::new(q.flat.get(r, j).clone(), q.denominators[r].clone());
                    acc + cr.to_rational().unwrap() * entry
                })
            })
            .collect();
        let den = vals.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        p_rows.push(vals.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer()).collect());
    }
    let basis = if p_rows.is_empty() {
        IntegerMatrix::identity(q.generators.len())
    } else {
        integer_kernel(&IntegerMatrix::from_rows(q.generators.len(), p_rows))
    };

    let scale_of = |x: &[BigInt]| -> (Vec<FieldElement>, FieldElement) {
        let w = q.combine(x);
        let t = &w[pivot] / &u[pivot];
        (w, t)
    };
    let with_t: Vec<(Vec<BigInt>, FieldElement)> = (0..basis.rows())
        .map(|i| {
            let x = basis.row(i).to_vec();
            let t = scale_of(&x).1;
            (x, t)
        })
        .filter(|(_, t)| !t.is_zero())
        .collect();
    let Some((_, t0)) = with_t.first() else {
        return Ok(None);
    };

    let ratios: Option<Vec<Rational>> = with_t.iter().map(|(_, t)| (t / t0).to_rational()).collect();
    if let Some(ratios) = ratios {
        let g = rational_gcd(&ratios);
        let t = t0.scale(&g);
        let t = if t.is_negative() { -t } else { t };
        let w: Vec<FieldElement> = u.iter().map(|x| x * &t).collect();
        let coefficients = ql_contains(q, &w).expect("primitive multiple lies in the module");
        return Ok(Some(RayGenerator { vector: w, coefficients, scale: t, canonical: false }));
    }

    for (i, g) in q.generators.iter().enumerate() {
        for sign in [1i64, -1] {
            let v: Vec<FieldElement> = g.iter().map(|x| x.scale(&Rational::from_integer(sign.into()))).collect();
            if positively_proportional(&v, u) {
                let mut coefficients = vec![BigInt::zero(); q.generators.len()];
                coefficients[i] = BigInt::from(sign);
                let scale = &v[pivot] / &u[pivot];
                return Ok(Some(RayGenerator { vector: v, coefficients, scale, canonical: false }));
            }
        }
    }

    let (x, t) = with_t[0].clone();
    let (x, t) = if t.is_negative() { (x.iter().map(|c| -c).collect::<Vec<_>>(), -t) } else { (x, t) };
    let w = q.combine(&x);
    Ok(Some(RayGenerator { vector: w, coefficients: x, scale: t, canonical: false }))
}

/// Positive generator of the subgroup of Q generated by nonzero rationals.
fn rational_gcd(values: &[Rational]) -> Rational {
    let l = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let g = values
        .iter()
        .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    Rational::new(g.abs(), l)
}

/// Same Z-module: each generator set lies in the span of the other.
pub fn ql_equal(a: &Quasilattice, b: &Quasilattice) -> bool {
    a.dim == b.dim
        && a.field == b.field
        && a.generators.iter().all(|g| ql_contains(b, g).is_some())
        && b.generators.iter().all(|g| ql_contains(a, g).is_some())
}

/// Every direction meets `Q` on its open ray.
pub fn is_quasirational(q: &Quasilattice, directions: &[Vec<FieldElement>]) -> Result<bool, LatticeError> {
    for d in directions {
        if ray_generator(q, d)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
