use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{FieldElement, Rational};
use crate::geometry::{fan_predicates, is_simple, positively_proportional, vertices_from_halfspaces, Fan, HalfspaceRep};
use crate::linalg::{snf, FieldMatrix, IntegerMatrix};

use super::{ql_contains, ql_span, LatticeError, Quasilattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Polytope(HalfspaceRep),
    Fan(Fan),
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::Polytope(h) => h.dim(),
            Body::Fan(f) => f.dim(),
        }
    }

    /// Facet normals or ray generators, in index order.
    pub fn directions(&self) -> Vec<Vec<FieldElement>> {
        match self {
            Body::Polytope(h) => h.normals(),
            Body::Fan(f) => f.rays().to_vec(),
        }
    }
}

/// A polytope or fan, a quasilattice, and one normal in the quasilattice per
/// facet or ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalTriple {
    pub body: Body,
    pub quasilattice: Quasilattice,
    pub normals: Vec<Vec<FieldElement>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleReport {
    /// Coefficients of each normal in the quasilattice generators.
    pub coefficients: Vec<Vec<BigInt>>,
    /// Simple polytope or simplicial fan.
    pub simple: bool,
    pub warnings: Vec<String>,
    /// Whether the normals generate the whole quasilattice.
    pub normals_span_quasilattice: bool,
}

pub const NONSIMPLE_WARNING: &str = "nonsimple body: stratified case, out of scope for chart data";

pub fn triple_validate(t: &FundamentalTriple) -> Result<TripleReport, LatticeError> {
    let directions = t.body.directions();
    if directions.len() != t.normals.len() {
        return Err(LatticeError::CountMismatch { expected: directions.len(), found: t.normals.len() });
    }
    let q = &t.quasilattice;
    let mut coefficients = Vec::with_capacity(t.normals.len());
    for (j, x) in t.normals.iter().enumerate() {
        if x.len() != q.dim() {
            return Err(LatticeError::DimensionMismatch { expected: q.dim(), found: x.len() });
        }
        if !positively_proportional(x, &directions[j]) {
            return Err(LatticeError::NormalWrongDirection(j));
        }
        match ql_contains(q, x) {
            Some(c) => coefficients.push(c),
            None => return Err(LatticeError::NormalNotInQuasilattice(j)),
        }
    }
    let simple = match &t.body {
        Body::Polytope(h) => is_simple(h, &vertices_from_halfspaces(h)?),
        Body::Fan(f) => fan_predicates(f)?.simplicial,
    };
    let warnings = if simple { Vec::new() } else { vec![NONSIMPLE_WARNING.to_string()] };
    let normals_span_quasilattice = match ql_span(q.field(), q.dim(), t.normals.clone()) {
        Ok(span) => q.generators().iter().all(|g| ql_contains(&span, g).is_some()),
        Err(_) => false,
    };
    Ok(TripleReport { coefficients, simple, warnings, normals_span_quasilattice })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartClass {
    Trivial,
    Finite(BigInt),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartGroupReport {
    /// Vertex index (polytope) or maximal cone index (fan).
    pub vertex: usize,
    /// Indices of the normals active at the vertex.
    pub active: Vec<usize>,
    /// Rows are the active normals.
    pub frame: FieldMatrix,
    /// Coordinates of each quasilattice generator in the active normals,
    /// reduced into `[0, 1)`.
    pub images: Vec<Vec<FieldElement>>,
    pub classification: ChartClass,
}

/// For each vertex `v`, the group `Q / Z⟨X_i : i active at v⟩` seen inside
/// `Rⁿ/Zⁿ` through the coordinates `y` with `A_vᵀ y = g`.
pub fn chart_groups(t: &FundamentalTriple) -> Result<Vec<ChartGroupReport>, LatticeError> {
    let report = triple_validate(t)?;
    if !report.simple {
        return Err(LatticeError::NonSimpleBody);
    }
    let charts: Vec<Vec<usize>> = match &t.body {
        Body::Polytope(h) => vertices_from_halfspaces(h)?.vertex_facets,
        Body::Fan(f) => f.maximal_cones(),
    };
    let q = &t.quasilattice;
    let field = q.field();
    let n = q.dim();
    let mut out = Vec::with_capacity(charts.len());
    for (v, active) in charts.into_iter().enumerate() {
        let rows: Vec<Vec<FieldElement>> = active.iter().map(|&j| t.normals[j].clone()).collect();
        let frame = FieldMatrix::from_rows(field, n, &rows)?;
        if active.len() != n {
            return Err(LatticeError::SingularVertexFrame(v));
        }
        let Some(inv_t) = frame.transpose().inverse() else {
            return Err(LatticeError::SingularVertexFrame(v));
        };
        let images: Vec<Vec<FieldElement>> = q
            .generators()
            .iter()
            .map(|g| {
                inv_t
                    .mul_vec(g)
                    .into_iter()
                    .map(|y| {
                        let fl = FieldElement::from_rational(field, Rational::from_integer(y.floor()));
                        &y - &fl
                    })
                    .collect()
            })
            .collect();
        let classification = classify(&images, n);
        out.push(ChartGroupReport { vertex: v, active, frame, images, classification });
    }
    Ok(out)
}

fn classify(images: &[Vec<FieldElement>], n: usize) -> ChartClass {
    if images.iter().flatten().all(FieldElement::is_zero) {
        return ChartClass::Trivial;
    }
    let rational: Option<Vec<Vec<Rational>>> =
        images.iter().map(|y| y.iter().map(FieldElement::to_rational).collect()).collect();
    let Some(rational) = rational else {
        return ChartClass::Infinite;
    };
    ChartClass::Finite(finite_order(&rational, n))
}

/// Order of the subgroup of `(1/D)Zⁿ / Zⁿ` generated by rational points: with
/// `M = D·Y` and Smith invariants `s_i` of `M`, the order is
/// `Π D / gcd(s_i, D)`.
pub fn finite_order(points: &[Vec<Rational>], n: usize) -> BigInt {
    let d = points.iter().flatten().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let cols: Vec<Vec<BigInt>> = points
        .iter()
        .map(|y| y.iter().map(|r| (r * Rational::from_integer(d.clone())).to_integer()).collect())
        .collect();
    let m = IntegerMatrix::from_rows(n, cols).transpose();
    let (s, _, _) = snf(&m);
    (0..n).fold(BigInt::one(), |acc, i| {
        let si = if i < s.rows().min(s.cols()) { s.get(i, i).clone() } else { BigInt::zero() };
        acc * (&d / si.gcd(&d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, RealAlgebraicField};
    use crate::geometry::Facet;

    fn ints(field: &RealAlgebraicField, ps: &[&[i64]]) -> Vec<Vec<FieldElement>> {
        ps.iter().map(|p| p.iter().map(|&x| FieldElement::from_int(field, x)).collect()).collect()
    }

    fn square_triple(normals: &[&[i64]]) -> FundamentalTriple {
        let f = RealAlgebraicField::rationals();
        let dirs = ints(&f, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let facets = dirs
            .into_iter()
            .zip([0, 0, -1, -1])
            .map(|(normal, o)| Facet { normal, offset: FieldElement::from_int(&f, o) })
            .collect();
        FundamentalTriple {
            body: Body::Polytope(HalfspaceRep::new(&f, 2, facets).unwrap()),
            quasilattice: ql_span(&f, 2, ints(&f, &[&[1, 0], &[0, 1]])).unwrap(),
            normals: ints(&f, normals),
        }
    }

    #[test]
    fn delzant_square_charts_are_trivial() {
        let t = square_triple(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let r = triple_validate(&t).unwrap();
        assert!(r.simple && r.normals_span_quasilattice && r.warnings.is_empty());
        let charts = chart_groups(&t).unwrap();
        assert_eq!(charts.len(), 4);
        assert!(charts.iter().all(|c| c.classification == ChartClass::Trivial));
    }

    #[test]
    fn validation_errors() {
        let f = RealAlgebraicField::rationals();
        let mut t = square_triple(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        t.normals[3] = vec![FieldElement::zero(&f), FieldElement::from_rational(&f, rational(-1, 2))];
        assert_eq!(triple_validate(&t).unwrap_err(), LatticeError::NormalNotInQuasilattice(3));
        t.normals[3] = ints(&f, &[&[0, 1]])[0].clone();
        assert_eq!(triple_validate(&t).unwrap_err(), LatticeError::NormalWrongDirection(3));
        t.normals.pop();
        assert_eq!(triple_validate(&t).unwrap_err(), LatticeError::CountMismatch { expected: 4, found: 3 });
    }

    #[test]
    fn scaled_normals_give_finite_groups() {
        let t = square_triple(&[&[2, 0], &[0, 1], &[-1, 0], &[0, -3]]);
        // (-1,0) and (0,1) alone generate Z²
        assert!(triple_validate(&t).unwrap().normals_span_quasilattice);
        let charts = chart_groups(&t).unwrap();
        let orders: Vec<ChartClass> = charts.iter().map(|c| c.classification.clone()).collect();
        // vertices in discovery order: (0,0), (0,1), (1,0), (1,1)
        assert_eq!(
            orders,
            vec![
                ChartClass::Finite(BigInt::from(2)),
                ChartClass::Finite(BigInt::from(6)),
                ChartClass::Trivial,
                ChartClass::Finite(BigInt::from(3)),
            ]
        );
    }

    #[test]
    fn finite_order_formula() {
        let pts = vec![vec![rational(1, 2), rational(0, 1)], vec![rational(0, 1), rational(1, 2)]];
        assert_eq!(finite_order(&pts, 2), BigInt::from(4));
        let pts = vec![vec![rational(1, 2), rational(1, 2)], vec![rational(1, 2), rational(1, 2)]];
        assert_eq!(finite_order(&pts, 2), BigInt::from(2));
        let pts = vec![vec![rational(1, 4)], vec![rational(1, 6)]];
        assert_eq!(finite_order(&pts, 1), BigInt::from(12));
    }
}
