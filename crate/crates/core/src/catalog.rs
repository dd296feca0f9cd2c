//! Exact constructions of the standard example bodies, triples and
//! configurations.

use std::sync::OnceLock;

use crate::arith::{int, rational, FieldElement, RealAlgebraicField};
use crate::config::{Triangulation, VectorConfiguration};
use crate::geometry::{Facet, Fan, HalfspaceRep};
use crate::lattice::{ql_span, Body, FundamentalTriple, Quasilattice};

/// `Q(α)` with `α = tan 72°`, the root of `x⁴ − 10x² + 5` in `[3, 4]`.
pub fn pentagon_field() -> RealAlgebraicField {
    static F: OnceLock<RealAlgebraicField> = OnceLock::new();
    F.get_or_init(|| RealAlgebraicField::new(vec![int(5), int(0), int(-10), int(0), int(1)], (int(3), int(4))).unwrap())
        .clone()
}

fn poly(f: &RealAlgebraicField, c: [(i64, i64); 4]) -> FieldElement {
    FieldElement::new(f, c.iter().map(|&(n, d)| rational(n, d)).collect())
}

/// `(cos 72°, sin 72°, cos 144°, sin 144°)` in the pentagon field.
pub fn pentagon_trig() -> [FieldElement; 4] {
    let f = pentagon_field();
    let c72 = poly(&f, [(-7, 8), (0, 1), (1, 8), (0, 1)]);
    let a = FieldElement::generator(&f);
    let s72 = &a * &c72;
    let two = FieldElement::from_int(&f, 2);
    let c144 = &(&two * &(&c72 * &c72)) - &FieldElement::one(&f);
    let s144 = &(&two * &s72) * &c72;
    [c72, s72, c144, s144]
}

/// `√5` in the pentagon field.
pub fn sqrt5() -> FieldElement {
    poly(&pentagon_field(), [(-5, 2), (0, 1), (1, 2), (0, 1)])
}

/// The golden ratio `(1 + √5)/2` in the pentagon field.
pub fn golden_ratio() -> FieldElement {
    poly(&pentagon_field(), [(-3, 4), (0, 1), (1, 4), (0, 1)])
}

/// `Y_k = (cos 2πk/5, sin 2πk/5)` for `k = 0, …, 4`.
pub fn y(k: usize) -> Vec<FieldElement> {
    let f = pentagon_field();
    let [c72, s72, c144, s144] = pentagon_trig();
    match k % 5 {
        0 => vec![FieldElement::one(&f), FieldElement::zero(&f)],
        1 => vec![c72, s72],
        2 => vec![c144, s144],
        3 => vec![c144, -&s144],
        _ => vec![c72, -&s72],
    }
}

fn neg(v: &[FieldElement]) -> Vec<FieldElement> {
    v.iter().map(|x| -x).collect()
}

fn add(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(k: &FieldElement, v: &[FieldElement]) -> Vec<FieldElement> {
    v.iter().map(|x| k * x).collect()
}

fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let zero = FieldElement::zero(a[0].field());
    a.iter().zip(b).fold(zero, |acc, (x, y)| &acc + &(x * y))
}

fn ints(f: &RealAlgebraicField, ps: &[&[i64]]) -> Vec<Vec<FieldElement>> {
    ps.iter().map(|p| p.iter().map(|&x| FieldElement::from_int(f, x)).collect()).collect()
}

fn polytope(f: &RealAlgebraicField, dim: usize, normals: Vec<Vec<FieldElement>>, offsets: Vec<FieldElement>) -> HalfspaceRep {
    let facets = normals.into_iter().zip(offsets).map(|(normal, offset)| Facet { normal, offset }).collect();
    HalfspaceRep::new(f, dim, facets).expect("catalog polytope is valid")
}

fn triple(body: Body, quasilattice: Quasilattice) -> FundamentalTriple {
    let normals = body.directions();
    FundamentalTriple { body, quasilattice, normals }
}

/// `Q₅ = Z⟨Y₀, …, Y₄⟩`.
pub fn q5() -> Quasilattice {
    ql_span(&pentagon_field(), 2, (0..5).map(y).collect()).unwrap()
}

/// Regular pentagon `⟨Y_k, x⟩ ≤ 1` with inward normals `−Y_k`.
pub fn pentagon() -> HalfspaceRep {
    let f = pentagon_field();
    polytope(&f, 2, (0..5).map(|k| neg(&y(k))).collect(), vec![FieldElement::from_int(&f, -1); 5])
}

pub fn pentagon_triple() -> FundamentalTriple {
    triple(Body::Polytope(pentagon()), q5())
}

/// Kite with normals `(−Y₁, Y₂, −Y₃, Y₄)`: two sides of length `φ` and two of
/// length 1, with a vertex at the origin.
pub fn kite() -> HalfspaceRep {
    let f = pentagon_field();
    let normals = vec![neg(&y(1)), y(2), neg(&y(3)), y(4)];
    let edge = |n: &[FieldElement]| vec![n[1].clone(), -&n[0]];
    let phi = golden_ratio();
    let p1 = scale(&phi, &edge(&normals[2]));
    let p2 = add(&p1, &scale(&phi, &edge(&normals[1])));
    let zero = FieldElement::zero(&f);
    let offsets = vec![dot(&p2, &normals[0]), dot(&p1, &normals[1]), zero.clone(), zero];
    polytope(&f, 2, normals, offsets)
}

pub fn kite_triple() -> FundamentalTriple {
    triple(Body::Polytope(kite()), q5())
}

/// The kite configuration `(−Y₁, Y₂, −Y₃, Y₄, Y₀)`, ghost `Y₀`. Its sum is not
/// zero.
pub fn kite_configuration() -> (VectorConfiguration, Triangulation) {
    let vs = vec![neg(&y(1)), y(2), neg(&y(3)), y(4), y(0)];
    let v = VectorConfiguration::new(&pentagon_field(), 2, vs, vec![4]).unwrap();
    (v, Triangulation::closure_of([vec![0, 3], vec![3, 2], vec![2, 1], vec![1, 0]]))
}

/// Thick rhombus, normals `(Y₀, Y₄, −Y₀, −Y₄)`, angles 72° and 108°.
pub fn thick_rhombus() -> HalfspaceRep {
    let f = pentagon_field();
    let [_, s72, _, _] = pentagon_trig();
    let normals = vec![y(0), y(4), neg(&y(0)), neg(&y(4))];
    let zero = FieldElement::zero(&f);
    polytope(&f, 2, normals, vec![zero.clone(), zero, -&s72, -&s72])
}

pub fn thick_rhombus_triple() -> FundamentalTriple {
    triple(Body::Polytope(thick_rhombus()), q5())
}

/// `(Y₀, Y₄, −Y₀, −Y₄, Y₁, Y₂, Y₃ + Y₄ + Y₀)` with the kite's triangulation;
/// the last three are ghosts.
pub fn thick_rhombus_configuration() -> (VectorConfiguration, Triangulation) {
    let last = add(&add(&y(3), &y(4)), &y(0));
    let vs = vec![y(0), y(4), neg(&y(0)), neg(&y(4)), y(1), y(2), last];
    let v = VectorConfiguration::new(&pentagon_field(), 2, vs, vec![4, 5, 6]).unwrap();
    (v, Triangulation::closure_of([vec![0, 3], vec![3, 2], vec![2, 1], vec![1, 0]]))
}

/// Thin rhombus, normals `(Y₁, Y₄, −Y₁, −Y₄)`, angles 36° and 144°.
pub fn thin_rhombus() -> HalfspaceRep {
    let f = pentagon_field();
    let [_, _, _, s144] = pentagon_trig();
    let normals = vec![y(1), y(4), neg(&y(1)), neg(&y(4))];
    let zero = FieldElement::zero(&f);
    polytope(&f, 2, normals, vec![zero.clone(), zero, -&s144, -&s144])
}

pub fn thin_rhombus_triple() -> FundamentalTriple {
    triple(Body::Polytope(thin_rhombus()), q5())
}

/// Trapezoid with vertices `(0,0), (1,0), (0,1), (a+1,1)`, for `a > 0`.
pub fn trapezoid(a: &FieldElement) -> HalfspaceRep {
    let f = a.field().clone();
    let mut normals = ints(&f, &[&[1, 0], &[0, 1], &[0, -1]]);
    normals.push(vec![FieldElement::from_int(&f, -1), a.clone()]);
    let offsets = [0, 0, -1, -1].iter().map(|&o| FieldElement::from_int(&f, o)).collect();
    polytope(&f, 2, normals, offsets)
}

/// `Q_a = Z⟨(1,0), (0,1), (0,a)⟩`.
pub fn hirzebruch_quasilattice(a: &FieldElement) -> Quasilattice {
    let f = a.field().clone();
    let mut gens = ints(&f, &[&[1, 0], &[0, 1]]);
    gens.push(vec![FieldElement::zero(&f), a.clone()]);
    ql_span(&f, 2, gens).unwrap()
}

pub fn hirzebruch_triple(a: &FieldElement) -> FundamentalTriple {
    triple(Body::Polytope(trapezoid(a)), hirzebruch_quasilattice(a))
}

/// `V_a = ((1,0), (0,1), (0,−1), (−1,a), (0,−a))` with the trapezoid's
/// triangulation; the last vector is a ghost.
pub fn hirzebruch_configuration(a: &FieldElement) -> (VectorConfiguration, Triangulation) {
    let f = a.field().clone();
    let mut vs = ints(&f, &[&[1, 0], &[0, 1], &[0, -1]]);
    vs.push(vec![FieldElement::from_int(&f, -1), a.clone()]);
    vs.push(vec![FieldElement::zero(&f), -a]);
    let v = VectorConfiguration::new(&f, 2, vs, vec![4]).unwrap();
    (v, Triangulation::closure_of([vec![0, 1], vec![1, 3], vec![2, 3], vec![0, 2]]))
}

/// `[0, 1]`.
pub fn unit_interval(f: &RealAlgebraicField) -> HalfspaceRep {
    polytope(f, 1, ints(f, &[&[1], &[-1]]), vec![FieldElement::zero(f), FieldElement::from_int(f, -1)])
}

/// `[0, 1]` with `Q = Z`.
pub fn unit_interval_triple() -> FundamentalTriple {
    let f = RealAlgebraicField::rationals();
    triple(Body::Polytope(unit_interval(&f)), ql_span(&f, 1, ints(&f, &[&[1]])).unwrap())
}

/// `[0, 1]` with `Q = Z + √2 Z`.
pub fn unit_interval_sqrt2_triple() -> FundamentalTriple {
    let f = RealAlgebraicField::sqrt(2).unwrap();
    let gens = vec![vec![FieldElement::one(&f)], vec![FieldElement::generator(&f)]];
    triple(Body::Polytope(unit_interval(&f)), ql_span(&f, 1, gens).unwrap())
}

/// `[0, 1]` with `Q = Z` and normals `2` and `−1`.
pub fn orbifold_interval_triple() -> FundamentalTriple {
    let f = RealAlgebraicField::rationals();
    let mut t = unit_interval_triple();
    t.normals = ints(&f, &[&[2], &[-1]]);
    t
}

/// `[0, 1]²` with `Q = Z²`.
pub fn square() -> HalfspaceRep {
    let f = RealAlgebraicField::rationals();
    let offsets = [0, 0, -1, -1].iter().map(|&o| FieldElement::from_int(&f, o)).collect();
    polytope(&f, 2, ints(&f, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]), offsets)
}

pub fn square_triple() -> FundamentalTriple {
    let f = RealAlgebraicField::rationals();
    triple(Body::Polytope(square()), ql_span(&f, 2, ints(&f, &[&[1, 0], &[0, 1]])).unwrap())
}

/// Pyramid over `[0,2]²` with apex `(1, 1, 2)`; not simple at the apex.
pub fn square_pyramid() -> HalfspaceRep {
    let f = RealAlgebraicField::rationals();
    let normals = ints(&f, &[&[0, 0, 1], &[2, 0, -1], &[0, 2, -1], &[-2, 0, -1], &[0, -2, -1]]);
    let offsets = [0, 0, 0, -2, -2].iter().map(|&o| FieldElement::from_int(&f, o)).collect();
    polytope(&f, 3, normals, offsets)
}

pub fn square_pyramid_triple() -> FundamentalTriple {
    let f = RealAlgebraicField::rationals();
    triple(Body::Polytope(square_pyramid()), ql_span(&f, 3, ints(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap())
}

/// Complete simplicial 3-fan that is not the normal fan of any polytope: a
/// triangle `A₁A₂A₃` with a smaller rotated triangle `B₁B₂B₃` inside, coned
/// from the origin and closed off by `w`.
pub fn twisted_prism_fan() -> Fan {
    let f = RealAlgebraicField::rationals();
    let rays = ints(
        &f,
        &[&[0, 0, 1], &[6, 0, 1], &[0, 6, 1], &[1, 1, 1], &[4, 1, 1], &[1, 4, 1], &[-2, -2, -1]],
    );
    let (a1, a2, a3, b1, b2, b3, w) = (0, 1, 2, 3, 4, 5, 6);
    let cones = vec![
        vec![a1, a2, b2],
        vec![a1, b2, b1],
        vec![a2, a3, b3],
        vec![a2, b3, b2],
        vec![a3, a1, b1],
        vec![a3, b1, b3],
        vec![b1, b2, b3],
        vec![w, a1, a2],
        vec![w, a2, a3],
        vec![w, a3, a1],
    ];
    Fan::from_maximal_cones(&f, 3, rays, cones).unwrap()
}

pub fn twisted_prism_triple() -> FundamentalTriple {
    let f = RealAlgebraicField::rationals();
    triple(Body::Fan(twisted_prism_fan()), ql_span(&f, 3, ints(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::vertices_from_halfspaces;

    #[test]
    fn trig_identities() {
        let f = pentagon_field();
        let one = FieldElement::one(&f);
        for k in 0..5 {
            let v = y(k);
            assert_eq!(dot(&v, &v), one);
        }
        let total = (0..5).map(y).fold(vec![FieldElement::zero(&f); 2], |acc, v| add(&acc, &v));
        assert!(total.iter().all(FieldElement::is_zero));
        let s = sqrt5();
        assert_eq!(&s * &s, FieldElement::from_int(&f, 5));
        let phi = golden_ratio();
        assert_eq!(&phi * &phi, &phi + &one);
        assert!((pentagon_trig()[0].to_f64() - (72f64).to_radians().cos()).abs() < 1e-12);
    }

    #[test]
    fn kite_has_four_vertices_and_origin() {
        let v = vertices_from_halfspaces(&kite()).unwrap();
        assert_eq!(v.vertices.len(), 4);
        let f = pentagon_field();
        assert!(v.vertices.contains(&vec![FieldElement::zero(&f), FieldElement::zero(&f)]));
    }

    #[test]
    fn kite_configuration_sum_is_nonzero() {
        let (v, _) = kite_configuration();
        assert!(!v.sum().iter().all(FieldElement::is_zero));
    }
}
