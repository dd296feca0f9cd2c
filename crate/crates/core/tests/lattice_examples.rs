use num_bigint::BigInt;
use proptest::prelude::*;
use quasitoric_core::arith::{rational, FieldElement, RealAlgebraicField};
use quasitoric_core::catalog;
use quasitoric_core::geometry::{Facet, HalfspaceRep};
use quasitoric_core::lattice::{
    chart_groups, finite_order, is_quasirational, ql_contains, ql_is_lattice, ql_span, ray_generator, triple_validate,
    Body, ChartClass, FundamentalTriple,
};
use quasitoric_core::linalg::{snf, IntegerMatrix};

fn combo(coeffs: &[i64]) -> Vec<FieldElement> {
    let f = catalog::pentagon_field();
    let mut out = vec![FieldElement::zero(&f); 2];
    for (k, &c) in coeffs.iter().enumerate() {
        let c = FieldElement::from_int(&f, c);
        for (o, y) in out.iter_mut().zip(catalog::y(k)) {
            *o = &*o + &(&c * &y);
        }
    }
    out
}

#[test]
fn pentagon_is_quasirational_for_q5() {
    let q5 = catalog::q5();
    assert!(is_quasirational(&q5, &catalog::pentagon().normals()).unwrap());
    assert_eq!(q5.flattened_rank(), 4);
    assert!(!ql_is_lattice(&q5));
    let r = triple_validate(&catalog::pentagon_triple()).unwrap();
    assert!(r.simple && r.normals_span_quasilattice);
}

#[test]
fn ray_generator_lies_on_ray_and_in_q5() {
    let q5 = catalog::q5();
    for k in 0..5 {
        let u = catalog::y(k);
        let g = ray_generator(&q5, &u).unwrap().unwrap();
        assert!(!g.canonical && g.scale.is_positive());
        assert_eq!(g.vector, u.iter().map(|x| &g.scale * x).collect::<Vec<_>>());
        assert!(ql_contains(&q5, &g.vector).is_some());
    }
    let f = catalog::pentagon_field();
    // x-coordinates of Q₅ lie in Q(√5), which does not contain tan 72°
    let skew = vec![FieldElement::generator(&f), FieldElement::zero(&f)];
    assert!(ql_contains(&q5, &skew).is_none());
}

#[test]
fn q5_contains_y_sums_but_not_halves() {
    let q5 = catalog::q5();
    let f = catalog::pentagon_field();
    let half = rational(1, 2);
    let y0_half: Vec<FieldElement> = catalog::y(0).iter().map(|x| x.scale(&half)).collect();
    assert!(ql_contains(&q5, &y0_half).is_none());
    let last = combo(&[1, 0, 0, 1, 1]);
    assert!(ql_contains(&q5, &last).is_some());
    assert!(ql_contains(&q5, &[FieldElement::zero(&f), FieldElement::zero(&f)]).is_some());
}

fn hirzebruch(a: FieldElement) -> Vec<ChartClass> {
    chart_groups(&catalog::hirzebruch_triple(&a)).unwrap().into_iter().map(|c| c.classification).collect()
}

#[test]
fn hirzebruch_lattice_and_charts() {
    let qf = RealAlgebraicField::rationals();
    let three = FieldElement::from_int(&qf, 3);
    assert!(ql_is_lattice(&catalog::hirzebruch_quasilattice(&three)));
    assert!(hirzebruch(three).iter().all(|c| *c == ChartClass::Trivial));

    let s2 = RealAlgebraicField::sqrt(2).unwrap();
    let root2 = FieldElement::generator(&s2);
    assert!(!ql_is_lattice(&catalog::hirzebruch_quasilattice(&root2)));
    let t = catalog::hirzebruch_triple(&root2);
    let charts = chart_groups(&t).unwrap();
    let origin = charts.iter().find(|c| c.active == vec![0, 1]).unwrap();
    assert_eq!(origin.classification, ChartClass::Infinite);

    let half = FieldElement::from_rational(&qf, rational(1, 2));
    assert!(ql_is_lattice(&catalog::hirzebruch_quasilattice(&half)));
    let classes = hirzebruch(half);
    assert!(classes.iter().all(|c| *c == ChartClass::Finite(BigInt::from(2))));
}

#[test]
fn orbifold_interval_has_order_two() {
    let t = catalog::orbifold_interval_triple();
    let charts = chart_groups(&t).unwrap();
    assert_eq!(charts[0].active, vec![0]);
    assert_eq!(charts[0].classification, ChartClass::Finite(BigInt::from(2)));
    assert_eq!(charts[1].classification, ChartClass::Trivial);
    let (s, _, _) = snf(&IntegerMatrix::from_i64(&[&[2]]));
    assert_eq!(s.get(0, 0), &BigInt::from(2));
}

#[test]
fn sqrt2_interval_is_a_quasifold() {
    let t = catalog::unit_interval_sqrt2_triple();
    assert!(!ql_is_lattice(&t.quasilattice));
    assert!(chart_groups(&t).unwrap().iter().all(|c| c.classification == ChartClass::Infinite));
}

#[test]
fn unit_interval_is_smooth() {
    let t = catalog::unit_interval_triple();
    assert!(chart_groups(&t).unwrap().iter().all(|c| c.classification == ChartClass::Trivial));
}

#[test]
fn pyramid_has_no_charts() {
    let t = catalog::square_pyramid_triple();
    let r = triple_validate(&t).unwrap();
    assert!(!r.simple && !r.warnings.is_empty());
    assert!(chart_groups(&t).is_err());
}

proptest! {
    #[test]
    fn q5_membership_is_additive(a in proptest::collection::vec(-5i64..=5, 5), b in proptest::collection::vec(-5i64..=5, 5)) {
        let q5 = catalog::q5();
        let (u, v) = (combo(&a), combo(&b));
        let cu = ql_contains(&q5, &u).unwrap();
        let cv = ql_contains(&q5, &v).unwrap();
        prop_assert_eq!(q5.combine(&cu), u.clone());
        prop_assert_eq!(q5.combine(&cv), v.clone());
        let sum: Vec<FieldElement> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
        let cs = ql_contains(&q5, &sum).unwrap();
        prop_assert_eq!(q5.combine(&cs), sum);
    }

    /// `[0,w] × [0,h]` moved by a unimodular map has smooth charts.
    #[test]
    fn delzant_rectangles_have_trivial_charts(
        w in 1i64..=5, h in 1i64..=5, d in 1i64..=3,
        k in -3i64..=3, swap in any::<bool>(), flip in any::<bool>(),
    ) {
        let f = RealAlgebraicField::rationals();
        // U = S·[[1,k],[0,1]], with S a signed permutation; normals map by U^{-T}.
        let shear = [[1, k], [0, 1]];
        let perm = if swap { [[0, 1], [1, 0]] } else { [[1, 0], [0, 1]] };
        let sign = if flip { -1 } else { 1 };
        let u = [
            [sign * (perm[0][0] * shear[0][0] + perm[0][1] * shear[1][0]), sign * (perm[0][0] * shear[0][1] + perm[0][1] * shear[1][1])],
            [perm[1][0] * shear[0][0] + perm[1][1] * shear[1][0], perm[1][0] * shear[0][1] + perm[1][1] * shear[1][1]],
        ];
        let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
        let inv_t = [[u[1][1] * det, -u[1][0] * det], [-u[0][1] * det, u[0][0] * det]];
        let base = [([1, 0], 0), ([0, 1], 0), ([-1, 0], -w), ([0, -1], -h)];
        let facets: Vec<Facet> = base
            .iter()
            .map(|&(n, o)| Facet {
                normal: vec![
                    FieldElement::from_int(&f, inv_t[0][0] * n[0] + inv_t[0][1] * n[1]),
                    FieldElement::from_int(&f, inv_t[1][0] * n[0] + inv_t[1][1] * n[1]),
                ],
                offset: FieldElement::from_rational(&f, rational(o, d)),
            })
            .collect();
        let body = HalfspaceRep::new(&f, 2, facets).unwrap();
        let one = FieldElement::one(&f);
        let zero = FieldElement::zero(&f);
        let quasilattice = ql_span(&f, 2, vec![vec![one.clone(), zero.clone()], vec![zero, one]]).unwrap();
        let t = FundamentalTriple { normals: body.normals(), body: Body::Polytope(body), quasilattice };
        let charts = chart_groups(&t).unwrap();
        prop_assert_eq!(charts.len(), 4);
        prop_assert!(charts.iter().all(|c| c.classification == ChartClass::Trivial));
    }
}

#[test]
fn finite_order_matches_snf_of_scaled_normals() {
    // Normals (2,0),(0,3) at a vertex: the group is Z²/⟨(2,0),(0,3)⟩ ≅ Z/6.
    let pts = vec![vec![rational(1, 2), rational(0, 1)], vec![rational(0, 1), rational(1, 3)]];
    let (s, _, _) = snf(&IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]));
    let order = s.get(0, 0) * s.get(1, 1);
    assert_eq!(finite_order(&pts, 2), order);
}
