use quasitoric_core::arith::{rational, FieldElement, RealAlgebraicField};
use quasitoric_core::catalog;
use quasitoric_core::config::{
    augment, chamber_check, config_validate, decode, gale_dual, ConfigError, Triangulation, VectorConfiguration,
};
use quasitoric_core::geometry::{fan_predicates, fans_equivalent, normal_fan};
use quasitoric_core::lattice::{ql_equal, ql_span, Body, FundamentalTriple};
use quasitoric_core::linalg::{rank_kernel_solve, FieldMatrix};

fn hirzebruch_parameters() -> Vec<FieldElement> {
    let qf = RealAlgebraicField::rationals();
    let s2 = RealAlgebraicField::sqrt(2).unwrap();
    vec![
        FieldElement::from_int(&qf, 1),
        FieldElement::from_int(&qf, 2),
        FieldElement::from_int(&qf, 3),
        FieldElement::from_rational(&qf, rational(1, 2)),
        FieldElement::generator(&s2),
    ]
}

#[test]
fn thick_rhombus_is_odd_and_balanced() {
    let (v, t) = catalog::thick_rhombus_configuration();
    let r = config_validate(&v, &t).unwrap();
    assert!(r.balanced && r.odd && r.is_triangulated() && r.complete);
    assert_eq!((r.p, r.n, r.m), (7, 2, Some(2)));
}

#[test]
fn kite_sum_is_reported_not_repaired() {
    let (v, t) = catalog::kite_configuration();
    let r = config_validate(&v, &t).unwrap();
    let [_, s72, _, s144] = catalog::pentagon_trig();
    let two = FieldElement::from_int(v.field(), 2);
    let expected = vec![FieldElement::one(v.field()), &(&two * &s144) - &(&two * &s72)];
    assert_eq!(r.sum, expected);
    assert!(!r.balanced && r.odd);
    assert_eq!(v.vectors()[4], catalog::y(0));
    assert!(matches!(gale_dual(&v, Some(&t)), Err(ConfigError::NotBalanced)));
}

#[test]
fn augment_reproduces_hirzebruch_configuration() {
    for a in hirzebruch_parameters() {
        let triple = catalog::hirzebruch_triple(&a);
        let aug = augment(&triple).unwrap();
        let (expected, t) = catalog::hirzebruch_configuration(&a);
        assert_eq!(aug.configuration.vectors(), expected.vectors());
        assert_eq!(aug.configuration.ghosts(), &[4]);
        let r = config_validate(&aug.configuration, &aug.triangulation).unwrap();
        assert!(r.balanced && r.odd && r.spanning && r.complete && r.is_triangulated());
        assert!(config_validate(&expected, &t).unwrap().complete);

        let back = decode(&aug.configuration, &aug.triangulation).unwrap();
        let Body::Fan(fan) = &back.body else { panic!("decode returns a fan") };
        assert!(fans_equivalent(fan, &normal_fan(&catalog::trapezoid(&a)).unwrap()));
        assert!(ql_equal(&back.quasilattice, &triple.quasilattice));
    }
}

#[test]
fn augment_delzant_square() {
    let triple = catalog::square_triple();
    let aug = augment(&triple).unwrap();
    let f = RealAlgebraicField::rationals();
    let int = |n| FieldElement::from_int(&f, n);
    let tail: Vec<Vec<FieldElement>> = aug.configuration.vectors()[4..].to_vec();
    assert_eq!(tail, vec![vec![int(1), int(0)], vec![int(1), int(0)], vec![int(-2), int(0)]]);
    let r = config_validate(&aug.configuration, &aug.triangulation).unwrap();
    assert!(r.balanced && r.odd && r.is_triangulated());
    assert_eq!(r.p, 7);
}

fn augment_invariants(triple: &FundamentalTriple) {
    let aug = augment(triple).unwrap();
    let v = &aug.configuration;
    let r = config_validate(v, &aug.triangulation).unwrap();
    assert!(r.balanced && r.odd && r.spanning && r.ghosts_disjoint && r.is_triangulated());
    let span = ql_span(v.field(), v.dim(), v.vectors().to_vec()).unwrap();
    assert!(ql_equal(&span, &triple.quasilattice));
    let back = decode(v, &aug.triangulation).unwrap();
    let fan = match &triple.body {
        Body::Fan(f) => f.clone(),
        Body::Polytope(h) => normal_fan(h).unwrap(),
    };
    let Body::Fan(decoded) = &back.body else { panic!("decode returns a fan") };
    assert!(fans_equivalent(decoded, &fan));
    assert_eq!(fan_predicates(decoded).unwrap().complete, r.complete);
}

#[test]
fn augment_invariants_on_corpus() {
    let mut triples = vec![
        catalog::pentagon_triple(),
        catalog::kite_triple(),
        catalog::thick_rhombus_triple(),
        catalog::thin_rhombus_triple(),
        catalog::square_triple(),
        catalog::unit_interval_triple(),
        catalog::unit_interval_sqrt2_triple(),
        catalog::orbifold_interval_triple(),
        catalog::twisted_prism_triple(),
    ];
    triples.extend(hirzebruch_parameters().iter().map(catalog::hirzebruch_triple));
    for t in &triples {
        augment_invariants(t);
    }
}

#[test]
fn augment_rejects_nonsimplicial() {
    assert!(matches!(augment(&catalog::square_pyramid_triple()), Err(ConfigError::FanNotSimplicial)));
}

#[test]
fn decode_rejects_ghost_in_simplex() {
    let (v, _) = catalog::thick_rhombus_configuration();
    let bad = Triangulation::closure_of([vec![0, 3], vec![3, 2], vec![2, 1], vec![1, 4]]);
    assert!(matches!(decode(&v, &bad), Err(ConfigError::InvalidConfiguration(_))));
}

fn check_gale(v: &VectorConfiguration, t: &Triangulation) {
    let g = gale_dual(v, Some(t)).unwrap();
    let (p, n) = (v.len(), v.dim());
    assert_eq!(2 * g.m + 1, p - n);
    let rows = g.kernel_rows();
    let a = FieldMatrix::from_columns(v.field(), n, v.vectors()).unwrap();
    let k = FieldMatrix::from_rows(v.field(), p, &rows).unwrap();
    assert!(a.mul(&k.transpose()).is_zero());
    assert_eq!(k.rank(), p - n);
    assert_eq!(rank_kernel_solve(&a, None).kernel_basis.len(), p - n);
    assert!(g.virtual_chamber.iter().all(|s| s.len() == p - n));
    let report = chamber_check(&g, n).unwrap();
    assert!(report.heuristic && report.all_cardinalities_ok);
}

#[test]
fn gale_duals_of_corpus_configurations() {
    let (v, t) = catalog::thick_rhombus_configuration();
    assert_eq!(gale_dual(&v, None).unwrap().m, 2);
    check_gale(&v, &t);
    for a in hirzebruch_parameters() {
        let (v, t) = catalog::hirzebruch_configuration(&a);
        assert_eq!(gale_dual(&v, None).unwrap().m, 1);
        check_gale(&v, &t);
    }
    let aug = augment(&catalog::thin_rhombus_triple()).unwrap();
    check_gale(&aug.configuration, &aug.triangulation);
}

#[test]
fn chamber_member_missing_a_hull_vertex_is_not_interior() {
    let (v, t) = catalog::hirzebruch_configuration(&FieldElement::from_int(&RealAlgebraicField::rationals(), 3));
    let mut g = gale_dual(&v, Some(&t)).unwrap();
    // In the complex line the five points span a polygon; drop all but two.
    g.virtual_chamber = vec![vec![0, 1]];
    let r = chamber_check(&g, 2).unwrap();
    assert!(!r.all_cardinalities_ok && !r.all_interior);
}
