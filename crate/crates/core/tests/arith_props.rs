use proptest::prelude::*;
use quasitoric_core::arith::{rational, FieldElement, RealAlgebraicField};

fn tan72_field() -> RealAlgebraicField {
    let cs = [5, 0, -10, 0, 1].map(|c| rational(c, 1)).to_vec();
    RealAlgebraicField::new(cs, (rational(3, 1), rational(4, 1))).unwrap()
}

fn element(field: RealAlgebraicField) -> impl Strategy<Value = FieldElement> {
    let deg = field.degree();
    proptest::collection::vec((-20i64..=20, 1i64..=6), deg)
        .prop_map(move |cs| FieldElement::new(&field, cs.into_iter().map(|(n, d)| rational(n, d)).collect()))
}

fn any_field() -> impl Strategy<Value = RealAlgebraicField> {
    prop_oneof![
        Just(RealAlgebraicField::rationals()),
        Just(RealAlgebraicField::sqrt(5).unwrap()),
        Just(RealAlgebraicField::sqrt(2).unwrap()),
        Just(tan72_field()),
    ]
}

fn triple() -> impl Strategy<Value = (FieldElement, FieldElement, FieldElement)> {
    any_field().prop_flat_map(|f| (element(f.clone()), element(f.clone()), element(f)))
}

proptest! {
    #[test]
    fn field_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x + &(-&x)).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn sign_is_multiplicative((x, y, _z) in triple()) {
        prop_assert_eq!(x.signum() * y.signum(), (&x * &y).signum());
    }

    #[test]
    fn sign_agrees_with_floating_point((x, _y, _z) in triple()) {
        let approx = x.to_f64();
        if approx.abs() > 1e-9 {
            prop_assert_eq!(x.signum(), if approx > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn order_is_translation_invariant((x, y, z) in triple()) {
        prop_assert_eq!(x.cmp_value(&y), (&x + &z).cmp_value(&(&y + &z)));
        prop_assert_eq!(x.cmp_value(&y), y.cmp_value(&x).reverse());
    }

    #[test]
    fn floor_brackets_value((x, _y, _z) in triple()) {
        let f = FieldElement::from_rational(x.field(), num_rational::BigRational::from_integer(x.floor()));
        prop_assert!(f.cmp_value(&x).is_le());
        prop_assert!((&f + &FieldElement::one(x.field())).cmp_value(&x).is_gt());
    }
}
