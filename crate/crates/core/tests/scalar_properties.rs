use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use spinhecke::scalar::UPoly;
use spinhecke::{Error, Gauss, Ring, Scalar};

fn gauss(re: i64, im: i64) -> Gauss {
    Gauss::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec((-4i64..=4, prop_oneof![3 => Just(0i64), 1 => -2i64..=2]), 0..4)
        .prop_map(|cs| UPoly::from_coeffs(cs.into_iter().map(|(a, b)| gauss(a, b)).collect()))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (upoly(), upoly().prop_filter("nonzero denominator", |d| !d.is_zero()))
        .prop_map(|(n, d)| Scalar::from_fraction(n, d).unwrap())
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_is_associative_and_commutative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_is_associative_and_commutative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn distributivity(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverses(a in nonzero_scalar(), b in scalar()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        let q = b.checked_div(&a).unwrap();
        prop_assert_eq!(&q * &a, b);
    }

    #[test]
    fn canonical_form_is_idempotent(a in scalar()) {
        let again = Scalar::from_fraction(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        let text = a.to_string();
        let parsed: Scalar = text.parse().unwrap();
        prop_assert_eq!(&parsed, &a);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn common_factors_cancel(n in upoly(), d in upoly(), f in upoly()) {
        prop_assume!(!d.is_zero() && !f.is_zero());
        let a = Scalar::from_fraction(&n * &f, &d * &f).unwrap();
        prop_assert_eq!(a, Scalar::from_fraction(n, d).unwrap());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar(), b in scalar(), p in -3i64..=3, q in 1i64..=3) {
        let u0 = Gauss::from_ratio(p, q);
        if let (Ok(x), Ok(y)) = (a.specialize(&u0), b.specialize(&u0)) {
            prop_assert_eq!((&a + &b).specialize(&u0).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).specialize(&u0).unwrap(), &x * &y);
        }
    }

    #[test]
    fn laurent_polynomials_in_v_lie_in_a(cs in prop::collection::vec(-5i64..=5, 0..5), shift in -3i64..=3, k in 0i64..4) {
        let p = Scalar::v_poly(&cs);
        let x = (&p * &Scalar::v_pow(shift)).mul_pow2(-k);
        prop_assert!(x.is_in(Ring::A));
        prop_assert!(x.is_in(Ring::Qv));
        prop_assert!(x.is_in(Ring::Real));
    }
}

#[test]
fn documented_examples() {
    let s = |x: &str| x.parse::<Scalar>().unwrap();
    assert_eq!(&s("(v-1)/2") + &s("(v-1)/2"), s("v-1"));
    assert_eq!(&Scalar::u() * &Scalar::u(), Scalar::v());
    assert_eq!(s("(1-v^2)/(1-v)"), s("1+v"));

    assert_eq!(s("(v-1)/2").at_v_one().unwrap(), Gauss::from_int(0));
    assert_eq!(s("2*(v^2-v+1)").at_v_one().unwrap(), Gauss::from_int(2));
    assert!(matches!(s("1/(1-v)").at_v_one(), Err(Error::Pole)));
    assert!(matches!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::ZeroDenominator)));

    assert!(s("(v-1)/2").is_in(Ring::A));
    assert!(s("1/v^3 + 3/8").is_in(Ring::A));
    assert!(!s("1/(v+1)").is_in(Ring::A));
    assert!(!s("1/3").is_in(Ring::A));
    assert!(!Scalar::u().is_in(Ring::Qv));
    assert!(!Scalar::i().is_in(Ring::Real));
}
