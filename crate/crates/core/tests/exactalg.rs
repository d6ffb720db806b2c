use merolib::exactalg::{parse_poly, parse_poly_auto, vars, CoordinateRing, Fp, LaurentPoly, Scalar, Vars};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn xyz() -> Vars {
    vars(&["x", "y", "z"])
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, 3), -4i64..=4), 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(
            xyz(),
            terms.into_iter().map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    })
}

fn point() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..7, 3)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(xyz()), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        let at = |f: &LaurentPoly| f.evaluate_mod(&p, 7).unwrap();
        prop_assert_eq!(at(&(&a + &b)), at(&a) + at(&b));
        prop_assert_eq!(at(&(&a * &b)), at(&a) * at(&b));
    }

    #[test]
    fn display_round_trips(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(parse_poly(&text, &xyz()).unwrap(), a);
    }

    #[test]
    fn fp_field_axioms(a in 0u64..101, b in 1u64..101) {
        let (a, b) = (Fp::from_u64(a, 101), Fp::from_u64(b, 101));
        prop_assert_eq!(b * b.inv().unwrap(), Fp::new(1, 101));
        prop_assert_eq!((a + b) - b, a);
    }
}

#[test]
fn laurent_units_invert() {
    let f = parse_poly("x^-2*y", &xyz()).unwrap();
    let inv = f.monomial_inverse().unwrap();
    assert_eq!(&f * &inv, LaurentPoly::one(xyz()));
    assert!(parse_poly("x + 1", &xyz()).unwrap().monomial_inverse().is_err());
}

#[test]
fn rational_evaluation() {
    let f = parse_poly_auto("x/2 + y^-1").unwrap();
    let half = Scalar::Rational(BigRational::new(1.into(), 2.into()));
    let two = Scalar::Rational(BigRational::from_integer(2.into()));
    let v = f.evaluate(&[two, half], None).unwrap();
    assert_eq!(v, Scalar::Rational(BigRational::from_integer(3.into())));
}

#[test]
fn pole_is_an_error() {
    let f = parse_poly("x^-1", &xyz()).unwrap();
    assert!(f.evaluate_mod(&[0, 1, 1], 5).is_err());
}

#[test]
fn hopf_counts() {
    let ring = CoordinateRing::hopf();
    for q in [2u64, 3, 5, 7, 11] {
        assert_eq!(ring.count_points(q, 1_000_000).unwrap(), q * q - q + 1);
    }
}

#[test]
fn enumeration_cap_and_prime_checks() {
    let ring = CoordinateRing::free(xyz());
    assert!(ring.count_points(5, 10).is_err());
    assert!(ring.count_points(6, 1_000).is_err());
    assert_eq!(ring.count_points(5, 1_000).unwrap(), 125);
}

#[test]
fn oversized_coefficients_are_rejected() {
    let big = format!("{}^444", "4".repeat(80));
    assert!(parse_poly_auto(&big).is_err());
    let ok = parse_poly_auto("(2*x)^100").unwrap();
    assert_eq!(parse_poly(&ok.to_string(), ok.vars()).unwrap(), ok);
}
