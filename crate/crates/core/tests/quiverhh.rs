use merolib::exactalg::{LaurentPoly, Scalar};
use merolib::oracles::brute_trace_cycles;
use merolib::quiverhh::{
    canonicalize_cycle, ho_trace, least_rotation, rep_moduli_chart, trace_space, Chain, PathClass, Quiver,
    QuiverError, Representation, DEFAULT_WALK_CAP,
};
use merolib::suite::random_quiver;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn cyclic_dimensions() {
    for n in 1..=6 {
        for l in 0..=12 {
            let ts = trace_space(&Quiver::cyclic(n), l, DEFAULT_WALK_CAP).unwrap();
            assert_eq!(ts.dimension(), n + l / n, "n={n} L={l}");
        }
    }
}

#[test]
fn random_quivers_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let q = random_quiver(&mut rng, 4, 6);
        let ts = trace_space(&q, 6, DEFAULT_WALK_CAP).unwrap();
        let cycles: Vec<Vec<usize>> = ts
            .basis()
            .iter()
            .filter_map(|c| match c {
                PathClass::Cycle(w) => Some(w.clone()),
                PathClass::Idempotent(_) => None,
            })
            .collect();
        assert_eq!(cycles, brute_trace_cycles(&q, 6), "{}", q.to_file_string());
    }
}

#[test]
fn walk_cap_is_reported() {
    let q = Quiver::parse("1\n1 1 a\n1 1 b\n1 1 c\n").unwrap();
    assert!(matches!(trace_space(&q, 12, 1_000), Err(QuiverError::WalkCap(_))));
}

proptest! {
    #[test]
    fn least_rotation_is_minimal(s in prop::collection::vec(0u8..3, 1..12)) {
        let k = least_rotation(&s);
        let rot = |i: usize| [&s[i..], &s[..i]].concat();
        prop_assert!((0..s.len()).all(|i| rot(k) <= rot(i)));
    }

    #[test]
    fn canonical_form_is_rotation_invariant(n in 1usize..5, winds in 1usize..3, k in 0usize..10) {
        let q = Quiver::cyclic(n);
        let walk: Vec<usize> = (0..n * winds).map(|i| i % n).collect();
        let k = k % walk.len();
        let rotated = [&walk[k..], &walk[..k]].concat();
        prop_assert_eq!(canonicalize_cycle(&q, &walk).unwrap(), canonicalize_cycle(&q, &rotated).unwrap());
    }
}

#[test]
fn walk_convention_composes_right_to_left() {
    let q = Quiver::linear(3);
    let rep = Representation::parse("1,2,1;b1=[[1],[2]];b2=[[3,5]]", &q).unwrap();
    let m = rep.walk_matrix(&[0, 1]).unwrap();
    assert_eq!(m.shape(), (1, 1));
    assert_eq!(m.get(0, 0).as_constant(), Some(BigRational::from_integer(13.into())));
}

#[test]
fn trace_pairing_on_the_two_cycle() {
    let q = Quiver::cyclic(2);
    let rep = Representation::parse("2,1;a1=[[1,2]];a2=[[3],[4]]", &q).unwrap();
    let rho = Chain::parse("[a1 a2]", &q).unwrap();
    let value = ho_trace(&rho, &rep).unwrap();
    assert_eq!(value.as_constant(), Some(BigRational::from_integer(11.into())));
    let idem = Chain::single(PathClass::Idempotent(1));
    assert_eq!(ho_trace(&idem, &rep).unwrap().as_constant(), Some(BigRational::from_integer(2.into())));
}

#[test]
fn symbolic_chart_units() {
    let q = Quiver::cyclic(3);
    let pres = rep_moduli_chart(&q, &[1, 1, 1], 64).unwrap();
    assert_eq!(pres.ring.vars().len(), 3);
    assert_eq!(pres.ring.units().len(), 3);
    let rep = Representation::symbolic(&q, &[1, 1, 1], 64).unwrap();
    let v = ho_trace(&Chain::parse("[a1 a2 a3]", &q).unwrap(), &rep).unwrap();
    let at = v.evaluate(&[2, 3, 5].map(|x| Scalar::Rational(BigRational::from_integer(x.into()))), None).unwrap();
    assert_eq!(at, Scalar::Rational(BigRational::from_integer(30.into())));
    assert!(Representation::symbolic(&q, &[5, 5, 5], 64).is_err());
    let _ = LaurentPoly::zero(rep.vars().clone());
}

#[test]
fn zero_chain_round_trips() {
    let q = Quiver::cyclic(2);
    let zero = Chain::parse("[]", &q).unwrap();
    assert!(zero.is_zero());
    assert_eq!(Chain::parse(&zero.display(&q), &q).unwrap(), zero);
}

#[test]
fn huge_dimensions_are_rejected() {
    let q = Quiver::cyclic(2);
    assert!(Representation::parse("0,12297829382473034410", &q).is_err());
    assert!(Representation::parse("0,1025", &q).is_err());
    assert!(Representation::parse("0,3", &q).is_ok());
}
