use merolib::exactalg::{parse_poly, vars, CoordinateRing, LaurentPoly};
use merolib::groebner::{
    buchberger, is_regular, membership_oracle, BuchbergerCaps, MonomialOrder, RationalSection, Regularity,
    RegularityCaps,
};
use merolib::suite::random_poly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn normal_forms_agree_with_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let v = vars(&["x", "y"]);
    let order = MonomialOrder::grevlex(2);
    let (mut agree, mut decided) = (0, 0);
    for case in 0..200 {
        let gens: Vec<LaurentPoly> = (0..rng.gen_range(1..=2)).map(|_| random_poly(&mut rng, &v, 2, 3)).collect();
        let f = if case % 2 == 0 {
            gens.iter().fold(LaurentPoly::zero(v.clone()), |acc, g| &acc + &(&random_poly(&mut rng, &v, 1, 2) * g))
        } else {
            random_poly(&mut rng, &v, 3, 3)
        };
        let gb = buchberger(&v, &gens, &order, BuchbergerCaps::default()).unwrap();
        let nf = gb.normal_form(&f).unwrap();
        assert_eq!(gb.normal_form(&nf).unwrap(), nf, "normal form is not idempotent");
        assert!(gb.s_pairs_reduce_to_zero());
        let oracle = (0..=3).any(|cap| membership_oracle(&f, &gens, cap).unwrap());
        if oracle {
            decided += 1;
            agree += nf.is_zero() as usize;
        } else if !nf.is_zero() {
            decided += 1;
            agree += 1;
        }
    }
    assert_eq!(agree, decided);
    assert!(decided >= 150);
}

#[test]
fn lex_and_grevlex_agree_on_membership() {
    let v = vars(&["x", "y"]);
    let gens = [parse_poly("x^2 - y", &v).unwrap(), parse_poly("x*y - 1", &v).unwrap()];
    let f = parse_poly("y^3 - 1", &v).unwrap();
    for order in [MonomialOrder::lex(2), MonomialOrder::grevlex(2)] {
        let gb = buchberger(&v, &gens, &order, BuchbergerCaps::default()).unwrap();
        assert!(gb.contains(&f).unwrap());
    }
}

#[test]
fn hopf_sections() {
    let ring = CoordinateRing::hopf();
    let section = |n: &str, d: &str| {
        RationalSection::new(ring.parse(n).unwrap(), ring.parse(d).unwrap(), ring.clone()).unwrap()
    };
    let caps = RegularityCaps::default();
    assert!(is_regular(&section("x*y", "1 + x*y"), &caps).is_regular());
    assert!(is_regular(&section("x^2", "x"), &caps).is_regular());
    match is_regular(&section("1", "y"), &caps) {
        Regularity::NotRegular { q, point } => {
            assert!(ring.contains_point(&point, q).unwrap());
            assert_eq!(point[1], 0);
        }
        other => panic!("expected a pole certificate, got {other:?}"),
    }
}

#[test]
fn tiny_caps_give_undecided_not_wrong() {
    let ring = CoordinateRing::hopf();
    let s = RationalSection::new(ring.parse("1").unwrap(), ring.parse("x - 2").unwrap(), ring.clone()).unwrap();
    let caps = RegularityCaps { primes: vec![], ..RegularityCaps::default() };
    assert!(!is_regular(&s, &caps).is_regular());
}
