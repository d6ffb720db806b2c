use merolib::exactalg::{Fp, Scalar};
use merolib::holonomy::{
    hopf_census, hopf_symbolic_identities, intersection_vector, is_positive, local_lift, merodromy,
    restrict_to_chart, verify_local_to_global, ChartPoint, Crossing, CrossingWord, HolonomyError, PositivityMode,
    Sign,
};
use merolib::suite::crossing_corpus;
use proptest::prelude::*;

fn crossing_word(disks: usize, max_len: usize, positive: bool) -> impl Strategy<Value = CrossingWord> {
    prop::collection::vec((1..=disks, any::<bool>()), 0..max_len).prop_map(move |cs| {
        let crossings = cs
            .into_iter()
            .map(|(disk, s)| Crossing { disk, sign: if s || positive { Sign::Plus } else { Sign::Minus } })
            .collect();
        CrossingWord::new(disks, crossings).unwrap()
    })
}

proptest! {
    #[test]
    fn cancellation_keeps_intersection_numbers(w in crossing_word(3, 10, false)) {
        prop_assert_eq!(intersection_vector(&w), intersection_vector(&w.reduced()));
        prop_assert_eq!(is_positive(&w, PositivityMode::Geometric), is_positive(&w.reduced(), PositivityMode::Geometric));
    }

    #[test]
    fn geometric_implies_homological(w in crossing_word(3, 10, false)) {
        if is_positive(&w, PositivityMode::Geometric) {
            prop_assert!(is_positive(&w, PositivityMode::Homological));
        }
    }

    #[test]
    fn lift_is_rotation_invariant(w in crossing_word(4, 7, true), k in 0usize..8) {
        let k = if w.is_empty() { 0 } else { k % w.len() };
        let a = local_lift(&w).unwrap();
        let b = local_lift(&w.rotate(k)).unwrap();
        prop_assert_eq!(a.spikes, b.spikes);
        prop_assert_eq!(a.class_display(), b.class_display());
    }
}

#[test]
fn corpus_labels_match_positivity() {
    let corpus = crossing_corpus();
    assert_eq!(corpus.len(), 40);
    for entry in corpus {
        assert_eq!(is_positive(&entry.word, PositivityMode::Geometric), entry.labeled_positive, "{}", entry.text);
    }
}

#[test]
fn rejection_reports_the_surviving_crossing() {
    let w = CrossingWord::parse("+1,+2,-1", None).unwrap();
    assert_eq!(local_lift(&w), Err(HolonomyError::Positivity { index: 2, disk: 1 }));
    let cancelled = CrossingWord::parse("+1,+2,-2,+1", None).unwrap();
    assert_eq!(local_lift(&cancelled).unwrap().spikes, 2);
}

#[test]
fn empty_word_lifts_to_the_loop() {
    let w = CrossingWord::parse("", Some(2)).unwrap();
    let lift = local_lift(&w).unwrap();
    assert_eq!(lift.spikes, 0);
    assert_eq!(restrict_to_chart(&lift.chain, &lift.quiver).unwrap().to_string(), "rho");
}

#[test]
fn merodromy_is_a_character() {
    let f = |x| Scalar::Prime(Fp::new(x, 7));
    let p = ChartPoint::new(vec![f(2), f(3)]).unwrap();
    assert_eq!(merodromy(&p, &[1, 1]).unwrap(), f(6));
    assert_eq!(merodromy(&p, &[-1, 0]).unwrap(), f(4));
    assert!(ChartPoint::new(vec![f(0)]).is_err());
}

#[test]
fn verification_at_higher_rank() {
    let w = CrossingWord::parse("+1,+2", None).unwrap();
    let lift = local_lift(&w).unwrap();
    let report = verify_local_to_global(&lift, 2, 7, 9, 20, 64).unwrap();
    assert!(report.globally_regular);
    assert!(report.tally.all_agree());
    assert!(verify_local_to_global(&lift, 9, 7, 9, 20, 64).is_err());
}

#[test]
fn hopf_checks() {
    assert_eq!(hopf_symbolic_identities(), (true, true));
    for q in [2, 3, 5, 7, 11] {
        let c = hopf_census(q).unwrap();
        assert!(c.matches_expected());
        assert_eq!(c.total, q * q - q + 1);
    }
}
