//! Property-based invariants over randomly chosen fleet parameters and
//! random corruptions: constructors always satisfy every law, structural
//! involutions hold, and the validators catch arbitrary single-entry
//! corruption.

use groupoid_pairs::diagonal::{canonical_factorization, matched_pair_from_factorization};
use groupoid_pairs::{ArrowId, MatchedPair};
use proptest::prelude::*;

fn arb_pair() -> impl Strategy<Value = MatchedPair> {
    (0usize..5, 1usize..=3, 1usize..=3).prop_map(|(kind, a, b)| match kind {
        0 => MatchedPair::initial(a).unwrap(),
        1 => MatchedPair::terminal(a).unwrap(),
        2 => MatchedPair::mxy(a, b).unwrap(),
        3 => {
            let (s3, c3, c2) = groupoid_pairs::groupoid::zoo::symmetric_3();
            MatchedPair::group_pair(&s3, &c3, &c2).unwrap()
        }
        _ => MatchedPair::conjugation(&groupoid_pairs::groupoid::zoo::cyclic(a + 1)),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructors_always_satisfy_the_axioms(m in arb_pair()) {
        prop_assert!(m.validate().is_ok());
        prop_assert!(m.derived_identities().is_ok());
    }

    #[test]
    fn dual_and_opposites_are_involutive(m in arb_pair()) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert_eq!(m.opposite().opposite(), m.clone());
        prop_assert_eq!(m.coopposite().coopposite(), m);
    }

    #[test]
    fn factorization_round_trip(m in arb_pair()) {
        let fac = canonical_factorization(&m);
        prop_assert_eq!(matched_pair_from_factorization(&fac), m);
    }

    #[test]
    fn cell_inverse_is_an_involution(m in arb_pair(), seed in any::<u32>()) {
        if m.cell_count() == 0 { return Ok(()); }
        let c = m.cell_at(seed as usize % m.cell_count());
        prop_assert_eq!(m.cell_inverse(m.cell_inverse(c)), c);
        // Transpose lands in the dual and returns.
        let d = m.dual();
        prop_assert_eq!(d.cell_transpose(m.cell_transpose(c)), c);
    }

    #[test]
    fn random_composition_corruption_is_detected(seed in any::<u32>(), wrong in any::<u32>()) {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let v = m.vertical().clone();
        // Pick a random defined composition and overwrite it with a
        // different in-range arrow.
        let n = v.arrow_count() as u32;
        let f = ArrowId(seed % n);
        let g = v
            .arrows()
            .find(|&g| v.end(f) == v.src(g))
            .expect("every arrow extends");
        let old = v.compose(f, g).unwrap();
        let bad_value = ArrowId(wrong % n);
        prop_assume!(bad_value != old);
        let corrupt = v.with_comp_entry(f, g, Some(bad_value));
        prop_assert!(!corrupt.validate().is_ok());
    }
}
