//! Rotations, matched pairs of rotations, exhaustive enumeration, and
//! certified braidings on the representation category.

use groupoid_pairs::double::double;
use groupoid_pairs::fleet::{standard_rep_morphisms, standard_reps};
use groupoid_pairs::groupoid::zoo;
use groupoid_pairs::rotation::{
    canonical_double_rotations, certify_braiding, derived_rotation_identities,
    enumerate_matched_rotation_pairs, enumerate_rotations, enumerate_rotations_brute,
    is_matched_rotation_pair,
};
use groupoid_pairs::MatchedPair;

fn main() {
    // The terminal pair has exactly one rotation pair; the initial pair
    // over ≥ 2 points has none (no arrows P → Q in a discrete groupoid).
    let t = MatchedPair::terminal(2).unwrap();
    println!(
        "terminal-2: {} matched rotation pairs",
        enumerate_matched_rotation_pairs(&t, 100_000).unwrap().len()
    );
    let i = MatchedPair::initial(2).unwrap();
    assert_eq!(enumerate_rotations(&i, 100_000).unwrap().len(), 0);

    // The pruned enumerator agrees with the brute-force product walk.
    let (s3, c3, c2) = zoo::symmetric_3();
    let pair = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
    let pruned = enumerate_rotations(&pair, 100_000).unwrap();
    let brute = enumerate_rotations_brute(&pair, 100_000).unwrap();
    assert_eq!(pruned.len(), brute.len());
    println!("S₃ pair: {} rotations (both routes)", pruned.len());

    // Every double carries the canonical matched pair of rotations
    // ξ(γ, x) = (id r(x), x⁻¹), η(γ, x) = (γ, id b(γ)).
    let d = double(&pair);
    let (xi, eta) = canonical_double_rotations(&d);
    assert!(is_matched_rotation_pair(&d.pair, &xi, &eta));
    assert!(derived_rotation_identities(&d.pair, &xi, &eta).is_ok());
    let all = enumerate_matched_rotation_pairs(&d.pair, 2_000_000).unwrap();
    println!(
        "D(S₃ pair): {} matched rotation pairs, canonical included",
        all.len()
    );
    assert!(all.iter().any(|(x, e)| x == &xi && e == &eta));

    // Each pair induces a braiding; certification checks isomorphism,
    // naturality, both hexagons and unit triviality over the rep fleet.
    let fleet = standard_reps(&d.pair, 24, 2);
    let reps: Vec<_> = fleet.iter().map(|(_, r)| r.clone()).collect();
    let morphisms = standard_rep_morphisms(&d.pair, &fleet);
    for (n, (xi, eta)) in all.iter().enumerate() {
        let report = certify_braiding(&d.pair, xi, eta, &reps, &morphisms);
        println!(
            "braiding {n}: {}",
            if report.is_ok() {
                "certified"
            } else {
                "FAILED"
            }
        );
        assert!(report.is_ok());
    }
}
