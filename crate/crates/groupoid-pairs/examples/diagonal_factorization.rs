//! The diagonal groupoid V ⋈ H, exact factorizations and their round trip,
//! semidirect products, and the universal property of the diagonal.

use groupoid_pairs::diagonal::{
    canonical_factorization, check_universal_diagonal, diagonal_groupoid,
    matched_pair_from_factorization, semidirect_product, Factorization,
};
use groupoid_pairs::groupoid::zoo;
use groupoid_pairs::{ArrowId, MatchedPair};

fn main() {
    // The diagonal of a matched pair glues corners along cells.
    let m = MatchedPair::mxy(2, 2).unwrap();
    let d = diagonal_groupoid(&m);
    println!("V ⋈ H of M(2,2) has {} arrows", d.groupoid.arrow_count());
    assert!(d.groupoid.validate().is_ok());

    // Matched pair → factorization → matched pair is the identity.
    let fac = canonical_factorization(&m);
    assert_eq!(matched_pair_from_factorization(&fac), m);
    println!("factorization round trip: exact");

    // The S₃ diagonal of the C₃·C₂ pair is S₃ again, table for table.
    let (s3, c3, c2) = zoo::symmetric_3();
    let pair = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
    let ds3 = diagonal_groupoid(&pair);
    assert_eq!(ds3.groupoid.arrow_count(), 6);
    println!("diagonal of the S₃ pair has 6 arrows");

    // Any exact factorization works, not just canonical ones.
    let fac2 = Factorization::new(&s3, &c3, &c2).unwrap();
    let rebuilt = matched_pair_from_factorization(&fac2);
    assert_eq!(rebuilt, pair);

    // Semidirect products: C₂ acting on C₃ by inversion yields a
    // non-abelian order-6 groupoid.
    let c2g = zoo::cyclic(2);
    let c3g = zoo::cyclic(3);
    let (_, sd) = semidirect_product(
        &c2g,
        &c3g,
        |n, g| {
            if g == ArrowId(0) {
                n
            } else {
                c3g.inv(n)
            }
        },
    )
    .unwrap();
    println!("C₂ ⋉ C₃ has {} arrows", sd.groupoid.arrow_count());
    assert!(sd.groupoid.validate().is_ok());

    // Universal property: commuting cells induce a unique mediating
    // morphism out of the diagonal.
    let alpha: Vec<ArrowId> = c2.clone();
    let beta: Vec<ArrowId> = c3.clone();
    let mediating = check_universal_diagonal(&pair, &s3, &alpha, &beta).unwrap();
    println!(
        "mediating morphism V ⋈ H → S₃ hits {} arrows",
        mediating.len()
    );
}
