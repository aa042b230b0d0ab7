//! Finite groupoids as validated tables: constructors, opposites,
//! restricted products, kernels and bundles.

use groupoid_pairs::groupoid::{kernel, restricted_product, zoo, ArrowMap, FiniteGroupoid};

fn main() {
    // Discrete and coarse groupoids over a three-point base.
    let discrete = FiniteGroupoid::discrete(&["P", "Q", "R"]).unwrap();
    let coarse = FiniteGroupoid::coarse(&["P", "Q", "R"]).unwrap();
    println!(
        "discrete: {} arrows, coarse: {} arrows",
        discrete.arrow_count(),
        coarse.arrow_count()
    );
    assert!(discrete.validate().is_ok());
    assert!(coarse.validate().is_ok());

    // The validator reports witnesses instead of failing fast.
    let corrupt = coarse.with_comp_entry(
        groupoid_pairs::ArrowId(1),
        groupoid_pairs::ArrowId(3),
        Some(groupoid_pairs::ArrowId(1)),
    );
    let report = corrupt.validate();
    println!("corrupted coarse groupoid:\n{report}");
    assert!(!report.is_ok());

    // One-object groupoids are groups; S₃ comes with its C₃ and C₂.
    let (s3, c3, c2) = zoo::symmetric_3();
    assert!(s3.validate().is_ok());
    println!(
        "S₃ has {} arrows; subgroups of sizes {} and {}",
        s3.arrow_count(),
        c3.len(),
        c2.len()
    );

    // Opposite is an involution.
    assert_eq!(s3.opposite().opposite(), s3);

    // Restricted product = the product over the base; with the discrete
    // groupoid it carves out the isotropy bundle.
    let cc = restricted_product(&coarse, &coarse).unwrap();
    println!("coarse ×ₑ coarse has {} arrows", cc.groupoid.arrow_count());
    let (iso, _) = coarse.isotropy_bundle();
    assert!(iso.is_group_bundle());

    // Kernels of morphisms over the base are group bundles.
    let one = FiniteGroupoid::coarse(&["•"]).unwrap();
    let collapse: ArrowMap = s3.arrows().map(|_| groupoid_pairs::ArrowId(0)).collect();
    let (ker, _) = kernel(&s3, &one, &collapse).unwrap();
    println!("kernel of S₃ → 1 has {} arrows", ker.arrow_count());
    assert_eq!(ker.arrow_count(), 6);
}
