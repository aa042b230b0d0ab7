//! Morphisms of matched pairs and the (generalized) double construction.

use groupoid_pairs::double::{
    double, dual_morphism, functoriality_maps, gendouble_dual_iso, generalized_double,
    inclusion_morphism, Triangle,
};
use groupoid_pairs::iso::find_isomorphism;
use groupoid_pairs::morphism::MatchedPairMorphism;
use groupoid_pairs::MatchedPair;

fn main() {
    let m = MatchedPair::mxy(2, 2).unwrap();

    // The canonical morphisms: from the initial pair and to the terminal.
    let from_initial = MatchedPairMorphism::from_initial(&m).unwrap();
    let to_terminal = MatchedPairMorphism::to_terminal(&m).unwrap();
    assert!(from_initial.validate().is_ok());
    assert!(to_terminal.validate().is_ok());

    // The double D(V,H): vertical V ×ₑ H^op, horizontal V ⋈ H.
    let d = double(&m);
    println!(
        "D(M(2,2)): |V| = {}, |H| = {}, {} cells",
        d.pair.vertical().arrow_count(),
        d.pair.horizontal().arrow_count(),
        d.pair.cell_count()
    );
    assert!(d.pair.validate().is_ok());
    assert!(d.pair.derived_identities().is_ok());

    // The double of M(2,2) is the terminal pair over its four points.
    let t4 = MatchedPair::terminal(4).unwrap();
    assert!(find_isomorphism(&d.pair, &t4).is_some());
    println!("D(M(2,2)) ≅ terminal pair over 4 points");

    // The generalized double along the initial morphism is the dual pair.
    let d0 = generalized_double(&from_initial).unwrap();
    assert!(d0.pair.validate().is_ok());
    assert!(find_isomorphism(&d0.pair, &m.dual()).is_some());
    println!("D(α₀, β₀) ≅ dual pair");

    // Along the terminal morphism it is the pair itself.
    let d1 = generalized_double(&to_terminal).unwrap();
    assert!(find_isomorphism(&d1.pair, &m).is_some());
    println!("D(α₁, β₁) ≅ the original pair");

    // The inclusion (ι, π) of the pair into its double.
    let inc = inclusion_morphism(&d);
    assert!(inc.validate().is_ok());

    // Functoriality along a commuting triangle.
    let composite = MatchedPairMorphism::compose(&to_terminal, &from_initial).unwrap();
    let tri = Triangle::new(from_initial.clone(), to_terminal, composite).unwrap();
    let (first, second) = functoriality_maps(&tri).unwrap();
    assert!(first.validate().is_ok());
    assert!(second.validate().is_ok());
    println!("triangle-induced morphisms between the three doubles validate");

    // The double–dual isomorphism D(α,β) ≅ D(β,α).
    let dd = generalized_double(&dual_morphism(&from_initial)).unwrap();
    let iso = gendouble_dual_iso(&d0, &dd);
    assert!(iso.validate().is_ok() && iso.is_bijective());
    println!("D(α,β) ≅ D(β,α) through the explicit pair of bijections");
}
