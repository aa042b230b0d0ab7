//! Set-theoretic representations: validation, the strict monoidal tensor,
//! distinguished objects with their universal properties, and restriction.

use groupoid_pairs::groupoid::zoo;
use groupoid_pairs::morphism::MatchedPairMorphism;
use groupoid_pairs::rep::{
    enumerate_rep_morphisms, expansion, psi_iso, rep_h_sigma, rep_hv, rep_v, restrict,
    section_identity, tensor, terminal_morphism, unit_rep, validate_rep_morphism,
    validate_representation,
};
use groupoid_pairs::MatchedPair;

fn main() {
    let (s3, c3, c2) = zoo::symmetric_3();
    let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();

    // Distinguished representations: the unit, V itself, the cells, H_σ.
    let unit = unit_rep(&m);
    let v = rep_v(&m);
    let hv = rep_hv(&m);
    let hs = rep_h_sigma(&m, &section_identity(&m));
    for (name, r) in [("unit", &unit), ("V", &v), ("HV", &hv), ("H_σ₀", &hs)] {
        assert!(validate_representation(&m, r).is_ok());
        println!("{name}: {} elements", r.len());
    }

    // Tensor products are strictly associative with unit the base.
    let vv = tensor(&m, &v, &v);
    println!("V ⊗ V has {} elements", vv.rep.len());
    let vu = tensor(&m, &v, &unit);
    assert_eq!(vu.rep.len(), v.len());

    // V is terminal: the grading is the unique morphism into it.
    let psi = terminal_morphism(&hv);
    assert!(validate_rep_morphism(&m, &hv, &v, &psi).is_ok());
    assert_eq!(enumerate_rep_morphisms(&m, &hv, &v).len(), 1);
    println!("unique morphism HV → V recovered by search");

    // Expansions: H_P × {g} maps onto the orbit of any element.
    let (hp, rho) = expansion(&m, &hv, 0);
    assert!(validate_rep_morphism(&m, &hp, &hv, &rho).is_ok());

    // ψ(x, g) = (x ▷ g, x ◁ g) is an isomorphism HV ≅ V ⊗ H.
    let (target, iso) = psi_iso(&m);
    assert!(validate_rep_morphism(&m, &hv, &target.rep, &iso).is_ok());
    println!("ψ : HV → V ⊗ H is a bijective intertwiner");

    // Restriction along the initial morphism forgets down to quivers.
    let f = MatchedPairMorphism::from_initial(&m).unwrap();
    let forgotten = restrict(&f, &hv);
    assert!(validate_representation(&f.source, &forgotten).is_ok());
    println!("restriction along (α₀, β₀) lands in quivers over the base");
}
