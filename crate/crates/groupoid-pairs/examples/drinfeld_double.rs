//! The Drinfeld double of k(V,H): duality pairing, the admissible-pair
//! quotient basis, and the isomorphism onto k(D(V,H)).

use groupoid_pairs::double::double;
use groupoid_pairs::groupoid::zoo;
use groupoid_pairs::hopf::drinfeld::{
    certify_drinfeld_iso, certify_duality_pairing, certify_vanishing_rule, drinfeld_iso,
    transport_canonical_r, transpose_table, DoubleAlgebra,
};
use groupoid_pairs::hopf::rmatrix::r_matrix;
use groupoid_pairs::hopf::WeakHopfAlgebra;
use groupoid_pairs::rotation::canonical_double_rotations;
use groupoid_pairs::MatchedPair;

fn main() {
    let (s3, c3, c2) = zoo::symmetric_3();
    let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();

    // Cell transposition pairs k(V,H) with k(H,V) as its dual.
    let dual_pair = m.dual();
    let w = WeakHopfAlgebra::build(&m);
    let dw = WeakHopfAlgebra::build(&dual_pair);
    let t = transpose_table(&m, &dual_pair);
    assert!(certify_duality_pairing(&w, &dw, &t).is_ok());
    println!("duality pairing k(V,H) × k(H,V): permutation matrix, certified");

    // The double's basis is the admissible pairs; its size equals the cell
    // count of the double matched pair.
    let da = DoubleAlgebra::build(&m);
    let d = double(&m);
    println!(
        "double algebra: dim {} = {} cells of D(V,H)",
        da.dim(),
        d.pair.cell_count()
    );
    assert_eq!(da.dim(), d.pair.cell_count());
    assert!(certify_vanishing_rule(&da).is_ok());

    // Ψ is a bijective algebra morphism onto k(D(V,H)).
    let dwh = WeakHopfAlgebra::build(&d.pair);
    let psi = drinfeld_iso(&da, &d).unwrap();
    assert!(certify_drinfeld_iso(&da, &dwh, &psi).is_ok());
    println!("Ψ : double → k(D(V,H)) certified multiplicative and bijective");

    // Ψ carries the double's canonical R-matrix to the rotation-pair
    // R-matrix of the double pair.
    let transported = transport_canonical_r(&da, &psi);
    let (xi, eta) = canonical_double_rotations(&d);
    let rm = r_matrix(&dwh, &xi, &eta).unwrap();
    assert_eq!(transported, rm.r);
    println!("canonical R transports onto the rotation R-matrix");
}
