//! The weak Hopf algebra k(V,H): structure constants on cells, exhaustive
//! axiom certification, idempotents, functoriality, and linearization.

use groupoid_pairs::groupoid::zoo;
use groupoid_pairs::hopf::{
    certify_hopf_morphism, certify_module, hopf_morphism, linearize, module_tensor, WeakHopfAlgebra,
};
use groupoid_pairs::morphism::MatchedPairMorphism;
use groupoid_pairs::rep::{rep_hv, rep_v, tensor};
use groupoid_pairs::MatchedPair;

fn main() {
    // k(initial) is the function algebra on P×P; k(terminal) the matrix
    // algebra End(kP). Both are 9-dimensional over three points.
    let wi = WeakHopfAlgebra::build(&MatchedPair::initial(3).unwrap());
    let wt = WeakHopfAlgebra::build(&MatchedPair::terminal(3).unwrap());
    println!(
        "k(initial-3): dim {}, commutative: {}",
        wi.dim(),
        wi.is_commutative()
    );
    println!(
        "k(terminal-3): dim {}, commutative: {}",
        wt.dim(),
        wt.is_commutative()
    );
    assert!(wi.certify().is_ok());
    assert!(wt.certify().is_ok());

    // Every axiom is certified exactly — including S² = id, which holds for
    // these algebras and is verified rather than assumed.
    let (s3, c3, c2) = zoo::symmetric_3();
    let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
    let w = WeakHopfAlgebra::build(&m);
    let report = w.certify();
    println!("k(S₃ pair): dim {}, axioms {}", w.dim(), report);
    assert!(report.is_ok());

    // Source and target idempotents decompose the unit.
    let p0 = groupoid_pairs::ObjId(0);
    println!(
        "1_P has {} terms, 1^P has {} terms",
        w.one_source(p0).len(),
        w.one_target(p0).len()
    );

    // Matched-pair morphisms linearize to weak Hopf algebra morphisms.
    let f = MatchedPairMorphism::from_initial(&m).unwrap();
    let from = WeakHopfAlgebra::build(&f.source);
    let phi = hopf_morphism(&f, &from, &w);
    assert!(certify_hopf_morphism(&phi, &from, &w).is_ok());
    println!("k^(P×P) → k(V,H) is a certified weak Hopf morphism");

    // Linearization sends representations to modules, monoidally: the
    // truncated tensor Δ(1)·(M ⊗ N) matches the set-level tensor.
    let v = rep_v(&m);
    let hv = rep_hv(&m);
    let lv = linearize(&w, &v);
    assert!(certify_module(&w, &lv).is_ok());
    let t = tensor(&m, &v, &hv);
    let (mt, _) = module_tensor(&w, &lv, &linearize(&w, &hv));
    assert_eq!(linearize(&w, &t.rep).action, mt.action);
    println!("Lin(R₁ ⊗ R₂) = Lin(R₁) ⊗̄ Lin(R₂), table for table");

    // The cell representation linearizes to the left regular module.
    let md = linearize(&w, &hv);
    for i in 0..w.dim() {
        for j in 0..w.dim() {
            assert_eq!(md.act_basis(i, j), w.mul_basis(i, j));
        }
    }
    println!("Lin(HV) is the left regular module");
}
