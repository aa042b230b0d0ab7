//! JSON interchange: groupoid and matched-pair documents, canonical
//! serialization, strict loading, and named workspaces.

use groupoid_pairs::io::{
    arrow_map_to_pairs, groupoid_from_doc, groupoid_to_doc, pair_from_doc, pair_to_doc,
    to_canonical_json, workspace_from_doc, MorphismDoc, WorkspaceDoc,
};
use groupoid_pairs::morphism::MatchedPairMorphism;
use groupoid_pairs::{FiniteGroupoid, MatchedPair};

fn main() {
    // Groupoid documents carry objects, arrows, compositions and inverses;
    // identities are inferred on load and every law is re-checked.
    let g = FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
    let doc = groupoid_to_doc(&g);
    let text = to_canonical_json(&doc, true).unwrap();
    println!("coarse(2) document:\n{text}");
    assert_eq!(groupoid_from_doc(&doc).unwrap(), g);

    // Matched pairs embed two groupoid documents plus the action triples.
    let m = MatchedPair::mxy(2, 1).unwrap();
    let pdoc = pair_to_doc(&m);
    assert_eq!(pair_from_doc(&pdoc).unwrap(), m);
    println!(
        "M(2,1) round-trips through {} action triples",
        pdoc.act_left.len() + pdoc.act_right.len()
    );

    // Canonical text is stable: load ∘ save is the identity byte for byte.
    let canon = to_canonical_json(&pdoc, false).unwrap();
    let reparsed: groupoid_pairs::io::MatchedPairDoc = serde_json::from_str(&canon).unwrap();
    assert_eq!(to_canonical_json(&reparsed, false).unwrap(), canon);

    // A corrupted action entry is rejected with a law-level witness.
    let mut bad = pdoc.clone();
    let old = bad.act_left[0][2];
    bad.act_left[0][2] = if old == 0 { 1 } else { 0 };
    println!(
        "corrupted document rejected: {}",
        pair_from_doc(&bad).is_err()
    );

    // Workspaces name several structures and cross-validate references.
    let mut ws = WorkspaceDoc::default();
    ws.matched_pairs.insert("m".into(), pdoc);
    let idm = MatchedPairMorphism::identity(&m);
    ws.morphisms.insert(
        "id".into(),
        MorphismDoc {
            source: "m".into(),
            target: "m".into(),
            alpha: arrow_map_to_pairs(&idm.alpha),
            beta: arrow_map_to_pairs(&idm.beta),
        },
    );
    let loaded = workspace_from_doc(&ws).unwrap();
    println!(
        "workspace loaded: {} pair(s), {} morphism(s)",
        loaded.matched_pairs.len(),
        loaded.morphisms.len()
    );
}
