//! Matched pairs of groupoids: constructors, cells, axiom validation,
//! derived identities, duals and opposites.

use groupoid_pairs::groupoid::zoo;
use groupoid_pairs::MatchedPair;

fn main() {
    // The initial pair (P×P, P) and the terminal pair (P, P×P).
    let initial = MatchedPair::initial(3).unwrap();
    let terminal = MatchedPair::terminal(3).unwrap();
    println!(
        "initial pair over 3 points: |V| = {}, |H| = {}, {} cells",
        initial.vertical().arrow_count(),
        initial.horizontal().arrow_count(),
        initial.cell_count()
    );
    assert!(initial.validate().is_ok());
    assert!(terminal.validate().is_ok());
    assert_eq!(initial.dual(), terminal);

    // M(X, Y): base X × Y, cells (x,x',y) ▷ (x',y,y') = (x,y,y').
    let m = MatchedPair::mxy(2, 2).unwrap();
    println!("M(2,2): base {}, {} cells", m.base_size(), m.cell_count());
    assert!(m.validate().is_ok());
    assert!(m.derived_identities().is_ok());

    // Every cell closes into a square; inverting all four edges gives the
    // inverse cell, transposing gives a cell of the dual pair.
    let c = m.cells()[5];
    println!(
        "cell {} has left {} and bottom {}",
        m.describe_cell(c),
        m.vertical().label(m.cell_left(c)),
        m.horizontal().label(m.cell_bottom(c)),
    );
    assert_eq!(m.cell_inverse(m.cell_inverse(c)), c);
    let dual = m.dual();
    assert!(dual.cell_index(m.cell_transpose(c)).is_some());

    // Exact group factorizations: S₃ = C₃ · C₂.
    let (s3, c3, c2) = zoo::symmetric_3();
    let pair = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
    println!(
        "S₃ = C₃·C₂ gives |V| = {}, |H| = {}",
        pair.vertical().arrow_count(),
        pair.horizontal().arrow_count()
    );
    assert!(pair.validate().is_ok());

    // A non-exact factorization is rejected with a witness.
    let err = MatchedPair::group_pair(&s3, &c3, &c3).unwrap_err();
    println!("C₃·C₃ fails: {err}");

    // Conjugation pairs: H acting on its own isotropy bundle.
    let conj = MatchedPair::conjugation(&s3);
    assert!(conj.validate().is_ok());
    println!("conjugation pair of S₃ has {} cells", conj.cell_count());

    // Opposites and coopposites are involutive and lawful.
    assert_eq!(pair.opposite().opposite(), pair);
    assert_eq!(pair.coopposite().coopposite(), pair);
    assert!(pair.opposite().validate().is_ok());
}
