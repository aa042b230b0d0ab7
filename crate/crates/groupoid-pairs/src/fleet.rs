//! The standard example fleet: every constructor-produced matched pair used
//! by the test suites and the batch report, plus the standard representation
//! fleet of a pair (unit, V, the cell representation, sections, and the
//! anchored subrepresentations), bounded for exhaustive certification.

use crate::groupoid::{zoo, ArrowId, FiniteGroupoid};
use crate::matched_pair::MatchedPair;
use crate::rep::{
    rep_h_sigma, rep_hp_g, rep_hv, rep_v, section_identity, sections, terminal_morphism, unit_rep,
    RepMap, Representation,
};

pub struct FleetPair {
    pub name: String,
    pub pair: MatchedPair,
}

fn named(name: &str, pair: MatchedPair) -> FleetPair {
    FleetPair {
        name: name.to_string(),
        pair,
    }
}

/// Every matched pair the suites exercise: initial/terminal pairs over
/// bases of size 1–3, `M(X,Y)` for `|X|, |Y| ≤ 2`, the exact group
/// factorizations `S₃ = C₃·C₂` and `C₆ = C₂·C₃`, conjugation pairs over
/// `coarse(2)` and one-object `S₃`, and both semi pairs.
pub fn standard_pairs() -> Vec<FleetPair> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(named(
            &format!("initial-{n}"),
            MatchedPair::initial(n).unwrap(),
        ));
        out.push(named(
            &format!("terminal-{n}"),
            MatchedPair::terminal(n).unwrap(),
        ));
    }
    for nx in 1..=2 {
        for ny in 1..=2 {
            out.push(named(
                &format!("mxy-{nx}-{ny}"),
                MatchedPair::mxy(nx, ny).unwrap(),
            ));
        }
    }
    let (s3, c3, c2) = zoo::symmetric_3();
    out.push(named(
        "group-s3-c3-c2",
        MatchedPair::group_pair(&s3, &c3, &c2).unwrap(),
    ));
    let (c6, f2, g3) = zoo::cyclic_6_factored();
    out.push(named(
        "group-c6-c2-c3",
        MatchedPair::group_pair(&c6, &f2, &g3).unwrap(),
    ));
    let coarse2 = FiniteGroupoid::coarse(&["P0", "P1"]).unwrap();
    out.push(named("conj-coarse2", MatchedPair::conjugation(&coarse2)));
    out.push(named("conj-s3", MatchedPair::conjugation(&s3)));
    out.push(named(
        "semi-v-coarse2",
        MatchedPair::semi_vertical(&coarse2),
    ));
    out.push(named(
        "semi-h-c3",
        MatchedPair::semi_horizontal(&zoo::cyclic(3)),
    ));
    out
}

/// Look a fleet pair up by name.
pub fn pair_by_name(name: &str) -> Option<MatchedPair> {
    standard_pairs()
        .into_iter()
        .find(|f| f.name == name)
        .map(|f| f.pair)
}

/// The representation fleet of a pair: unit, `V`, the cell representation,
/// `H_σ` for all sections up to `max_sections`, and `H_P × {g}` for every
/// vertical arrow. Representations larger than `max_elements` are skipped
/// so tensor-square certifications stay exhaustive but bounded.
pub fn standard_reps(
    m: &MatchedPair,
    max_elements: usize,
    max_sections: usize,
) -> Vec<(String, Representation)> {
    let mut out: Vec<(String, Representation)> = vec![
        ("unit".into(), unit_rep(m)),
        ("V".into(), rep_v(m)),
        ("HV".into(), rep_hv(m)),
    ];
    let sigma0 = section_identity(m);
    out.push(("H_sigma0".into(), rep_h_sigma(m, &sigma0)));
    for (i, sigma) in sections(m, max_sections).into_iter().enumerate() {
        if sigma != sigma0 {
            out.push((format!("H_sigma{}", i + 1), rep_h_sigma(m, &sigma)));
        }
    }
    for g in m.vertical().arrows().take(4) {
        out.push((format!("HP_{}", m.vertical().label(g)), rep_hp_g(m, g)));
    }
    out.retain(|(_, r)| r.len() <= max_elements);
    out.dedup_by(|a, b| a.1 == b.1);
    out
}

/// Morphisms between fleet representations used for naturality checks:
/// identities and the terminal morphisms into `V`.
pub fn standard_rep_morphisms(
    _m: &MatchedPair,
    fleet: &[(String, Representation)],
) -> Vec<(usize, usize, RepMap)> {
    let mut out = Vec::new();
    let v_pos = fleet.iter().position(|(n, _)| n == "V");
    for (i, (_, r)) in fleet.iter().enumerate() {
        out.push((i, i, (0..r.len()).collect()));
        if let Some(v) = v_pos {
            out.push((i, v, terminal_morphism(r)));
        }
    }
    out
}

/// Guard helper: a pair is "hopf scale" when its cell count stays small
/// enough for the exhaustive algebra certifications.
pub fn within_cell_guard(m: &MatchedPair, guard: usize) -> bool {
    m.cell_count() <= guard
}

/// Named groupoids for the CLI `example` command.
pub fn groupoid_by_name(name: &str) -> Option<FiniteGroupoid> {
    match name {
        "coarse2" => Some(FiniteGroupoid::coarse(&["P0", "P1"]).unwrap()),
        "coarse3" => Some(FiniteGroupoid::coarse(&["P0", "P1", "P2"]).unwrap()),
        "discrete2" => Some(FiniteGroupoid::discrete(&["P0", "P1"]).unwrap()),
        "c2" => Some(zoo::cyclic(2)),
        "c3" => Some(zoo::cyclic(3)),
        "c4" => Some(zoo::cyclic(4)),
        "c6" => Some(zoo::cyclic(6)),
        "s3" => Some(zoo::symmetric_3().0),
        _ => None,
    }
}

/// Named group factorizations for the CLI `example group` command.
pub fn group_factorization_by_name(
    sigma: &str,
    f: &str,
    g: &str,
) -> Option<(FiniteGroupoid, Vec<ArrowId>, Vec<ArrowId>)> {
    match (sigma, f, g) {
        ("s3", "c3", "c2") => {
            let (s3, c3, c2) = zoo::symmetric_3();
            Some((s3, c3, c2))
        }
        ("c6", "c2", "c3") => {
            let (c6, f2, g3) = zoo::cyclic_6_factored();
            Some((c6, f2, g3))
        }
        _ => None,
    }
}
