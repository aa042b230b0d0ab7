//! Set-theoretic representations of a matched pair and their strict
//! monoidal structure.
//!
//! A representation is a finite carrier `E` with a grading `|·| : E → V` and
//! a left `H`-action on `p(e) = t(|e|)` such that `|x ▷ e| = x ▷ |e|`; the
//! quiver maps `p, q` are determined by the grading. The tensor product
//! `E ⊗ F = {(e, f) : b(|e|) = t(|f|)}` carries `|(e,f)| = |e||f|` and
//! `x ▷ (e, f) = (x ▷ e, (x ◁ |e|) ▷ f)`; it is strictly associative and
//! unital at the level of carrier tuples and tables, with unit the base
//! itself graded by identities.

use crate::groupoid::ArrowId;
use crate::matched_pair::MatchedPair;
use crate::morphism::MatchedPairMorphism;
use crate::report::ValidationReport;
use std::collections::HashMap;

/// A representation, stored as grading and total action table.
#[derive(Clone, Debug)]
pub struct Representation {
    labels: Vec<String>,
    grading: Vec<ArrowId>,
    /// `x.idx() * |E| + e` → `x ▷ e`; `Some` exactly when `r(x) = p(e)`.
    action: Vec<Option<usize>>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.grading == other.grading && self.action == other.action
    }
}
impl Eq for Representation {}

impl Representation {
    pub fn new(
        labels: Vec<String>,
        grading: Vec<ArrowId>,
        h_count: usize,
        act: impl Fn(ArrowId, usize) -> Option<usize>,
    ) -> Self {
        let n = grading.len();
        let mut action = vec![None; h_count * n];
        for x in 0..h_count {
            for e in 0..n {
                action[x * n + e] = act(ArrowId(x as u32), e);
            }
        }
        Representation {
            labels,
            grading,
            action,
        }
    }

    pub fn len(&self) -> usize {
        self.grading.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grading.is_empty()
    }

    pub fn grade(&self, e: usize) -> ArrowId {
        self.grading[e]
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn act(&self, x: ArrowId, e: usize) -> Option<usize> {
        self.action[x.idx() * self.len() + e]
    }

    /// `p(e) = t(|e|)`.
    pub fn p(&self, m: &MatchedPair, e: usize) -> crate::ObjId {
        m.vertical().src(self.grading[e])
    }

    /// `q(e) = b(|e|)`.
    pub fn q(&self, m: &MatchedPair, e: usize) -> crate::ObjId {
        m.vertical().end(self.grading[e])
    }

    /// Copy with one grading entry overwritten, for validator tests.
    pub fn with_grade(&self, e: usize, g: ArrowId) -> Self {
        let mut out = self.clone();
        out.grading[e] = g;
        out
    }
}

/// Check totality of the action on composable pairs, the action laws, and
/// the grading compatibility `|x ▷ e| = x ▷ |e|`.
pub fn validate_representation(m: &MatchedPair, r: &Representation) -> ValidationReport {
    let mut report = ValidationReport::new("representation");
    let h = m.horizontal();
    let v = m.vertical();
    for e in 0..r.len() {
        if r.grade(e).idx() >= v.arrow_count() {
            report.record("grading-range", r.label(e).to_string());
            return report;
        }
    }
    for x in h.arrows() {
        for e in 0..r.len() {
            let composable = h.end(x) == r.p(m, e);
            match r.act(x, e) {
                None if composable => {
                    report.record("action-domain", format!("({}, {})", h.label(x), r.label(e)))
                }
                Some(_) if !composable => {
                    report.record("action-domain", format!("({}, {})", h.label(x), r.label(e)))
                }
                Some(xe) => {
                    if xe >= r.len() {
                        report.record("action-range", format!("({}, {})", h.label(x), r.label(e)));
                        continue;
                    }
                    // p(x ▷ e) = l(x)
                    if r.p(m, xe) != h.src(x) {
                        report.record(
                            "action-endpoint",
                            format!("({}, {})", h.label(x), r.label(e)),
                        );
                    }
                    // |x ▷ e| = x ▷ |e|
                    if m.act_left(x, r.grade(e)) != Some(r.grade(xe)) {
                        report.record(
                            "grading-compat",
                            format!("({}, {})", h.label(x), r.label(e)),
                        );
                    }
                }
                None => {}
            }
        }
    }
    // id ▷ e = e and x ▷ (y ▷ e) = xy ▷ e.
    for e in 0..r.len() {
        if r.act(h.id(r.p(m, e)), e) != Some(e) {
            report.record("action-unit", r.label(e).to_string());
        }
    }
    for x in h.arrows() {
        for y in h.arrows() {
            let Some(xy) = h.compose(x, y) else { continue };
            for e in 0..r.len() {
                if h.end(y) != r.p(m, e) {
                    continue;
                }
                let lhs = r.act(y, e).and_then(|ye| r.act(x, ye));
                if lhs != r.act(xy, e) || lhs.is_none() {
                    report.record(
                        "action-mult",
                        format!("({}, {}, {})", h.label(x), h.label(y), r.label(e)),
                    );
                }
            }
        }
    }
    report
}

/// The unit representation: the base with `|P| = id_V P` and the trivial
/// action `x ▷ r(x) = l(x)`.
pub fn unit_rep(m: &MatchedPair) -> Representation {
    let v = m.vertical();
    let h = m.horizontal().clone();
    Representation::new(
        v.object_labels().to_vec(),
        v.objects().map(|p| v.id(p)).collect(),
        h.arrow_count(),
        move |x, e| {
            if h.end(x).idx() == e {
                Some(h.src(x).idx())
            } else {
                None
            }
        },
    )
}

/// The vertical groupoid as a representation: identity grading, action `▷`.
/// This is the terminal object of the category.
pub fn rep_v(m: &MatchedPair) -> Representation {
    let v = m.vertical();
    let mm = m.clone();
    Representation::new(
        v.arrow_labels().to_vec(),
        v.arrows().collect(),
        m.horizontal().arrow_count(),
        move |x, e| mm.act_left(x, ArrowId(e as u32)).map(|a| a.idx()),
    )
}

/// The distinguished representation on the cells `H ×_{r,t} V`:
/// `x ▷ (y, g) = (xy, g)` and `|(x, g)| = x ▷ g`. Its linearization is the
/// regular module of the weak Hopf algebra.
pub fn rep_hv(m: &MatchedPair) -> Representation {
    let h = m.horizontal().clone();
    let mm = m.clone();
    let labels = m.cells().iter().map(|&c| m.describe_cell(c)).collect();
    let grading = m.cells().iter().map(|&c| m.cell_left(c)).collect();
    Representation::new(labels, grading, h.arrow_count(), move |x, e| {
        let c = mm.cell_at(e);
        let xy = h.compose(x, c.top)?;
        mm.cell_index(crate::Cell {
            top: xy,
            right: c.right,
        })
    })
}

/// All sections `σ : P → V` of `t`, up to `cap` of them.
pub fn sections(m: &MatchedPair, cap: usize) -> Vec<Vec<ArrowId>> {
    let v = m.vertical();
    let fibers: Vec<Vec<ArrowId>> = v
        .objects()
        .map(|p| v.arrows().filter(|&g| v.src(g) == p).collect())
        .collect();
    let mut out: Vec<Vec<ArrowId>> = vec![Vec::new()];
    for fiber in &fibers {
        let mut next = Vec::new();
        for partial in &out {
            for &g in fiber {
                if next.len() >= cap {
                    break;
                }
                let mut s = partial.clone();
                s.push(g);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// The canonical section `σ₀(P) = id_V P`.
pub fn section_identity(m: &MatchedPair) -> Vec<ArrowId> {
    let v = m.vertical();
    v.objects().map(|p| v.id(p)).collect()
}

/// The subrepresentation `H_σ = {(x, σ r(x))}` of the cell representation,
/// identified with `H`: grading `|x| = x ▷ σ(r(x))`, action `y ▷ x = yx`.
pub fn rep_h_sigma(m: &MatchedPair, sigma: &[ArrowId]) -> Representation {
    let h = m.horizontal().clone();
    let grading: Vec<ArrowId> = h
        .arrows()
        .map(|x| {
            m.act_left(x, sigma[h.end(x).idx()])
                .expect("t(σ(r(x))) = r(x)")
        })
        .collect();
    let hh = h.clone();
    Representation::new(
        h.arrow_labels().to_vec(),
        grading,
        h.arrow_count(),
        move |y, e| hh.compose(y, ArrowId(e as u32)).map(|a| a.idx()),
    )
}

/// The subrepresentation `H_P × {g}` with `P = t(g)`: carrier the arrows
/// ending at `P`, grading `x ▷ g`, action by left multiplication.
pub fn rep_hp_g(m: &MatchedPair, g: ArrowId) -> Representation {
    let h = m.horizontal().clone();
    let p = m.vertical().src(g);
    let carrier: Vec<ArrowId> = h.arrows().filter(|&x| h.end(x) == p).collect();
    let index: HashMap<ArrowId, usize> = carrier.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let labels = carrier
        .iter()
        .map(|&x| format!("({},{})", h.label(x), m.vertical().label(g)))
        .collect();
    let grading = carrier
        .iter()
        .map(|&x| m.act_left(x, g).expect("r(x) = P = t(g)"))
        .collect();
    let hh = h.clone();
    Representation::new(labels, grading, h.arrow_count(), move |y, e| {
        hh.compose(y, carrier[e])
            .and_then(|yx| index.get(&yx).copied())
    })
}

/// A tensor product together with its carrier bookkeeping.
pub struct TensorRep {
    pub rep: Representation,
    pub pairs: Vec<(usize, usize)>,
    pub index: HashMap<(usize, usize), usize>,
}

/// `E ⊗ F` with `|(e,f)| = |e||f|` and `x ▷ (e,f) = (x▷e, (x◁|e|)▷f)`.
pub fn tensor(m: &MatchedPair, a: &Representation, b: &Representation) -> TensorRep {
    let v = m.vertical();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for e in 0..a.len() {
        for f in 0..b.len() {
            if v.end(a.grade(e)) == v.src(b.grade(f)) {
                index.insert((e, f), pairs.len());
                pairs.push((e, f));
            }
        }
    }
    let labels = pairs
        .iter()
        .map(|&(e, f)| format!("({},{})", a.label(e), b.label(f)))
        .collect();
    let grading = pairs
        .iter()
        .map(|&(e, f)| v.compose(a.grade(e), b.grade(f)).expect("b(|e|) = t(|f|)"))
        .collect();
    let pairs2 = pairs.clone();
    let index2 = index.clone();
    let aa = a.clone();
    let bb = b.clone();
    let mm = m.clone();
    let rep = Representation::new(
        labels,
        grading,
        m.horizontal().arrow_count(),
        move |x, i| {
            let (e, f) = pairs2[i];
            let xe = aa.act(x, e)?;
            let xq = mm.act_right(x, aa.grade(e))?;
            let xf = bb.act(xq, f)?;
            index2.get(&(xe, xf)).copied()
        },
    );
    TensorRep { rep, pairs, index }
}

/// A morphism of representations, stored by source element.
pub type RepMap = Vec<usize>;

/// Check that `map` intertwines the actions and preserves the grading.
pub fn validate_rep_morphism(
    m: &MatchedPair,
    from: &Representation,
    to: &Representation,
    map: &[usize],
) -> ValidationReport {
    let mut report = ValidationReport::new("rep-morphism");
    if map.len() != from.len() || map.iter().any(|&e| e >= to.len()) {
        report.record("shape", "map does not cover the carrier");
        return report;
    }
    for (e, &img) in map.iter().enumerate() {
        if to.grade(img) != from.grade(e) {
            report.record("grading", from.label(e).to_string());
        }
    }
    for x in m.horizontal().arrows() {
        for e in 0..from.len() {
            let Some(xe) = from.act(x, e) else { continue };
            if to.act(x, map[e]) != Some(map[xe]) {
                report.record(
                    "intertwine",
                    format!("({}, {})", m.horizontal().label(x), from.label(e)),
                );
            }
        }
    }
    report
}

/// The unique morphism to the terminal representation `V`: `ψ(e) = |e|`.
pub fn terminal_morphism(r: &Representation) -> RepMap {
    (0..r.len()).map(|e| r.grade(e).idx()).collect()
}

/// The expansion of `e`: the unique morphism `H_P × {|e|} → E` with
/// `ρ_e(id P, |e|) = e`, namely `ρ_e(x, g) = x ▷ e`.
pub fn expansion(m: &MatchedPair, r: &Representation, e: usize) -> (Representation, RepMap) {
    let g = r.grade(e);
    let hp = rep_hp_g(m, g);
    let h = m.horizontal();
    let p = m.vertical().src(g);
    let carrier: Vec<ArrowId> = h.arrows().filter(|&x| h.end(x) == p).collect();
    let map: RepMap = carrier
        .iter()
        .map(|&x| r.act(x, e).expect("r(x) = P = p(e)"))
        .collect();
    (hp, map)
}

/// The isomorphism `ψ : H ×_{r,t} V → V ⊗ H_{σ₀}`, `(x, g) ↦ (x▷g, x◁g)`.
/// Returns the target tensor and the bijective intertwiner.
pub fn psi_iso(m: &MatchedPair) -> (TensorRep, RepMap) {
    let target = tensor(m, &rep_v(m), &rep_h_sigma(m, &section_identity(m)));
    let map: RepMap = m
        .cells()
        .iter()
        .map(|&c| target.index[&(m.cell_left(c).idx(), m.cell_bottom(c).idx())])
        .collect();
    (target, map)
}

/// Restriction along a morphism of matched pairs: same carrier, action
/// `h ▷ e = α(h) ▷ e`, grading `‖e‖ = β(|e|)`.
pub fn restrict(mor: &MatchedPairMorphism, r: &Representation) -> Representation {
    let alpha = mor.alpha.clone();
    let rr = r.clone();
    Representation::new(
        r.labels.clone(),
        (0..r.len()).map(|e| mor.beta[r.grade(e).idx()]).collect(),
        mor.source.horizontal().arrow_count(),
        move |h, e| rr.act(alpha[h.idx()], e),
    )
}

/// Enumerate every morphism of representations `from → to` by backtracking
/// over images constrained by grading fibers and the action.
pub fn enumerate_rep_morphisms(
    m: &MatchedPair,
    from: &Representation,
    to: &Representation,
) -> Vec<RepMap> {
    let mut found = Vec::new();
    let mut partial: Vec<Option<usize>> = vec![None; from.len()];
    backtrack_rep(m, from, to, 0, &mut partial, &mut found);
    found
}

fn backtrack_rep(
    m: &MatchedPair,
    from: &Representation,
    to: &Representation,
    e: usize,
    partial: &mut Vec<Option<usize>>,
    found: &mut Vec<RepMap>,
) {
    if e == from.len() {
        let map: RepMap = partial.iter().map(|v| v.unwrap()).collect();
        if validate_rep_morphism(m, from, to, &map).is_ok() {
            found.push(map);
        }
        return;
    }
    for img in 0..to.len() {
        if to.grade(img) != from.grade(e) {
            continue;
        }
        partial[e] = Some(img);
        if partial_intertwines(m, from, to, partial) {
            backtrack_rep(m, from, to, e + 1, partial, found);
        }
        partial[e] = None;
    }
}

fn partial_intertwines(
    m: &MatchedPair,
    from: &Representation,
    to: &Representation,
    partial: &[Option<usize>],
) -> bool {
    for x in m.horizontal().arrows() {
        for e in 0..from.len() {
            let Some(me) = partial[e] else { continue };
            let Some(xe) = from.act(x, e) else { continue };
            if let Some(mxe) = partial[xe] {
                if to.act(x, me) != Some(mxe) {
                    return false;
                }
            }
        }
    }
    true
}
