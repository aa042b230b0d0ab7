//! Isomorphisms of matched pairs, explicit or found by search.
//!
//! An isomorphism here is the symmetric, covariant kind: a base bijection
//! together with arrow bijections of both groupoids commuting with both
//! actions covariantly,
//!
//! ```text
//! φ_V(x ▷ g) = φ_H(x) ▷ φ_V(g)        φ_H(x ◁ g) = φ_H(x) ◁ φ_V(g).
//! ```
//!
//! [`find_isomorphism`] backtracks over base bijections and then over arrow
//! images constrained by endpoints, multiplicativity and the actions; it is
//! meant for desk-scale identifications (bases up to a handful of points).
//! Explicit candidate maps, when known, should be validated directly with
//! [`PairIso::validate`] before falling back to the search.

use crate::groupoid::{ArrowId, FiniteGroupoid, ObjId};
use crate::matched_pair::MatchedPair;
use crate::report::ValidationReport;

#[derive(Clone, Debug)]
pub struct PairIso {
    /// Base bijection, by source object.
    pub obj_map: Vec<ObjId>,
    /// Vertical arrow bijection, by source arrow.
    pub v_map: Vec<ArrowId>,
    /// Horizontal arrow bijection, by source arrow.
    pub h_map: Vec<ArrowId>,
}

impl PairIso {
    pub fn validate(&self, a: &MatchedPair, b: &MatchedPair) -> ValidationReport {
        let mut report = ValidationReport::new("pair-isomorphism");
        if !is_bijection(&self.obj_map, b.base_size())
            || !is_bijection_a(&self.v_map, b.vertical().arrow_count())
            || !is_bijection_a(&self.h_map, b.horizontal().arrow_count())
        {
            report.record("bijectivity", "some leg is not a bijection");
            return report;
        }
        check_groupoid_leg(
            &mut report,
            "vertical",
            a.vertical(),
            b.vertical(),
            &self.obj_map,
            &self.v_map,
        );
        check_groupoid_leg(
            &mut report,
            "horizontal",
            a.horizontal(),
            b.horizontal(),
            &self.obj_map,
            &self.h_map,
        );
        if !report.is_ok() {
            return report;
        }
        for &c in a.cells() {
            let (x, g) = (c.top, c.right);
            let lhs = self.v_map[a.cell_left(c).idx()];
            let rhs = b.act_left(self.h_map[x.idx()], self.v_map[g.idx()]);
            if rhs != Some(lhs) {
                report.record("action-left", a.describe_cell(c));
            }
            let lhs = self.h_map[a.cell_bottom(c).idx()];
            let rhs = b.act_right(self.h_map[x.idx()], self.v_map[g.idx()]);
            if rhs != Some(lhs) {
                report.record("action-right", a.describe_cell(c));
            }
        }
        report
    }
}

fn is_bijection(map: &[ObjId], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for p in map {
        if p.idx() >= n || seen[p.idx()] {
            return false;
        }
        seen[p.idx()] = true;
    }
    true
}

fn is_bijection_a(map: &[ArrowId], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for p in map {
        if p.idx() >= n || seen[p.idx()] {
            return false;
        }
        seen[p.idx()] = true;
    }
    true
}

fn check_groupoid_leg(
    report: &mut ValidationReport,
    name: &str,
    ga: &FiniteGroupoid,
    gb: &FiniteGroupoid,
    obj_map: &[ObjId],
    map: &[ArrowId],
) {
    for f in ga.arrows() {
        let img = map[f.idx()];
        if gb.src(img) != obj_map[ga.src(f).idx()] || gb.end(img) != obj_map[ga.end(f).idx()] {
            report.record(format!("{name}-endpoints"), ga.label(f).to_string());
        }
    }
    for p in ga.objects() {
        if map[ga.id(p).idx()] != gb.id(obj_map[p.idx()]) {
            report.record(format!("{name}-identity"), ga.object_label(p).to_string());
        }
    }
    for f in ga.arrows() {
        for g in ga.arrows() {
            if let Some(fg) = ga.compose(f, g) {
                if gb.compose(map[f.idx()], map[g.idx()]) != Some(map[fg.idx()]) {
                    report.record(
                        format!("{name}-multiplicativity"),
                        format!("({}, {})", ga.label(f), ga.label(g)),
                    );
                }
            }
        }
    }
}

/// Search for an isomorphism `a ≅ b`: all base bijections, then vertical
/// arrow images, then horizontal ones, with incremental pruning.
pub fn find_isomorphism(a: &MatchedPair, b: &MatchedPair) -> Option<PairIso> {
    if a.base_size() != b.base_size()
        || a.vertical().arrow_count() != b.vertical().arrow_count()
        || a.horizontal().arrow_count() != b.horizontal().arrow_count()
    {
        return None;
    }
    let n = a.base_size();
    let mut perm: Vec<ObjId> = (0..n as u32).map(ObjId).collect();
    permute(&mut perm, 0, &mut |obj_map| {
        search_arrows(a, b, obj_map).map(|(v_map, h_map)| PairIso {
            obj_map: obj_map.to_vec(),
            v_map,
            h_map,
        })
    })
}

fn permute<T: Copy, R>(
    items: &mut Vec<T>,
    k: usize,
    visit: &mut impl FnMut(&[T]) -> Option<R>,
) -> Option<R> {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if let Some(r) = permute(items, k + 1, visit) {
            return Some(r);
        }
        items.swap(k, i);
    }
    None
}

fn search_arrows(
    a: &MatchedPair,
    b: &MatchedPair,
    obj_map: &[ObjId],
) -> Option<(Vec<ArrowId>, Vec<ArrowId>)> {
    let va = a.vertical();
    let vb = b.vertical();
    let mut v_map: Vec<Option<ArrowId>> = vec![None; va.arrow_count()];
    let mut v_used = vec![false; vb.arrow_count()];
    for p in va.objects() {
        let img = vb.id(obj_map[p.idx()]);
        v_map[va.id(p).idx()] = Some(img);
        v_used[img.idx()] = true;
    }
    let free: Vec<ArrowId> = va.arrows().filter(|x| v_map[x.idx()].is_none()).collect();
    backtrack_groupoid_iso(
        va,
        vb,
        obj_map,
        &free,
        0,
        &mut v_map,
        &mut v_used,
        &mut |vm| search_horizontal(a, b, obj_map, vm),
    )
}

#[allow(clippy::too_many_arguments)]
fn backtrack_groupoid_iso<R>(
    ga: &FiniteGroupoid,
    gb: &FiniteGroupoid,
    obj_map: &[ObjId],
    free: &[ArrowId],
    pos: usize,
    map: &mut Vec<Option<ArrowId>>,
    used: &mut Vec<bool>,
    on_complete: &mut impl FnMut(&[ArrowId]) -> Option<R>,
) -> Option<R> {
    if pos == free.len() {
        let full: Vec<ArrowId> = map.iter().map(|m| m.unwrap()).collect();
        return on_complete(&full);
    }
    let f = free[pos];
    let (p, q) = (obj_map[ga.src(f).idx()], obj_map[ga.end(f).idx()]);
    for img in gb.hom(p, q) {
        if used[img.idx()] {
            continue;
        }
        map[f.idx()] = Some(img);
        used[img.idx()] = true;
        if partial_iso_ok(ga, gb, map) {
            if let Some(r) =
                backtrack_groupoid_iso(ga, gb, obj_map, free, pos + 1, map, used, on_complete)
            {
                return Some(r);
            }
        }
        map[f.idx()] = None;
        used[img.idx()] = false;
    }
    None
}

fn partial_iso_ok(ga: &FiniteGroupoid, gb: &FiniteGroupoid, map: &[Option<ArrowId>]) -> bool {
    for f in ga.arrows() {
        let Some(mf) = map[f.idx()] else { continue };
        for g in ga.arrows() {
            let Some(mg) = map[g.idx()] else { continue };
            if let Some(fg) = ga.compose(f, g) {
                if let Some(mfg) = map[fg.idx()] {
                    if gb.compose(mf, mg) != Some(mfg) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn search_horizontal(
    a: &MatchedPair,
    b: &MatchedPair,
    obj_map: &[ObjId],
    v_map: &[ArrowId],
) -> Option<(Vec<ArrowId>, Vec<ArrowId>)> {
    let ha = a.horizontal();
    let hb = b.horizontal();
    let mut h_map: Vec<Option<ArrowId>> = vec![None; ha.arrow_count()];
    let mut used = vec![false; hb.arrow_count()];
    for p in ha.objects() {
        let img = hb.id(obj_map[p.idx()]);
        h_map[ha.id(p).idx()] = Some(img);
        used[img.idx()] = true;
    }
    let free: Vec<ArrowId> = ha.arrows().filter(|x| h_map[x.idx()].is_none()).collect();
    let v_map_owned = v_map.to_vec();
    backtrack_groupoid_iso(
        ha,
        hb,
        obj_map,
        &free,
        0,
        &mut h_map,
        &mut used,
        &mut |hm| {
            if actions_commute(a, b, &v_map_owned, hm) {
                Some((v_map_owned.clone(), hm.to_vec()))
            } else {
                None
            }
        },
    )
}

fn actions_commute(a: &MatchedPair, b: &MatchedPair, v_map: &[ArrowId], h_map: &[ArrowId]) -> bool {
    for &c in a.cells() {
        let (x, g) = (c.top, c.right);
        if b.act_left(h_map[x.idx()], v_map[g.idx()]) != Some(v_map[a.cell_left(c).idx()]) {
            return false;
        }
        if b.act_right(h_map[x.idx()], v_map[g.idx()]) != Some(h_map[a.cell_bottom(c).idx()]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::zoo;

    #[test]
    fn identity_iso_validates() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let iso = PairIso {
            obj_map: m.vertical().objects().collect(),
            v_map: m.vertical().arrows().collect(),
            h_map: m.horizontal().arrows().collect(),
        };
        assert!(iso.validate(&m, &m).is_ok());
    }

    #[test]
    fn dual_of_mxy_is_m_yx() {
        let m = MatchedPair::mxy(2, 2).unwrap().dual();
        let myx = MatchedPair::mxy(2, 2).unwrap();
        // Self-dual shape when |X| = |Y|.
        let iso = find_isomorphism(&m, &myx).expect("M(2,2)ᵈᵘᵃˡ ≅ M(2,2)");
        assert!(iso.validate(&m, &myx).is_ok());
        let m12 = MatchedPair::mxy(1, 2).unwrap().dual();
        let m21 = MatchedPair::mxy(2, 1).unwrap();
        let iso2 = find_isomorphism(&m12, &m21).expect("M(1,2)ᵈᵘᵃˡ ≅ M(2,1)");
        assert!(iso2.validate(&m12, &m21).is_ok());
    }

    #[test]
    fn pair_is_isomorphic_to_its_opposite() {
        // (inv, id) gives the explicit isomorphism (V,H) ≅ (V,H^op).
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        let op = m.opposite();
        let explicit = PairIso {
            obj_map: m.vertical().objects().collect(),
            v_map: m.vertical().arrows().collect(),
            h_map: m
                .horizontal()
                .arrows()
                .map(|x| m.horizontal().inv(x))
                .collect(),
        };
        assert!(explicit.validate(&m, &op).is_ok());
        // And the coopposite analogue.
        let cop = m.coopposite();
        let explicit2 = PairIso {
            obj_map: m.vertical().objects().collect(),
            v_map: m.vertical().arrows().map(|g| m.vertical().inv(g)).collect(),
            h_map: m.horizontal().arrows().collect(),
        };
        assert!(explicit2.validate(&m, &cop).is_ok());
    }

    #[test]
    fn non_isomorphic_pairs_are_rejected() {
        let a = MatchedPair::initial(2).unwrap();
        let b = MatchedPair::terminal(2).unwrap();
        assert!(find_isomorphism(&a, &b).is_none());
    }
}
