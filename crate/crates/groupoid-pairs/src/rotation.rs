//! Rotations and matched pairs of rotations: the combinatorial data that
//! classifies braidings on the representation category.
//!
//! A rotation is a groupoid morphism `η : V → H` over the base with
//! `y η(g) = η(y ▷ g)(y ◁ g)` for every cell `(y, g)`. A matched pair of
//! rotations `(ξ, η)` additionally satisfies, for composable `g, f` in `V`,
//!
//! ```text
//! b(η(g) ▷ f) = b(ξ(f)⁻¹ ▷ g⁻¹)
//! (η(g) ▷ f) · (ξ(f)⁻¹ ▷ g⁻¹)⁻¹ = gf
//! ```
//!
//! and induces the braiding
//! `c(e, d) = (η(|e|) ▷ d, (ξ(|d|)⁻¹ ◁ |e|⁻¹) ▷ e)` on representations.
//! Enumeration walks base-compatible arrow maps `V → H` with incremental
//! morphism and rotation pruning; a product-space brute-force oracle backs
//! the counts on small pairs.

use crate::double::GeneralizedDouble;
use crate::error::{Error, Result};
use crate::groupoid::{ArrowId, ArrowMap};
use crate::matched_pair::MatchedPair;
use crate::rep::{tensor, validate_rep_morphism, RepMap, Representation};
use crate::report::ValidationReport;

/// Direct check of the rotation laws; `None` means `eta` is a rotation.
pub fn rotation_violation(m: &MatchedPair, eta: &[ArrowId]) -> Option<String> {
    let v = m.vertical();
    let h = m.horizontal();
    if eta.len() != v.arrow_count() {
        return Some("map does not cover V".into());
    }
    for g in v.arrows() {
        let img = eta[g.idx()];
        if img.idx() >= h.arrow_count() {
            return Some(format!("η({}) out of range", v.label(g)));
        }
        if h.src(img) != v.src(g) || h.end(img) != v.end(g) {
            return Some(format!("η({}) has wrong endpoints", v.label(g)));
        }
    }
    for p in v.objects() {
        if eta[v.id(p).idx()] != h.id(p) {
            return Some(format!("η(id {}) is not an identity", v.object_label(p)));
        }
    }
    for f in v.arrows() {
        for g in v.arrows() {
            if let Some(fg) = v.compose(f, g) {
                if h.compose(eta[f.idx()], eta[g.idx()]) != Some(eta[fg.idx()]) {
                    return Some(format!(
                        "η not multiplicative at ({}, {})",
                        v.label(f),
                        v.label(g)
                    ));
                }
            }
        }
    }
    // y η(g) = η(y ▷ g)(y ◁ g) over every cell.
    for &c in m.cells() {
        let (y, g) = (c.top, c.right);
        let lhs = h.compose(y, eta[g.idx()]);
        let rhs = h.compose(eta[m.cell_left(c).idx()], m.cell_bottom(c));
        if lhs != rhs || lhs.is_none() {
            return Some(format!("rotation law fails at cell {}", m.describe_cell(c)));
        }
    }
    None
}

/// Equivalent route: `κ̂(g, x) = κ(g)x` on `V ⋈ H` is a groupoid morphism iff
/// `κ` is a rotation. Both routes must agree on every candidate.
pub fn rotation_violation_via_hat(m: &MatchedPair, eta: &[ArrowId]) -> Option<String> {
    let v = m.vertical();
    let h = m.horizontal();
    if eta.len() != v.arrow_count() {
        return Some("map does not cover V".into());
    }
    for g in v.arrows() {
        let img = eta[g.idx()];
        if img.idx() >= h.arrow_count() {
            return Some(format!("η({}) out of range", v.label(g)));
        }
        // κ̂ needs κ(g)x defined for every (g, x) ∈ V ⋈ H, i.e. r(κ(g)) = l(x) = b(g).
        if h.src(img) != v.src(g) || h.end(img) != v.end(g) {
            return Some(format!("κ̂ undefined at ({}, ·)", v.label(g)));
        }
    }
    let d = crate::diagonal::diagonal_groupoid(m);
    let hat: ArrowMap = d
        .components
        .iter()
        .map(|&(g, x)| h.compose(eta[g.idx()], x).expect("r(κ(g)) = b(g) = l(x)"))
        .collect();
    let report = crate::groupoid::validate_arrow_map(&d.groupoid, h, &hat);
    if report.is_ok() {
        None
    } else {
        Some(format!("κ̂ is not a morphism: {report}"))
    }
}

pub fn is_rotation(m: &MatchedPair, eta: &[ArrowId]) -> bool {
    rotation_violation(m, eta).is_none()
}

/// `None` when `(ξ, η)` is a matched pair of rotations.
pub fn matched_rotation_violation(
    m: &MatchedPair,
    xi: &[ArrowId],
    eta: &[ArrowId],
) -> Option<String> {
    if let Some(w) = rotation_violation(m, xi) {
        return Some(format!("ξ: {w}"));
    }
    if let Some(w) = rotation_violation(m, eta) {
        return Some(format!("η: {w}"));
    }
    let v = m.vertical();
    let h = m.horizontal();
    for g in v.arrows() {
        for f in v.arrows() {
            if v.end(g) != v.src(f) {
                continue;
            }
            // b(η(g) ▷ f) = b(ξ(f)⁻¹ ▷ g⁻¹) and (η(g)▷f)(ξ(f)⁻¹▷g⁻¹)⁻¹ = gf.
            let left = m.act_left(eta[g.idx()], f).expect("r(η(g)) = b(g) = t(f)");
            let right = m
                .act_left(h.inv(xi[f.idx()]), v.inv(g))
                .expect("r(ξ(f)⁻¹) = t(f) = b(g) = t(g⁻¹)");
            if v.end(left) != v.end(right) {
                return Some(format!(
                    "corner condition fails at ({}, {})",
                    v.label(g),
                    v.label(f)
                ));
            }
            let lhs = v.compose(left, v.inv(right));
            let rhs = v.compose(g, f);
            if lhs != rhs || lhs.is_none() {
                return Some(format!(
                    "pairing law fails at ({}, {})",
                    v.label(g),
                    v.label(f)
                ));
            }
        }
    }
    None
}

pub fn is_matched_rotation_pair(m: &MatchedPair, xi: &[ArrowId], eta: &[ArrowId]) -> bool {
    matched_rotation_violation(m, xi, eta).is_none()
}

/// The three identities that follow from a matched pair of rotations; a
/// failure on a pair passing [`matched_rotation_violation`] indicates an
/// implementation bug.
pub fn derived_rotation_identities(
    m: &MatchedPair,
    xi: &[ArrowId],
    eta: &[ArrowId],
) -> ValidationReport {
    let mut report = ValidationReport::new("rotation-derived");
    let v = m.vertical();
    let h = m.horizontal();
    for g in v.arrows() {
        for f in v.arrows() {
            if v.end(g) != v.src(f) {
                continue;
            }
            let witness = || format!("({}, {})", v.label(g), v.label(f));
            let eta_g_f = m.act_left(eta[g.idx()], f).unwrap();
            let xi_inv_g = m.act_left(h.inv(xi[f.idx()]), v.inv(g)).unwrap();
            // ξ(η(g) ▷ f) = (ξ(f)⁻¹ ◁ g⁻¹)⁻¹
            let lhs = xi[eta_g_f.idx()];
            let rhs = h.inv(m.act_right(h.inv(xi[f.idx()]), v.inv(g)).unwrap());
            if lhs != rhs {
                report.record("transport-xi", witness());
            }
            // η(ξ(f)⁻¹ ▷ g⁻¹)⁻¹ = η(g) ◁ f
            let lhs = h.inv(eta[xi_inv_g.idx()]);
            let rhs = m.act_right(eta[g.idx()], f).unwrap();
            if lhs != rhs {
                report.record("transport-eta", witness());
            }
            // η(g) ξ(f) = (ξ(f)⁻¹ ◁ g⁻¹)⁻¹ (η(g) ◁ f)
            let lhs = h.compose(eta[g.idx()], xi[f.idx()]);
            let rhs = h.compose(
                h.inv(m.act_right(h.inv(xi[f.idx()]), v.inv(g)).unwrap()),
                m.act_right(eta[g.idx()], f).unwrap(),
            );
            if lhs != rhs || lhs.is_none() {
                report.record("exchange", witness());
            }
        }
    }
    report
}

/// Enumerate all rotations by backtracking over endpoint-compatible images
/// with incremental morphism and rotation-law pruning. `max_nodes` guards
/// the search; exceeding it is an error, never a truncation.
pub fn enumerate_rotations(m: &MatchedPair, max_nodes: usize) -> Result<Vec<ArrowMap>> {
    let v = m.vertical();
    let h = m.horizontal();
    let mut assignment: Vec<Option<ArrowId>> = vec![None; v.arrow_count()];
    for p in v.objects() {
        assignment[v.id(p).idx()] = Some(h.id(p));
    }
    let free: Vec<ArrowId> = v
        .arrows()
        .filter(|g| assignment[g.idx()].is_none())
        .collect();
    let mut found = Vec::new();
    let mut nodes = 0usize;
    backtrack_rotation(
        m,
        &free,
        0,
        &mut assignment,
        &mut found,
        &mut nodes,
        max_nodes,
    )?;
    Ok(found)
}

fn backtrack_rotation(
    m: &MatchedPair,
    free: &[ArrowId],
    pos: usize,
    assignment: &mut Vec<Option<ArrowId>>,
    found: &mut Vec<ArrowMap>,
    nodes: &mut usize,
    max_nodes: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > max_nodes {
        return Err(Error::SizeGuard {
            what: "rotation search nodes".into(),
            size: *nodes,
            guard: max_nodes,
        });
    }
    if pos == free.len() {
        let map: ArrowMap = assignment.iter().map(|a| a.unwrap()).collect();
        if rotation_violation(m, &map).is_none() {
            found.push(map);
        }
        return Ok(());
    }
    let v = m.vertical();
    let h = m.horizontal();
    let g = free[pos];
    for img in h.hom(v.src(g), v.end(g)) {
        assignment[g.idx()] = Some(img);
        if partial_rotation_ok(m, assignment) {
            backtrack_rotation(m, free, pos + 1, assignment, found, nodes, max_nodes)?;
        }
        assignment[g.idx()] = None;
    }
    Ok(())
}

fn partial_rotation_ok(m: &MatchedPair, assignment: &[Option<ArrowId>]) -> bool {
    let v = m.vertical();
    let h = m.horizontal();
    for f in v.arrows() {
        let Some(mf) = assignment[f.idx()] else {
            continue;
        };
        for g in v.arrows() {
            let Some(mg) = assignment[g.idx()] else {
                continue;
            };
            if let Some(fg) = v.compose(f, g) {
                if let Some(mfg) = assignment[fg.idx()] {
                    if h.compose(mf, mg) != Some(mfg) {
                        return false;
                    }
                }
            }
        }
    }
    for &c in m.cells() {
        let (y, g) = (c.top, c.right);
        let Some(mg) = assignment[g.idx()] else {
            continue;
        };
        let Some(mleft) = assignment[m.cell_left(c).idx()] else {
            continue;
        };
        let lhs = h.compose(y, mg);
        let rhs = h.compose(mleft, m.cell_bottom(c));
        if lhs != rhs || lhs.is_none() {
            return false;
        }
    }
    true
}

/// Brute-force oracle: walk the full product of endpoint-compatible images
/// with no in-walk pruning, checking every law only at the leaves. Counts
/// from this oracle back the pruned enumerator on small pairs.
pub fn enumerate_rotations_brute(m: &MatchedPair, max_nodes: usize) -> Result<Vec<ArrowMap>> {
    let v = m.vertical();
    let h = m.horizontal();
    let candidates: Vec<Vec<ArrowId>> = v
        .arrows()
        .map(|g| {
            if v.is_identity(g) {
                vec![h.id(v.src(g))]
            } else {
                h.hom(v.src(g), v.end(g))
            }
        })
        .collect();
    let mut total: usize = 1;
    for c in &candidates {
        total = total.saturating_mul(c.len().max(1));
        if total > max_nodes {
            return Err(Error::SizeGuard {
                what: "brute-force rotation candidates".into(),
                size: total,
                guard: max_nodes,
            });
        }
        if c.is_empty() {
            return Ok(Vec::new());
        }
    }
    let mut found = Vec::new();
    let mut map: ArrowMap = candidates.iter().map(|c| c[0]).collect();
    walk_product(&candidates, 0, &mut map, &mut |candidate| {
        if rotation_violation(m, candidate).is_none() {
            found.push(candidate.to_vec());
        }
    });
    Ok(found)
}

fn walk_product(
    candidates: &[Vec<ArrowId>],
    pos: usize,
    map: &mut ArrowMap,
    visit: &mut impl FnMut(&[ArrowId]),
) {
    if pos == candidates.len() {
        visit(map);
        return;
    }
    for &c in &candidates[pos] {
        map[pos] = c;
        walk_product(candidates, pos + 1, map, visit);
    }
}

/// All matched pairs of rotations `(ξ, η)`, filtered from the rotation list.
pub fn enumerate_matched_rotation_pairs(
    m: &MatchedPair,
    max_nodes: usize,
) -> Result<Vec<(ArrowMap, ArrowMap)>> {
    let rotations = enumerate_rotations(m, max_nodes)?;
    let mut out = Vec::new();
    for xi in &rotations {
        for eta in &rotations {
            if matched_rotation_violation(m, xi, eta).is_none() {
                out.push((xi.clone(), eta.clone()));
            }
        }
    }
    Ok(out)
}

/// The canonical matched pair of rotations on a double `D(V,H)`:
/// `ξ(γ, x) = (id_V r(x), x⁻¹)` and `η(γ, x) = (γ, id_H b(γ))`, both landing
/// in `V ⋈ H` through the canonical embeddings of `H` and `V`.
pub fn canonical_double_rotations(d: &GeneralizedDouble) -> (ArrowMap, ArrowMap) {
    let m = &d.morphism.source;
    let v = m.vertical();
    let h = m.horizontal();
    let xi: ArrowMap = d
        .vertical
        .components
        .iter()
        .map(|&(_, x)| {
            d.horizontal_arrow(v.id(h.end(x)), h.inv(x))
                .expect("embedded inverse corner exists")
        })
        .collect();
    let eta: ArrowMap = d
        .vertical
        .components
        .iter()
        .map(|&(gamma, _)| {
            d.horizontal_arrow(gamma, h.id(v.end(gamma)))
                .expect("embedded vertical corner exists")
        })
        .collect();
    (xi, eta)
}

/// `c(e, d) = (η(|e|) ▷ d, (ξ(|d|)⁻¹ ◁ |e|⁻¹) ▷ e)` on carrier elements.
pub fn braid_elements(
    m: &MatchedPair,
    xi: &[ArrowId],
    eta: &[ArrowId],
    e_rep: &Representation,
    d_rep: &Representation,
    e: usize,
    d: usize,
) -> Option<(usize, usize)> {
    let v = m.vertical();
    let h = m.horizontal();
    let ge = e_rep.grade(e);
    let gd = d_rep.grade(d);
    let d2 = d_rep.act(eta[ge.idx()], d)?;
    let tool = m.act_right(h.inv(xi[gd.idx()]), v.inv(ge))?;
    let e2 = e_rep.act(tool, e)?;
    Some((d2, e2))
}

/// Materialize the braiding `E ⊗ D → D ⊗ E` as a representation morphism.
pub fn braiding(
    m: &MatchedPair,
    xi: &[ArrowId],
    eta: &[ArrowId],
    e_rep: &Representation,
    d_rep: &Representation,
) -> Result<RepMap> {
    let ed = tensor(m, e_rep, d_rep);
    let de = tensor(m, d_rep, e_rep);
    ed.pairs
        .iter()
        .map(|&(e, d)| {
            let (d2, e2) = braid_elements(m, xi, eta, e_rep, d_rep, e, d).ok_or_else(|| {
                Error::NoSolution("braiding undefined on a tensor element".into())
            })?;
            de.index
                .get(&(d2, e2))
                .copied()
                .ok_or_else(|| Error::NoSolution("braiding image outside D ⊗ E".into()))
        })
        .collect()
}

/// Certify a braiding over a representation fleet: every component is an
/// isomorphism of representations, naturality holds against the supplied
/// morphisms, both hexagon identities hold in the strict sense, and the
/// unit components are the canonical identifications.
pub fn certify_braiding(
    m: &MatchedPair,
    xi: &[ArrowId],
    eta: &[ArrowId],
    fleet: &[Representation],
    fleet_morphisms: &[(usize, usize, RepMap)],
) -> ValidationReport {
    let mut report = ValidationReport::new("braiding");
    if let Some(w) = matched_rotation_violation(m, xi, eta) {
        report.record("rotation-pair", w);
        return report;
    }

    // (i) Each c_{E,D} is a bijective morphism of representations.
    for (i, e_rep) in fleet.iter().enumerate() {
        for (j, d_rep) in fleet.iter().enumerate() {
            let ed = tensor(m, e_rep, d_rep);
            let de = tensor(m, d_rep, e_rep);
            let map = match braiding(m, xi, eta, e_rep, d_rep) {
                Ok(map) => map,
                Err(e) => {
                    report.record("braiding-total", format!("fleet ({i}, {j}): {e}"));
                    continue;
                }
            };
            let check = validate_rep_morphism(m, &ed.rep, &de.rep, &map);
            if !check.is_ok() {
                report.record("braiding-morphism", format!("fleet ({i}, {j}): {check}"));
            }
            let mut seen = vec![false; de.rep.len()];
            let mut bij = map.len() == de.rep.len();
            for &t in &map {
                if seen[t] {
                    bij = false;
                }
                seen[t] = true;
            }
            if !bij {
                report.record("braiding-iso", format!("fleet ({i}, {j})"));
            }
        }
    }

    // (ii) Naturality in both arguments against the fleet morphisms.
    for &(from, to, ref psi) in fleet_morphisms {
        let (a, b) = (&fleet[from], &fleet[to]);
        for (j, d_rep) in fleet.iter().enumerate() {
            // First argument: c_{B,D} ∘ (ψ ⊗ id) = (id ⊗ ψ) ∘ c_{A,D}.
            let ad = tensor(m, a, d_rep);
            for &(e, d) in &ad.pairs {
                let lhs = braid_elements(m, xi, eta, b, d_rep, psi[e], d);
                let rhs = braid_elements(m, xi, eta, a, d_rep, e, d).map(|(d2, e2)| (d2, psi[e2]));
                if lhs != rhs || lhs.is_none() {
                    report.record(
                        "naturality-first",
                        format!("morphism {from}→{to}, fleet {j}, element ({e},{d})"),
                    );
                }
            }
            // Second argument: c_{D,B} ∘ (id ⊗ ψ) = (ψ ⊗ id) ∘ c_{D,A}.
            let da = tensor(m, d_rep, a);
            for &(d, e) in &da.pairs {
                let lhs = braid_elements(m, xi, eta, d_rep, b, d, psi[e]);
                let rhs = braid_elements(m, xi, eta, d_rep, a, d, e).map(|(e2, d2)| (psi[e2], d2));
                if lhs != rhs || lhs.is_none() {
                    report.record(
                        "naturality-second",
                        format!("morphism {from}→{to}, fleet {j}, element ({d},{e})"),
                    );
                }
            }
        }
    }

    // (iii) Both hexagons, on flattened triples.
    for e_rep in fleet {
        for d_rep in fleet {
            for f_rep in fleet {
                hexagons(m, xi, eta, e_rep, d_rep, f_rep, &mut report);
            }
        }
    }

    // (iv) Unit triviality: c_{1,D}(P, d) = (d, q(d)) and c_{D,1}(d, Q) = (p(d), d).
    let unit = crate::rep::unit_rep(m);
    for d_rep in fleet {
        let ud = tensor(m, &unit, d_rep);
        for &(p, d) in &ud.pairs {
            let got = braid_elements(m, xi, eta, &unit, d_rep, p, d);
            let want = Some((d, d_rep.q(m, d).idx()));
            if got != want {
                report.record("unit-left", format!("element ({p},{d})"));
            }
        }
        let du = tensor(m, d_rep, &unit);
        for &(d, q) in &du.pairs {
            let got = braid_elements(m, xi, eta, d_rep, &unit, d, q);
            let want = Some((d_rep.p(m, d).idx(), d));
            if got != want {
                report.record("unit-right", format!("element ({d},{q})"));
            }
        }
    }

    report
}

fn hexagons(
    m: &MatchedPair,
    xi: &[ArrowId],
    eta: &[ArrowId],
    e_rep: &Representation,
    d_rep: &Representation,
    f_rep: &Representation,
    report: &mut ValidationReport,
) {
    let v = m.vertical();
    let df = tensor(m, d_rep, f_rep);
    let ed = tensor(m, e_rep, d_rep);
    let ef = tensor(m, e_rep, f_rep);
    // Hexagon 1: c_{E, D⊗F} = (id_D ⊗ c_{E,F}) ∘ (c_{E,D} ⊗ id_F).
    for e in 0..e_rep.len() {
        for &(d, f) in &df.pairs {
            if v.end(e_rep.grade(e)) != v.src(d_rep.grade(d)) {
                continue;
            }
            let dfi = df.index[&(d, f)];
            let lhs = braid_elements(m, xi, eta, e_rep, &df.rep, e, dfi)
                .map(|(dfo, eo)| (df.pairs[dfo].0, df.pairs[dfo].1, eo));
            let rhs = braid_elements(m, xi, eta, e_rep, d_rep, e, d).and_then(|(d1, e1)| {
                braid_elements(m, xi, eta, e_rep, f_rep, e1, f).map(|(f1, e2)| (d1, f1, e2))
            });
            if lhs != rhs || lhs.is_none() {
                report.record("hexagon-one", format!("({e},{d},{f})"));
            }
        }
    }
    // Hexagon 2: c_{E⊗D, F} = (c_{E,F} ⊗ id_D) ∘ (id_E ⊗ c_{D,F}).
    for &(e, d) in &ed.pairs {
        for f in 0..f_rep.len() {
            if v.end(d_rep.grade(d)) != v.src(f_rep.grade(f)) {
                continue;
            }
            let edi = ed.index[&(e, d)];
            let lhs = braid_elements(m, xi, eta, &ed.rep, f_rep, edi, f)
                .map(|(fo, edo)| (fo, ed.pairs[edo].0, ed.pairs[edo].1));
            let rhs = braid_elements(m, xi, eta, d_rep, f_rep, d, f).and_then(|(f1, d1)| {
                braid_elements(m, xi, eta, e_rep, f_rep, e, f1).map(|(f2, e1)| (f2, e1, d1))
            });
            if lhs != rhs || lhs.is_none() {
                report.record("hexagon-two", format!("({e},{d},{f})"));
            }
        }
    }
    let _ = ef;
}
