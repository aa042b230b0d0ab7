//! JSON interchange documents and named workspaces.
//!
//! One canonical format for everything: integer ids, arrays of triples for
//! partial tables, canonical key ordering on output (so saved documents are
//! diff-able and `load ∘ save` is the identity byte for byte). Loaders are
//! strict: identities are inferred as arrows with `comp(i,i) = i` and
//! `src = end`, and any document whose inferred structure fails validation
//! is rejected with the full report.

use crate::error::{Error, Result};
use crate::groupoid::{ArrowId, ArrowMap, FiniteGroupoid, ObjId};
use crate::matched_pair::MatchedPair;
use crate::morphism::MatchedPairMorphism;
use crate::rep::Representation;
use crate::report::ValidationReport;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ArrowDoc {
    pub id: u32,
    pub src: u32,
    pub end: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GroupoidDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    /// Defined compositions `[f, g, fg]`.
    pub comp: Vec<[u32; 3]>,
    /// Inverses `[g, g⁻¹]`.
    pub inv: Vec<[u32; 2]>,
}

pub fn groupoid_to_doc(g: &FiniteGroupoid) -> GroupoidDoc {
    let mut comp = Vec::new();
    for f in g.arrows() {
        for h in g.arrows() {
            if let Some(fh) = g.compose(f, h) {
                comp.push([f.0, h.0, fh.0]);
            }
        }
    }
    GroupoidDoc {
        objects: g.object_labels().to_vec(),
        arrows: g
            .arrows()
            .map(|a| ArrowDoc {
                id: a.0,
                src: g.src(a).0,
                end: g.end(a).0,
                label: Some(g.label(a).to_string()),
            })
            .collect(),
        comp,
        inv: g.arrows().map(|a| [a.0, g.inv(a).0]).collect(),
    }
}

/// Strict loader: checks shape, infers identities, validates every law.
pub fn groupoid_from_doc(doc: &GroupoidDoc) -> Result<FiniteGroupoid> {
    let n_obj = doc.objects.len();
    let n = doc.arrows.len();
    if n_obj == 0 {
        return Err(Error::InvalidDocument("empty object list".into()));
    }
    for (i, a) in doc.arrows.iter().enumerate() {
        if a.id as usize != i {
            return Err(Error::InvalidDocument(format!(
                "arrow ids must be dense and ordered; found {} at position {i}",
                a.id
            )));
        }
        if a.src as usize >= n_obj || a.end as usize >= n_obj {
            return Err(Error::InvalidDocument(format!(
                "arrow {} has out-of-range endpoints",
                a.id
            )));
        }
    }
    let mut comp = vec![None; n * n];
    for &[f, g, fg] in &doc.comp {
        if f as usize >= n || g as usize >= n || fg as usize >= n {
            return Err(Error::InvalidDocument(format!(
                "composition entry [{f}, {g}, {fg}] out of range"
            )));
        }
        comp[f as usize * n + g as usize] = Some(ArrowId(fg));
    }
    let mut inv = vec![None; n];
    for &[g, gi] in &doc.inv {
        if g as usize >= n || gi as usize >= n {
            return Err(Error::InvalidDocument(format!(
                "inverse entry [{g}, {gi}] out of range"
            )));
        }
        inv[g as usize] = Some(ArrowId(gi));
    }
    let inv: Vec<ArrowId> = inv
        .into_iter()
        .enumerate()
        .map(|(g, v)| v.ok_or_else(|| Error::InvalidDocument(format!("missing inverse of {g}"))))
        .collect::<Result<_>>()?;

    // Infer identities: arrows with src = end and comp(i, i) = i, acting as
    // two-sided units; exactly one per object.
    let mut identity = Vec::with_capacity(n_obj);
    let mut report = ValidationReport::new("identity-inference");
    for p in 0..n_obj {
        let candidates: Vec<u32> = doc
            .arrows
            .iter()
            .filter(|a| {
                a.src == p as u32
                    && a.end == p as u32
                    && comp[a.id as usize * n + a.id as usize] == Some(ArrowId(a.id))
            })
            .filter(|a| {
                doc.arrows.iter().all(|b| {
                    (b.end != p as u32
                        || comp[b.id as usize * n + a.id as usize] == Some(ArrowId(b.id)))
                        && (b.src != p as u32
                            || comp[a.id as usize * n + b.id as usize] == Some(ArrowId(b.id)))
                })
            })
            .map(|a| a.id)
            .collect();
        match candidates.as_slice() {
            [one] => identity.push(ArrowId(*one)),
            [] => report.record("identity-missing", doc.objects[p].clone()),
            _ => report.record("identity-ambiguous", doc.objects[p].clone()),
        }
    }
    if !report.is_ok() {
        return Err(Error::FailedValidation(report));
    }
    let g = FiniteGroupoid::from_parts(
        doc.objects.clone(),
        doc.arrows
            .iter()
            .map(|a| a.label.clone().unwrap_or_else(|| format!("a{}", a.id)))
            .collect(),
        doc.arrows.iter().map(|a| ObjId(a.src)).collect(),
        doc.arrows.iter().map(|a| ObjId(a.end)).collect(),
        comp,
        identity,
        inv,
    );
    let report = g.validate();
    if !report.is_ok() {
        return Err(Error::FailedValidation(report));
    }
    Ok(g)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatchedPairDoc {
    pub vertical: GroupoidDoc,
    pub horizontal: GroupoidDoc,
    /// Triples `[x, g, x ▷ g]` over all composable pairs.
    pub act_left: Vec<[u32; 3]>,
    /// Triples `[x, g, x ◁ g]` over all composable pairs.
    pub act_right: Vec<[u32; 3]>,
}

pub fn pair_to_doc(m: &MatchedPair) -> MatchedPairDoc {
    let mut act_left = Vec::new();
    let mut act_right = Vec::new();
    for &c in m.cells() {
        act_left.push([c.top.0, c.right.0, m.cell_left(c).0]);
        act_right.push([c.top.0, c.right.0, m.cell_bottom(c).0]);
    }
    MatchedPairDoc {
        vertical: groupoid_to_doc(m.vertical()),
        horizontal: groupoid_to_doc(m.horizontal()),
        act_left,
        act_right,
    }
}

/// Strict loader: loads both groupoids, cross-validates the action domains,
/// then runs the full matched-pair validation.
pub fn pair_from_doc(doc: &MatchedPairDoc) -> Result<MatchedPair> {
    let vertical = groupoid_from_doc(&doc.vertical)?;
    let horizontal = groupoid_from_doc(&doc.horizontal)?;
    if doc.vertical.objects != doc.horizontal.objects {
        return Err(Error::BaseMismatch(
            "vertical and horizontal documents list different bases".into(),
        ));
    }
    let nv = vertical.arrow_count();
    let nh = horizontal.arrow_count();
    let mut left = vec![None; nh * nv];
    let mut right = vec![None; nh * nv];
    for &[x, g, v] in &doc.act_left {
        if x as usize >= nh || g as usize >= nv || v as usize >= nv {
            return Err(Error::InvalidDocument(format!(
                "act_left entry [{x}, {g}, {v}] out of range"
            )));
        }
        left[x as usize * nv + g as usize] = Some(ArrowId(v));
    }
    for &[x, g, h] in &doc.act_right {
        if x as usize >= nh || g as usize >= nv || h as usize >= nh {
            return Err(Error::InvalidDocument(format!(
                "act_right entry [{x}, {g}, {h}] out of range"
            )));
        }
        right[x as usize * nv + g as usize] = Some(ArrowId(h));
    }
    // Domains must be exactly the composable pairs.
    let mut report = ValidationReport::new("action-domain");
    for x in horizontal.arrows() {
        for g in vertical.arrows() {
            let composable = horizontal.end(x) == vertical.src(g);
            let defined =
                left[x.idx() * nv + g.idx()].is_some() && right[x.idx() * nv + g.idx()].is_some();
            if composable != defined {
                report.record(
                    "action-domain",
                    format!("({}, {})", horizontal.label(x), vertical.label(g)),
                );
            }
        }
    }
    if !report.is_ok() {
        return Err(Error::FailedValidation(report));
    }
    let m = MatchedPair::from_actions(vertical, horizontal, |x, g| {
        (
            left[x.idx() * nv + g.idx()].unwrap(),
            right[x.idx() * nv + g.idx()].unwrap(),
        )
    })?;
    let report = m.validate();
    if !report.is_ok() {
        return Err(Error::FailedValidation(report));
    }
    Ok(m)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MorphismDoc {
    pub source: String,
    pub target: String,
    /// Pairs `[h, α(h)]`.
    pub alpha: Vec<[u32; 2]>,
    /// Pairs `[g, β(g)]` (contravariant: `g` ranges over the target's `V`).
    pub beta: Vec<[u32; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RepresentationDoc {
    pub pair: String,
    pub carrier: Vec<String>,
    /// `grading[e]` = vertical arrow id of `|e|`.
    pub grading: Vec<u32>,
    /// Triples `[x, e, x ▷ e]`.
    pub action: Vec<[u32; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RotationPairDoc {
    pub pair: String,
    /// Pairs `[g, ξ(g)]`.
    pub xi: Vec<[u32; 2]>,
    /// Pairs `[g, η(g)]`.
    pub eta: Vec<[u32; 2]>,
}

/// A named workspace of cross-referencing structures.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct WorkspaceDoc {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groupoids: BTreeMap<String, GroupoidDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matched_pairs: BTreeMap<String, MatchedPairDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representations: BTreeMap<String, RepresentationDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub rotation_pairs: BTreeMap<String, RotationPairDoc>,
}

/// A loaded, fully re-validated workspace.
pub struct Workspace {
    pub groupoids: BTreeMap<String, FiniteGroupoid>,
    pub matched_pairs: BTreeMap<String, MatchedPair>,
    pub morphisms: BTreeMap<String, MatchedPairMorphism>,
    pub representations: BTreeMap<String, (String, Representation)>,
    pub rotation_pairs: BTreeMap<String, (String, ArrowMap, ArrowMap)>,
}

fn arrow_map_from_pairs(pairs: &[[u32; 2]], domain: usize, range: usize) -> Result<ArrowMap> {
    let mut map = vec![None; domain];
    for &[a, b] in pairs {
        if a as usize >= domain || b as usize >= range {
            return Err(Error::InvalidDocument(format!(
                "map entry [{a}, {b}] out of range"
            )));
        }
        map[a as usize] = Some(ArrowId(b));
    }
    map.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::InvalidDocument(format!("map misses arrow {i}"))))
        .collect()
}

pub fn arrow_map_to_pairs(map: &[ArrowId]) -> Vec<[u32; 2]> {
    map.iter()
        .enumerate()
        .map(|(i, a)| [i as u32, a.0])
        .collect()
}

/// Load a workspace document: every structure is re-validated and every
/// cross-reference resolved; dangling names are rejected.
pub fn workspace_from_doc(doc: &WorkspaceDoc) -> Result<Workspace> {
    let mut groupoids = BTreeMap::new();
    for (name, gdoc) in &doc.groupoids {
        groupoids.insert(name.clone(), groupoid_from_doc(gdoc)?);
    }
    let mut matched_pairs = BTreeMap::new();
    for (name, pdoc) in &doc.matched_pairs {
        matched_pairs.insert(name.clone(), pair_from_doc(pdoc)?);
    }
    let mut morphisms = BTreeMap::new();
    for (name, mdoc) in &doc.morphisms {
        let source = matched_pairs
            .get(&mdoc.source)
            .ok_or_else(|| Error::InvalidDocument(format!("unknown pair {}", mdoc.source)))?;
        let target = matched_pairs
            .get(&mdoc.target)
            .ok_or_else(|| Error::InvalidDocument(format!("unknown pair {}", mdoc.target)))?;
        let alpha = arrow_map_from_pairs(
            &mdoc.alpha,
            source.horizontal().arrow_count(),
            target.horizontal().arrow_count(),
        )?;
        let beta = arrow_map_from_pairs(
            &mdoc.beta,
            target.vertical().arrow_count(),
            source.vertical().arrow_count(),
        )?;
        let mor = MatchedPairMorphism {
            source: source.clone(),
            target: target.clone(),
            alpha,
            beta,
        };
        let report = mor.validate();
        if !report.is_ok() {
            return Err(Error::FailedValidation(report));
        }
        morphisms.insert(name.clone(), mor);
    }
    let mut representations = BTreeMap::new();
    for (name, rdoc) in &doc.representations {
        let pair = matched_pairs
            .get(&rdoc.pair)
            .ok_or_else(|| Error::InvalidDocument(format!("unknown pair {}", rdoc.pair)))?;
        let n = rdoc.carrier.len();
        if rdoc.grading.len() != n {
            return Err(Error::InvalidDocument(format!(
                "representation {name}: grading does not cover the carrier"
            )));
        }
        let nv = pair.vertical().arrow_count();
        if let Some(&g) = rdoc.grading.iter().find(|&&g| g as usize >= nv) {
            return Err(Error::InvalidDocument(format!(
                "representation {name}: grade {g} out of range"
            )));
        }
        let nh = pair.horizontal().arrow_count();
        let mut table = vec![None; nh * n];
        for &[x, e, xe] in &rdoc.action {
            if x as usize >= nh || e as usize >= n || xe as usize >= n {
                return Err(Error::InvalidDocument(format!(
                    "representation {name}: action entry out of range"
                )));
            }
            table[x as usize * n + e as usize] = Some(xe as usize);
        }
        let rep = Representation::new(
            rdoc.carrier.clone(),
            rdoc.grading.iter().map(|&g| ArrowId(g)).collect(),
            nh,
            |x, e| table[x.idx() * n + e],
        );
        let report = crate::rep::validate_representation(pair, &rep);
        if !report.is_ok() {
            return Err(Error::FailedValidation(report));
        }
        representations.insert(name.clone(), (rdoc.pair.clone(), rep));
    }
    let mut rotation_pairs = BTreeMap::new();
    for (name, rdoc) in &doc.rotation_pairs {
        let pair = matched_pairs
            .get(&rdoc.pair)
            .ok_or_else(|| Error::InvalidDocument(format!("unknown pair {}", rdoc.pair)))?;
        let nv = pair.vertical().arrow_count();
        let nh = pair.horizontal().arrow_count();
        let xi = arrow_map_from_pairs(&rdoc.xi, nv, nh)?;
        let eta = arrow_map_from_pairs(&rdoc.eta, nv, nh)?;
        if let Some(w) = crate::rotation::matched_rotation_violation(pair, &xi, &eta) {
            let mut report = ValidationReport::new("rotation-pair");
            report.record("matched-rotations", w);
            return Err(Error::FailedValidation(report));
        }
        rotation_pairs.insert(name.clone(), (rdoc.pair.clone(), xi, eta));
    }
    Ok(Workspace {
        groupoids,
        matched_pairs,
        morphisms,
        representations,
        rotation_pairs,
    })
}

/// Canonical JSON text: keys sorted (via `serde_json::Value`), compact or
/// pretty. `load ∘ save` is the identity on canonical documents.
pub fn to_canonical_json<T: Serialize>(value: &T, pretty: bool) -> Result<String> {
    let v = serde_json::to_value(value)?;
    let mut s = if pretty {
        serde_json::to_string_pretty(&v)?
    } else {
        serde_json::to_string(&v)?
    };
    s.push('\n');
    Ok(s)
}

/// Parse either a bare matched-pair document or a workspace containing
/// matched pairs; returns the named pairs.
pub fn pairs_from_json(text: &str) -> Result<Vec<(String, MatchedPair)>> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("vertical").is_some() {
        let doc: MatchedPairDoc = serde_json::from_value(value)?;
        return Ok(vec![("main".to_string(), pair_from_doc(&doc)?)]);
    }
    let doc: WorkspaceDoc = serde_json::from_value(value)?;
    let ws = workspace_from_doc(&doc)?;
    Ok(ws.matched_pairs.into_iter().collect())
}
