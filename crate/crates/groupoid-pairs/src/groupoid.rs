//! Finite groupoids as validated, table-driven values.
//!
//! A groupoid is stored as dense integer ids with full lookup tables: source
//! and end maps, a `|arrows|²` composition table with `None` for "undefined",
//! an identity arrow per object and an inverse per arrow. Composition is
//! written left to right: `compose(f, g) = fg`, defined exactly when
//! `end(f) = src(g)`, with `src(fg) = src(f)` and `end(fg) = end(g)`.
//!
//! Values are immutable after construction. [`FiniteGroupoid::from_parts`]
//! performs no checking so that corrupt tables can be built and then
//! diagnosed by [`FiniteGroupoid::validate`]; every other constructor
//! produces lawful tables.

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Dense object identifier, unique within one groupoid.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjId(pub u32);

/// Dense arrow identifier, unique within one groupoid.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArrowId(pub u32);

impl ObjId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArrowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An arrow map `G → K` stored by source arrow id. Validity (being a
/// morphism over the common base) is checked by [`validate_arrow_map`].
pub type ArrowMap = Vec<ArrowId>;

#[derive(Clone, Debug)]
pub struct FiniteGroupoid {
    object_labels: Vec<String>,
    arrow_labels: Vec<String>,
    src: Vec<ObjId>,
    end: Vec<ObjId>,
    /// Row-major `|arrows|²` table; `comp[f * n + g] = fg` or `None`.
    comp: Vec<Option<ArrowId>>,
    identity: Vec<ArrowId>,
    inverse: Vec<ArrowId>,
}

/// Table equality: labels are presentation metadata and do not participate.
impl PartialEq for FiniteGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.object_labels.len() == other.object_labels.len()
            && self.src == other.src
            && self.end == other.end
            && self.comp == other.comp
            && self.identity == other.identity
            && self.inverse == other.inverse
    }
}
impl Eq for FiniteGroupoid {}

impl FiniteGroupoid {
    /// Assemble a groupoid from raw tables without checking any law.
    /// Pair with [`FiniteGroupoid::validate`].
    pub fn from_parts(
        object_labels: Vec<String>,
        arrow_labels: Vec<String>,
        src: Vec<ObjId>,
        end: Vec<ObjId>,
        comp: Vec<Option<ArrowId>>,
        identity: Vec<ArrowId>,
        inverse: Vec<ArrowId>,
    ) -> Self {
        FiniteGroupoid {
            object_labels,
            arrow_labels,
            src,
            end,
            comp,
            identity,
            inverse,
        }
    }

    /// The discrete groupoid on the given objects: identity arrows only.
    pub fn discrete(object_labels: &[&str]) -> Result<Self> {
        if object_labels.is_empty() {
            return Err(Error::EmptyObjectSet);
        }
        let n = object_labels.len();
        let mut comp = vec![None; n * n];
        for i in 0..n {
            comp[i * n + i] = Some(ArrowId(i as u32));
        }
        Ok(FiniteGroupoid {
            object_labels: object_labels.iter().map(|s| s.to_string()).collect(),
            arrow_labels: object_labels.iter().map(|s| format!("id_{s}")).collect(),
            src: (0..n).map(|i| ObjId(i as u32)).collect(),
            end: (0..n).map(|i| ObjId(i as u32)).collect(),
            comp,
            identity: (0..n).map(|i| ArrowId(i as u32)).collect(),
            inverse: (0..n).map(|i| ArrowId(i as u32)).collect(),
        })
    }

    /// The coarse groupoid `P × P`: one arrow `(P,Q)` for every ordered pair,
    /// with `(P,Q)(Q,R) = (P,R)`.
    pub fn coarse(object_labels: &[&str]) -> Result<Self> {
        if object_labels.is_empty() {
            return Err(Error::EmptyObjectSet);
        }
        let n = object_labels.len();
        let arrow = |p: usize, q: usize| ArrowId((p * n + q) as u32);
        let m = n * n;
        let mut comp = vec![None; m * m];
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    comp[arrow(p, q).idx() * m + arrow(q, r).idx()] = Some(arrow(p, r));
                }
            }
        }
        let mut arrow_labels = Vec::with_capacity(m);
        let mut src = Vec::with_capacity(m);
        let mut end = Vec::with_capacity(m);
        let mut inverse = Vec::with_capacity(m);
        for p in 0..n {
            for q in 0..n {
                arrow_labels.push(format!("({},{})", object_labels[p], object_labels[q]));
                src.push(ObjId(p as u32));
                end.push(ObjId(q as u32));
                inverse.push(arrow(q, p));
            }
        }
        Ok(FiniteGroupoid {
            object_labels: object_labels.iter().map(|s| s.to_string()).collect(),
            arrow_labels,
            src,
            end,
            comp,
            identity: (0..n).map(|p| arrow(p, p)).collect(),
            inverse,
        })
    }

    /// A one-object groupoid (a group) from a multiplication table
    /// `table[f][g] = fg`. Element 0 must be the unit.
    pub fn one_object(
        object_label: &str,
        element_labels: &[&str],
        table: &[Vec<usize>],
    ) -> Result<Self> {
        let n = element_labels.len();
        if n == 0 {
            return Err(Error::EmptyObjectSet);
        }
        let mut comp = vec![None; n * n];
        let mut inverse = vec![ArrowId(0); n];
        for f in 0..n {
            for g in 0..n {
                let fg = table[f][g];
                if fg >= n {
                    return Err(Error::NotClosed(format!("table entry [{f}][{g}] = {fg}")));
                }
                comp[f * n + g] = Some(ArrowId(fg as u32));
                if fg == 0 {
                    inverse[f] = ArrowId(g as u32);
                }
            }
        }
        Ok(FiniteGroupoid {
            object_labels: vec![object_label.to_string()],
            arrow_labels: element_labels.iter().map(|s| s.to_string()).collect(),
            src: vec![ObjId(0); n],
            end: vec![ObjId(0); n],
            comp,
            identity: vec![ArrowId(0)],
            inverse,
        })
    }

    #[inline]
    pub fn object_count(&self) -> usize {
        self.object_labels.len()
    }

    #[inline]
    pub fn arrow_count(&self) -> usize {
        self.src.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.object_count() as u32).map(ObjId)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrow_count() as u32).map(ArrowId)
    }

    #[inline]
    pub fn src(&self, a: ArrowId) -> ObjId {
        self.src[a.idx()]
    }

    #[inline]
    pub fn end(&self, a: ArrowId) -> ObjId {
        self.end[a.idx()]
    }

    /// `fg`, defined exactly when `end(f) = src(g)`.
    #[inline]
    pub fn compose(&self, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        self.comp[f.idx() * self.arrow_count() + g.idx()]
    }

    /// Compose a nonempty chain left to right, `None` if any step is undefined.
    pub fn compose_chain(&self, arrows: &[ArrowId]) -> Option<ArrowId> {
        let (&first, rest) = arrows.split_first()?;
        rest.iter().try_fold(first, |acc, &a| self.compose(acc, a))
    }

    #[inline]
    pub fn id(&self, p: ObjId) -> ArrowId {
        self.identity[p.idx()]
    }

    #[inline]
    pub fn inv(&self, a: ArrowId) -> ArrowId {
        self.inverse[a.idx()]
    }

    pub fn is_identity(&self, a: ArrowId) -> bool {
        self.identity[self.src(a).idx()] == a && self.src(a) == self.end(a)
    }

    pub fn label(&self, a: ArrowId) -> &str {
        &self.arrow_labels[a.idx()]
    }

    pub fn object_label(&self, p: ObjId) -> &str {
        &self.object_labels[p.idx()]
    }

    pub fn object_labels(&self) -> &[String] {
        &self.object_labels
    }

    pub fn arrow_labels(&self) -> &[String] {
        &self.arrow_labels
    }

    /// Arrows of the hom-set `G(P,Q)`.
    pub fn hom(&self, p: ObjId, q: ObjId) -> Vec<ArrowId> {
        self.arrows()
            .filter(|&a| self.src(a) == p && self.end(a) == q)
            .collect()
    }

    /// Copy with one composition entry overwritten. Produces a corrupt table
    /// on purpose, for exercising the validator; never used by constructors.
    pub fn with_comp_entry(&self, f: ArrowId, g: ArrowId, value: Option<ArrowId>) -> Self {
        let mut out = self.clone();
        let n = out.arrow_count();
        out.comp[f.idx() * n + g.idx()] = value;
        out
    }

    /// Check every groupoid law over the full tables and report violations.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("groupoid");
        let n = self.arrow_count();
        if self.object_count() == 0 {
            report.record("nonempty-base", "object set is empty");
            return report;
        }
        if self.end.len() != n || self.comp.len() != n * n || self.inverse.len() != n {
            report.record(
                "table-shape",
                "src/end/comp/inv tables have inconsistent sizes",
            );
            return report;
        }
        if self.identity.len() != self.object_count() {
            report.record("table-shape", "identity table does not cover the base");
            return report;
        }

        // Domain of definition: comp(f,g) defined iff end(f) = src(g).
        for f in self.arrows() {
            for g in self.arrows() {
                let defined = self.compose(f, g);
                let composable = self.end(f) == self.src(g);
                match (defined, composable) {
                    (Some(_), false) => report.record(
                        "composition-domain",
                        format!(
                            "({}, {}) composed despite end≠src",
                            self.label(f),
                            self.label(g)
                        ),
                    ),
                    (None, true) => report.record(
                        "composition-domain",
                        format!(
                            "({}, {}) composable but undefined",
                            self.label(f),
                            self.label(g)
                        ),
                    ),
                    (Some(fg), true) => {
                        if self.src(fg) != self.src(f) || self.end(fg) != self.end(g) {
                            report.record(
                                "composition-endpoints",
                                format!(
                                    "src/end of {}·{} = {} disagree with factors",
                                    self.label(f),
                                    self.label(g),
                                    self.label(fg)
                                ),
                            );
                        }
                    }
                    (None, false) => {}
                }
            }
        }

        // Associativity on every composable triple.
        for f in self.arrows() {
            for g in self.arrows() {
                if self.end(f) != self.src(g) {
                    continue;
                }
                for h in self.arrows() {
                    if self.end(g) != self.src(h) {
                        continue;
                    }
                    let left = self.compose(f, g).and_then(|fg| self.compose(fg, h));
                    let right = self.compose(g, h).and_then(|gh| self.compose(f, gh));
                    if left != right || left.is_none() {
                        report.record(
                            "associativity",
                            format!("({}, {}, {})", self.label(f), self.label(g), self.label(h)),
                        );
                    }
                }
            }
        }

        // Identities: src = end = P and two-sided unit.
        for p in self.objects() {
            let e = self.id(p);
            if e.idx() >= n {
                report.record(
                    "identity",
                    format!("id at {} out of range", self.object_label(p)),
                );
                continue;
            }
            if self.src(e) != p || self.end(e) != p {
                report.record(
                    "identity-endpoints",
                    format!("id at {} has src/end elsewhere", self.object_label(p)),
                );
            }
        }
        for g in self.arrows() {
            let le = self.id(self.src(g));
            let re = self.id(self.end(g));
            if self.compose(le, g) != Some(g) {
                report.record("left-unit", self.label(g).to_string());
            }
            if self.compose(g, re) != Some(g) {
                report.record("right-unit", self.label(g).to_string());
            }
        }

        // Inverses: g·g⁻¹ = id(src g) and g⁻¹·g = id(end g).
        for g in self.arrows() {
            let gi = self.inv(g);
            if gi.idx() >= n {
                report.record("inverse", format!("inv({}) out of range", self.label(g)));
                continue;
            }
            if self.compose(g, gi) != Some(self.id(self.src(g))) {
                report.record("inverse-right", self.label(g).to_string());
            }
            if self.compose(gi, g) != Some(self.id(self.end(g))) {
                report.record("inverse-left", self.label(g).to_string());
            }
        }

        report
    }

    /// The opposite groupoid: sources and ends switched, `f ∘ᵒᵖ g = gf`.
    pub fn opposite(&self) -> Self {
        let n = self.arrow_count();
        let mut comp = vec![None; n * n];
        for f in self.arrows() {
            for g in self.arrows() {
                comp[f.idx() * n + g.idx()] = self.compose(g, f);
            }
        }
        FiniteGroupoid {
            object_labels: self.object_labels.clone(),
            arrow_labels: self.arrow_labels.clone(),
            src: self.end.clone(),
            end: self.src.clone(),
            comp,
            identity: self.identity.clone(),
            inverse: self.inverse.clone(),
        }
    }

    /// A group bundle has `src = end` everywhere.
    pub fn is_group_bundle(&self) -> bool {
        self.arrows().all(|a| self.src(a) == self.end(a))
    }

    /// The isotropy bundle `⊔_P G(P,P)` as a groupoid over the same base,
    /// together with the embedding of its arrows into `self`.
    pub fn isotropy_bundle(&self) -> (FiniteGroupoid, Vec<ArrowId>) {
        let arrows: Vec<ArrowId> = self
            .arrows()
            .filter(|&a| self.src(a) == self.end(a))
            .collect();
        self.wide_subgroupoid(&arrows)
            .expect("isotropy arrows are closed under composition and inverse")
    }

    /// Restrict to a wide subgroupoid on the given arrow subset. The subset
    /// must contain every identity and be closed under composition and
    /// inverse. Returns the subgroupoid (re-indexed densely, in the order
    /// given) and the embedding back into `self`.
    pub fn wide_subgroupoid(&self, arrows: &[ArrowId]) -> Result<(FiniteGroupoid, Vec<ArrowId>)> {
        let mut embed: Vec<ArrowId> = Vec::with_capacity(arrows.len());
        let mut back: HashMap<ArrowId, ArrowId> = HashMap::new();
        for &a in arrows {
            if back.contains_key(&a) {
                continue;
            }
            back.insert(a, ArrowId(embed.len() as u32));
            embed.push(a);
        }
        for p in self.objects() {
            if !back.contains_key(&self.id(p)) {
                return Err(Error::NotClosed(format!(
                    "missing identity at {}",
                    self.object_label(p)
                )));
            }
        }
        let k = embed.len();
        let mut comp = vec![None; k * k];
        for (i, &a) in embed.iter().enumerate() {
            if !back.contains_key(&self.inv(a)) {
                return Err(Error::NotClosed(format!(
                    "missing inverse of {}",
                    self.label(a)
                )));
            }
            for (j, &b) in embed.iter().enumerate() {
                if let Some(ab) = self.compose(a, b) {
                    match back.get(&ab) {
                        Some(&c) => comp[i * k + j] = Some(c),
                        None => {
                            return Err(Error::NotClosed(format!(
                                "product {}·{} leaves the subset",
                                self.label(a),
                                self.label(b)
                            )))
                        }
                    }
                }
            }
        }
        let sub = FiniteGroupoid {
            object_labels: self.object_labels.clone(),
            arrow_labels: embed.iter().map(|&a| self.label(a).to_string()).collect(),
            src: embed.iter().map(|&a| self.src(a)).collect(),
            end: embed.iter().map(|&a| self.end(a)).collect(),
            comp,
            identity: self.objects().map(|p| back[&self.id(p)]).collect(),
            inverse: embed.iter().map(|&a| back[&self.inv(a)]).collect(),
        };
        Ok((sub, embed))
    }

    /// Relabel objects and arrows (presentation only; tables unchanged).
    pub fn with_labels(mut self, object_labels: Vec<String>, arrow_labels: Vec<String>) -> Self {
        assert_eq!(object_labels.len(), self.object_count());
        assert_eq!(arrow_labels.len(), self.arrow_count());
        self.object_labels = object_labels;
        self.arrow_labels = arrow_labels;
        self
    }
}

/// Same-base check used wherever two groupoids must share their base.
pub fn same_base(g: &FiniteGroupoid, k: &FiniteGroupoid) -> bool {
    g.object_count() == k.object_count()
}

/// Validate that `map` is a morphism of groupoids `source → target` over the
/// common base: identities go to identities at the same object and
/// composition is preserved (hence so are src and end).
pub fn validate_arrow_map(
    source: &FiniteGroupoid,
    target: &FiniteGroupoid,
    map: &[ArrowId],
) -> ValidationReport {
    let mut report = ValidationReport::new("groupoid-morphism");
    if !same_base(source, target) {
        report.record("base", "source and target have different bases");
        return report;
    }
    if map.len() != source.arrow_count() {
        report.record("totality", "arrow map does not cover the source");
        return report;
    }
    if let Some(a) = map.iter().find(|a| a.idx() >= target.arrow_count()) {
        report.record("range", format!("image arrow {a} out of range"));
        return report;
    }
    for p in source.objects() {
        if map[source.id(p).idx()] != target.id(p) {
            report.record(
                "over-base",
                format!("id at {} not fixed", source.object_label(p)),
            );
        }
    }
    for a in source.arrows() {
        if source.src(a) != target.src(map[a.idx()]) || source.end(a) != target.end(map[a.idx()]) {
            report.record(
                "endpoints",
                format!("{} ↦ {}", source.label(a), target.label(map[a.idx()])),
            );
        }
    }
    for a in source.arrows() {
        for b in source.arrows() {
            if let Some(ab) = source.compose(a, b) {
                let lhs = Some(map[ab.idx()]);
                let rhs = target.compose(map[a.idx()], map[b.idx()]);
                if lhs != rhs {
                    report.record(
                        "multiplicativity",
                        format!("({}, {})", source.label(a), source.label(b)),
                    );
                }
            }
        }
    }
    report
}

/// Kernel of a morphism over the base: the group bundle of arrows sent to
/// identities, re-indexed, with its embedding into `source`.
pub fn kernel(
    source: &FiniteGroupoid,
    target: &FiniteGroupoid,
    map: &[ArrowId],
) -> Result<(FiniteGroupoid, Vec<ArrowId>)> {
    let check = validate_arrow_map(source, target, map);
    if !check.is_ok() {
        return Err(Error::NotOverBase(format!("{check}")));
    }
    let arrows: Vec<ArrowId> = source
        .arrows()
        .filter(|&a| target.is_identity(map[a.idx()]))
        .collect();
    source.wide_subgroupoid(&arrows)
}

/// Enumerate every morphism of groupoids `source → target` over the common
/// base, by backtracking over arrow images constrained by endpoints and
/// partial multiplicativity. Intended for desk-scale uniqueness arguments.
pub fn enumerate_morphisms(source: &FiniteGroupoid, target: &FiniteGroupoid) -> Vec<ArrowMap> {
    if !same_base(source, target) {
        return Vec::new();
    }
    let n = source.arrow_count();
    let mut assignment: Vec<Option<ArrowId>> = vec![None; n];
    for p in source.objects() {
        assignment[source.id(p).idx()] = Some(target.id(p));
    }
    let free: Vec<ArrowId> = source
        .arrows()
        .filter(|a| assignment[a.idx()].is_none())
        .collect();
    let mut found = Vec::new();
    backtrack_morphism(source, target, &free, 0, &mut assignment, &mut found);
    found
}

fn backtrack_morphism(
    source: &FiniteGroupoid,
    target: &FiniteGroupoid,
    free: &[ArrowId],
    pos: usize,
    assignment: &mut Vec<Option<ArrowId>>,
    found: &mut Vec<ArrowMap>,
) {
    if pos == free.len() {
        let map: ArrowMap = assignment.iter().map(|a| a.unwrap()).collect();
        if validate_arrow_map(source, target, &map).is_ok() {
            found.push(map);
        }
        return;
    }
    let a = free[pos];
    for image in target.hom(source.src(a), source.end(a)) {
        assignment[a.idx()] = Some(image);
        if partial_multiplicative(source, target, assignment) {
            backtrack_morphism(source, target, free, pos + 1, assignment, found);
        }
        assignment[a.idx()] = None;
    }
}

fn partial_multiplicative(
    source: &FiniteGroupoid,
    target: &FiniteGroupoid,
    assignment: &[Option<ArrowId>],
) -> bool {
    for a in source.arrows() {
        let Some(fa) = assignment[a.idx()] else {
            continue;
        };
        for b in source.arrows() {
            let Some(fb) = assignment[b.idx()] else {
                continue;
            };
            if let Some(ab) = source.compose(a, b) {
                if let Some(fab) = assignment[ab.idx()] {
                    if target.compose(fa, fb) != Some(fab) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The restricted product `G ×ₑ K`: pairs of arrows agreeing on source and
/// end, composed componentwise. This is the product in groupoids over the
/// base. Components of each product arrow are retained for later formulas.
pub struct PairProduct {
    pub groupoid: FiniteGroupoid,
    pub components: Vec<(ArrowId, ArrowId)>,
    index: HashMap<(ArrowId, ArrowId), ArrowId>,
}

impl PairProduct {
    pub fn arrow(&self, g: ArrowId, k: ArrowId) -> Option<ArrowId> {
        self.index.get(&(g, k)).copied()
    }
}

pub fn restricted_product(g: &FiniteGroupoid, k: &FiniteGroupoid) -> Result<PairProduct> {
    if !same_base(g, k) {
        return Err(Error::BaseMismatch(format!(
            "restricted product of bases {} and {}",
            g.object_count(),
            k.object_count()
        )));
    }
    let mut components = Vec::new();
    let mut index = HashMap::new();
    for a in g.arrows() {
        for b in k.arrows() {
            if g.src(a) == k.src(b) && g.end(a) == k.end(b) {
                index.insert((a, b), ArrowId(components.len() as u32));
                components.push((a, b));
            }
        }
    }
    let m = components.len();
    let mut comp = vec![None; m * m];
    for (i, &(a1, b1)) in components.iter().enumerate() {
        for (j, &(a2, b2)) in components.iter().enumerate() {
            if let (Some(a), Some(b)) = (g.compose(a1, a2), k.compose(b1, b2)) {
                comp[i * m + j] = index.get(&(a, b)).copied();
            }
        }
    }
    let groupoid = FiniteGroupoid {
        object_labels: g.object_labels.clone(),
        arrow_labels: components
            .iter()
            .map(|&(a, b)| format!("({},{})", g.label(a), k.label(b)))
            .collect(),
        src: components.iter().map(|&(a, _)| g.src(a)).collect(),
        end: components.iter().map(|&(a, _)| g.end(a)).collect(),
        comp,
        identity: g.objects().map(|p| index[&(g.id(p), k.id(p))]).collect(),
        inverse: components
            .iter()
            .map(|&(a, b)| index[&(g.inv(a), k.inv(b))])
            .collect(),
    };
    Ok(PairProduct {
        groupoid,
        components,
        index,
    })
}

/// Small catalogue of concrete groups used by examples and the CLI.
pub mod zoo {
    use super::*;

    /// Cyclic group of order `n` as a one-object groupoid.
    pub fn cyclic(n: usize) -> FiniteGroupoid {
        assert!(n > 0);
        let labels: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteGroupoid::one_object("•", &refs, &table).expect("cyclic table is closed")
    }

    /// The symmetric group S₃ on `{0,1,2}`, with products read left to
    /// right: `(fg)(i) = g(f(i))`. Returns the groupoid together with the
    /// arrow ids of the subgroups ⟨(012)⟩ ≅ C₃ and ⟨(01)⟩ ≅ C₂.
    pub fn symmetric_3() -> (FiniteGroupoid, Vec<ArrowId>, Vec<ArrowId>) {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2], // e
            [1, 2, 0], // (012)
            [2, 0, 1], // (021)
            [1, 0, 2], // (01)
            [0, 2, 1], // (12)
            [2, 1, 0], // (02)
        ];
        let labels = ["e", "(012)", "(021)", "(01)", "(12)", "(02)"];
        let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|f| {
                perms
                    .iter()
                    .map(|g| {
                        let fg = [g[f[0]], g[f[1]], g[f[2]]];
                        index_of(&fg)
                    })
                    .collect()
            })
            .collect();
        let gpd = FiniteGroupoid::one_object("•", &labels, &table).expect("S3 table is closed");
        let c3 = vec![ArrowId(0), ArrowId(1), ArrowId(2)];
        let c2 = vec![ArrowId(0), ArrowId(3)];
        (gpd, c3, c2)
    }

    /// C₆ with its exact factorization C₂ · C₃.
    pub fn cyclic_6_factored() -> (FiniteGroupoid, Vec<ArrowId>, Vec<ArrowId>) {
        let gpd = cyclic(6);
        let c2 = vec![ArrowId(0), ArrowId(3)];
        let c3 = vec![ArrowId(0), ArrowId(2), ArrowId(4)];
        (gpd, c2, c3)
    }

    /// Default object labels `P0, P1, …`.
    pub fn base_labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("P{i}")).collect()
    }
}
