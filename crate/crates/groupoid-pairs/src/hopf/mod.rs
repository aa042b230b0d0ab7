//! The weak Hopf algebra `k(V,H)` of a matched pair, over exact rationals.
//!
//! The basis is the set of cells. Multiplication is horizontal composition
//! (zero when undefined), the unit is `Σ_g I_H(g)`, comultiplication sums
//! over vertical two-factorizations, the counit is supported on the
//! vertical units `I_V(x)`, and the antipode sends a cell to its inverse
//! cell. All weak bialgebra and antipode axioms are certified exhaustively
//! as exact structure-constant identities, never assumed; the construction
//! turns out involutory (`S² = id`), and this too is verified rather than
//! postulated.

pub mod drinfeld;
pub mod element;
pub mod rmatrix;

use crate::matched_pair::{Cell, MatchedPair};
use crate::morphism::MatchedPairMorphism;
use crate::rep::Representation;
use crate::report::ValidationReport;
use element::{AlgebraElement, Rat, Sparse, TensorElement, TripleElement};
use num_traits::{One, Zero};

#[derive(Clone)]
pub struct WeakHopfAlgebra {
    pair: MatchedPair,
    dim: usize,
    /// `i * dim + j` → horizontal composition of cells, `None` = 0.
    product: Vec<Option<usize>>,
    /// Vertical two-factorizations of each basis cell.
    factorizations: Vec<Vec<(usize, usize)>>,
    counit_support: Vec<bool>,
    antipode: Vec<usize>,
    unit_support: Vec<usize>,
}

impl WeakHopfAlgebra {
    pub fn build(m: &MatchedPair) -> WeakHopfAlgebra {
        let dim = m.cell_count();
        let v = m.vertical();
        let mut product = vec![None; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                product[i * dim + j] = m
                    .horizontal_compose(m.cell_at(i), m.cell_at(j))
                    .and_then(|c| m.cell_index(c));
            }
        }
        // Δ(x, g) = Σ_{g₁g₂ = g, t(g₁) = t(g)} (x, g₁) ⊗ (x ◁ g₁, g₂).
        let mut factorizations: Vec<Vec<(usize, usize)>> = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut fact = Vec::new();
            let c = m.cell_at(i);
            for g1 in v.arrows() {
                if v.src(g1) != v.src(c.right) {
                    continue;
                }
                let g2 = v
                    .compose(v.inv(g1), c.right)
                    .expect("t(g₁) = t(g) makes g₁⁻¹g defined");
                let b = Cell {
                    top: c.top,
                    right: g1,
                };
                let bq = m.cell_bottom(b);
                let cc = Cell { top: bq, right: g2 };
                fact.push((
                    m.cell_index(b).expect("r(x) = t(g₁)"),
                    m.cell_index(cc).expect("r(x ◁ g₁) = b(g₁) = t(g₂)"),
                ));
            }
            factorizations.push(fact);
        }
        let counit_support = (0..dim)
            .map(|i| {
                let c = m.cell_at(i);
                v.is_identity(c.right)
            })
            .collect();
        let antipode = (0..dim)
            .map(|i| {
                m.cell_index(m.cell_inverse(m.cell_at(i)))
                    .expect("inverse cell is a cell")
            })
            .collect();
        let unit_support = (0..dim)
            .filter(|&i| {
                let c = m.cell_at(i);
                m.horizontal().is_identity(c.top)
            })
            .collect();
        WeakHopfAlgebra {
            pair: m.clone(),
            dim,
            product,
            factorizations,
            counit_support,
            antipode,
            unit_support,
        }
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_label(&self, i: usize) -> String {
        self.pair.describe_cell(self.pair.cell_at(i))
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        self.product[i * self.dim + j]
    }

    pub fn unit(&self) -> AlgebraElement {
        let mut u = AlgebraElement::zero();
        for &i in &self.unit_support {
            u.add_term(i, Rat::one());
        }
        u
    }

    /// `𝟏_P = Σ_{b(g) = P} I_H(g)`: the source-subalgebra idempotent at `P`.
    pub fn one_source(&self, p: crate::ObjId) -> AlgebraElement {
        let v = self.pair.vertical();
        let mut u = AlgebraElement::zero();
        for &i in &self.unit_support {
            if v.end(self.pair.cell_at(i).right) == p {
                u.add_term(i, Rat::one());
            }
        }
        u
    }

    /// `𝟏^P = Σ_{t(g) = P} I_H(g)`: the target-subalgebra idempotent at `P`.
    pub fn one_target(&self, p: crate::ObjId) -> AlgebraElement {
        let v = self.pair.vertical();
        let mut u = AlgebraElement::zero();
        for &i in &self.unit_support {
            if v.src(self.pair.cell_at(i).right) == p {
                u.add_term(i, Rat::one());
            }
        }
        u
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&i, &ci) in a.iter() {
            for (&j, &cj) in b.iter() {
                if let Some(k) = self.mul_basis(i, j) {
                    out.add_term(k, ci * cj);
                }
            }
        }
        out
    }

    pub fn delta_basis(&self, i: usize) -> &[(usize, usize)] {
        &self.factorizations[i]
    }

    pub fn delta(&self, a: &AlgebraElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (&i, &c) in a.iter() {
            for &(b1, b2) in &self.factorizations[i] {
                out.add_term((b1, b2), c);
            }
        }
        out
    }

    pub fn delta_cop(&self, a: &AlgebraElement) -> TensorElement {
        flip(&self.delta(a))
    }

    pub fn delta_one(&self) -> TensorElement {
        self.delta(&self.unit())
    }

    pub fn counit(&self, a: &AlgebraElement) -> Rat {
        let mut out = Rat::zero();
        for (&i, &c) in a.iter() {
            if self.counit_support[i] {
                out += c;
            }
        }
        out
    }

    pub fn antipode_basis(&self, i: usize) -> usize {
        self.antipode[i]
    }

    pub fn antipode(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&i, &c) in a.iter() {
            out.add_term(self.antipode[i], c);
        }
        out
    }

    /// `ε_s(h) = Σ ε(h·u₂) u₁` over `Δ(1) = Σ u₁ ⊗ u₂`.
    pub fn eps_s(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&(u1, u2), &c) in self.delta_one().iter() {
            let mut h_u2 = AlgebraElement::zero();
            for (&i, &ci) in a.iter() {
                if let Some(k) = self.mul_basis(i, u2) {
                    h_u2.add_term(k, ci);
                }
            }
            out.add_term(u1, c * self.counit(&h_u2));
        }
        out
    }

    /// `ε_e(h) = Σ ε(u₁·h) u₂` over `Δ(1)`.
    pub fn eps_e(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&(u1, u2), &c) in self.delta_one().iter() {
            let mut u1_h = AlgebraElement::zero();
            for (&i, &ci) in a.iter() {
                if let Some(k) = self.mul_basis(u1, i) {
                    u1_h.add_term(k, ci);
                }
            }
            out.add_term(u2, c * self.counit(&u1_h));
        }
        out
    }

    pub fn mul_tensor(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (&(a1, a2), &ca) in a.iter() {
            for (&(b1, b2), &cb) in b.iter() {
                if let (Some(p1), Some(p2)) = (self.mul_basis(a1, b1), self.mul_basis(a2, b2)) {
                    out.add_term((p1, p2), ca * cb);
                }
            }
        }
        out
    }

    pub fn mul_triple(&self, a: &TripleElement, b: &TripleElement) -> TripleElement {
        let mut out = TripleElement::zero();
        for (&(a1, a2, a3), &ca) in a.iter() {
            for (&(b1, b2, b3), &cb) in b.iter() {
                if let (Some(p1), Some(p2), Some(p3)) = (
                    self.mul_basis(a1, b1),
                    self.mul_basis(a2, b2),
                    self.mul_basis(a3, b3),
                ) {
                    out.add_term((p1, p2, p3), ca * cb);
                }
            }
        }
        out
    }

    /// `(Δ ⊗ id)(t)`.
    pub fn delta_first(&self, t: &TensorElement) -> TripleElement {
        let mut out = TripleElement::zero();
        for (&(i, j), &c) in t.iter() {
            for &(b1, b2) in &self.factorizations[i] {
                out.add_term((b1, b2, j), c);
            }
        }
        out
    }

    /// `(id ⊗ Δ)(t)`.
    pub fn delta_second(&self, t: &TensorElement) -> TripleElement {
        let mut out = TripleElement::zero();
        for (&(i, j), &c) in t.iter() {
            for &(b1, b2) in &self.factorizations[j] {
                out.add_term((i, b1, b2), c);
            }
        }
        out
    }

    pub fn delta2(&self, a: &AlgebraElement) -> TripleElement {
        self.delta_first(&self.delta(a))
    }

    /// Exhaustive certification of every weak bialgebra and antipode axiom.
    pub fn certify(&self) -> ValidationReport {
        let mut report = ValidationReport::new("weak-hopf");
        let dim = self.dim;
        let unit = self.unit();

        // Associativity and unitality of the basis product.
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let left = self.mul_basis(i, j).and_then(|ij| self.mul_basis(ij, k));
                    let right = self.mul_basis(j, k).and_then(|jk| self.mul_basis(i, jk));
                    if left != right {
                        report.record("associativity", format!("({}, {}, {})", i, j, k));
                    }
                }
            }
            let e = AlgebraElement::basis(i);
            if self.mul(&unit, &e) != e || self.mul(&e, &unit) != e {
                report.record("unit", self.basis_label(i));
            }
        }

        // Coassociativity and counit laws.
        for i in 0..dim {
            let e = AlgebraElement::basis(i);
            let d = self.delta(&e);
            if self.delta_first(&d) != self.delta_second(&d) {
                report.record("coassociativity", self.basis_label(i));
            }
            let mut left = AlgebraElement::zero();
            let mut right = AlgebraElement::zero();
            for (&(a, b), &c) in d.iter() {
                if self.counit_support[a] {
                    left.add_term(b, c);
                }
                if self.counit_support[b] {
                    right.add_term(a, c);
                }
            }
            if left != e || right != e {
                report.record("counit", self.basis_label(i));
            }
        }

        // Δ(ab) = Δ(a)Δ(b).
        for i in 0..dim {
            for j in 0..dim {
                let prod = match self.mul_basis(i, j) {
                    Some(k) => self.delta(&AlgebraElement::basis(k)),
                    None => TensorElement::zero(),
                };
                let sep = self.mul_tensor(
                    &self.delta(&AlgebraElement::basis(i)),
                    &self.delta(&AlgebraElement::basis(j)),
                );
                if prod != sep {
                    report.record("delta-multiplicative", format!("({}, {})", i, j));
                }
            }
        }

        // (Δ(1) ⊗ 1)(1 ⊗ Δ(1)) = Δ⁽²⁾(1) = (1 ⊗ Δ(1))(Δ(1) ⊗ 1).
        let d1 = self.delta_one();
        let mut d1_left = TripleElement::zero();
        let mut d1_right = TripleElement::zero();
        for (&(a, b), &c) in d1.iter() {
            for &u in &self.unit_support {
                d1_left.add_term((a, b, u), c);
                d1_right.add_term((u, a, b), c);
            }
        }
        let d2_one = self.delta2(&unit);
        if self.mul_triple(&d1_left, &d1_right) != d2_one
            || self.mul_triple(&d1_right, &d1_left) != d2_one
        {
            report.record("unit-coproduct", "Δ²(1) identity");
        }

        // ε(a b₁) ε(b₂ c) = ε(abc) = ε(a b₂) ε(b₁ c).
        for a in 0..dim {
            for b in 0..dim {
                let db = self.delta(&AlgebraElement::basis(b));
                for c in 0..dim {
                    let eps_of = |i: Option<usize>| -> Rat {
                        match i {
                            Some(k) if self.counit_support[k] => Rat::one(),
                            _ => Rat::zero(),
                        }
                    };
                    let abc = eps_of(self.mul_basis(a, b).and_then(|ab| self.mul_basis(ab, c)));
                    let mut lhs = Rat::zero();
                    let mut rhs = Rat::zero();
                    for (&(b1, b2), &cw) in db.iter() {
                        lhs += cw * eps_of(self.mul_basis(a, b1)) * eps_of(self.mul_basis(b2, c));
                        rhs += cw * eps_of(self.mul_basis(a, b2)) * eps_of(self.mul_basis(b1, c));
                    }
                    if lhs != abc || rhs != abc {
                        report.record("counit-weak-mult", format!("({}, {}, {})", a, b, c));
                    }
                }
            }
        }

        // Antipode axioms and involutivity.
        for i in 0..dim {
            let e = AlgebraElement::basis(i);
            let d = self.delta(&e);
            let mut s_then = AlgebraElement::zero();
            let mut then_s = AlgebraElement::zero();
            for (&(a, b), &c) in d.iter() {
                if let Some(k) = self.mul_basis(self.antipode[a], b) {
                    s_then.add_term(k, c);
                }
                if let Some(k) = self.mul_basis(a, self.antipode[b]) {
                    then_s.add_term(k, c);
                }
            }
            if s_then != self.eps_s(&e) {
                report.record("antipode-source", self.basis_label(i));
            }
            if then_s != self.eps_e(&e) {
                report.record("antipode-target", self.basis_label(i));
            }
            let mut sandwich = AlgebraElement::zero();
            for (&(a, b, c), &cw) in self.delta2(&e).iter() {
                if let Some(k) = self
                    .mul_basis(self.antipode[a], b)
                    .and_then(|ab| self.mul_basis(ab, self.antipode[c]))
                {
                    sandwich.add_term(k, cw);
                }
            }
            if sandwich != self.antipode(&e) {
                report.record("antipode-sandwich", self.basis_label(i));
            }
            if self.antipode[self.antipode[i]] != i {
                report.record("antipode-involutory", self.basis_label(i));
            }
        }

        // S is an algebra and coalgebra antimorphism.
        for i in 0..dim {
            for j in 0..dim {
                let lhs = self.mul_basis(i, j).map(|k| self.antipode[k]);
                let rhs = self.mul_basis(self.antipode[j], self.antipode[i]);
                if lhs != rhs {
                    report.record("antipode-antimult", format!("({}, {})", i, j));
                }
            }
            let lhs = self.delta(&self.antipode(&AlgebraElement::basis(i)));
            let mut rhs = TensorElement::zero();
            for (&(a, b), &c) in self.delta(&AlgebraElement::basis(i)).iter() {
                rhs.add_term((self.antipode[b], self.antipode[a]), c);
            }
            if lhs != rhs {
                report.record("antipode-anticomult", self.basis_label(i));
            }
        }

        report.absorb(self.certify_idempotents());
        report
    }

    /// Source/target idempotents: orthogonal, complete, commuting, matched
    /// by the antipode, and spanning the images of `ε_s` and `ε_e`.
    pub fn certify_idempotents(&self) -> ValidationReport {
        let mut report = ValidationReport::new("idempotents");
        let v = self.pair.vertical();
        let mut total_s = AlgebraElement::zero();
        let mut total_t = AlgebraElement::zero();
        for p in v.objects() {
            let sp = self.one_source(p);
            let tp = self.one_target(p);
            total_s = total_s.add(&sp);
            total_t = total_t.add(&tp);
            for q in v.objects() {
                let sq = self.one_source(q);
                let prod = self.mul(&sp, &sq);
                let expected = if p == q {
                    sp.clone()
                } else {
                    AlgebraElement::zero()
                };
                if prod != expected {
                    report.record("source-orthogonal", format!("({p}, {q})"));
                }
                let tq = self.one_target(q);
                let prod = self.mul(&tp, &tq);
                let expected = if p == q {
                    tp.clone()
                } else {
                    AlgebraElement::zero()
                };
                if prod != expected {
                    report.record("target-orthogonal", format!("({p}, {q})"));
                }
                // Elements of one subalgebra commute with the other.
                if self.mul(&sp, &tq) != self.mul(&tq, &sp) {
                    report.record("source-target-commute", format!("({p}, {q})"));
                }
            }
            if self.antipode(&sp) != tp {
                report.record("antipode-swaps-idempotents", format!("{p}"));
            }
        }
        if total_s != self.unit() || total_t != self.unit() {
            report.record("idempotent-completeness", "Σ 𝟏_P ≠ 𝟏");
        }
        // Δ(1) = Σ_P 𝟏_P ⊗ 𝟏^P.
        let mut expected = TensorElement::zero();
        for p in v.objects() {
            for (&a, &ca) in self.one_source(p).iter() {
                for (&b, &cb) in self.one_target(p).iter() {
                    expected.add_term((a, b), ca * cb);
                }
            }
        }
        if expected != self.delta_one() {
            report.record("delta-one-decomposition", "Δ(1) ≠ Σ 𝟏_P ⊗ 𝟏^P");
        }
        // ε_s and ε_e land in the spans of the idempotents.
        for i in 0..self.dim {
            let e = AlgebraElement::basis(i);
            if !self.in_source_span(&self.eps_s(&e)) {
                report.record("eps-s-span", self.basis_label(i));
            }
            if !self.in_target_span(&self.eps_e(&e)) {
                report.record("eps-e-span", self.basis_label(i));
            }
        }
        report
    }

    fn in_source_span(&self, a: &AlgebraElement) -> bool {
        let v = self.pair.vertical();
        let mut rest = a.clone();
        for p in v.objects() {
            let sp = self.one_source(p);
            let lead = sp.support().next().copied();
            if let Some(i) = lead {
                let c = rest.get(&i);
                rest = rest.sub(&sp.scale(c));
            }
        }
        rest.is_zero()
    }

    fn in_target_span(&self, a: &AlgebraElement) -> bool {
        let v = self.pair.vertical();
        let mut rest = a.clone();
        for p in v.objects() {
            let tp = self.one_target(p);
            let lead = tp.support().next().copied();
            if let Some(i) = lead {
                let c = rest.get(&i);
                rest = rest.sub(&tp.scale(c));
            }
        }
        rest.is_zero()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }
}

pub fn flip(t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (&(a, b), &c) in t.iter() {
        out.add_term((b, a), c);
    }
    out
}

/// The weak Hopf algebra morphism `k(𝕍,ℍ) → k(V,H)` of a matched-pair
/// morphism: `(h, γ) ↦ Σ_{β(g) = γ} (α(h), g)`. Images of the source basis.
pub fn hopf_morphism(
    mor: &MatchedPairMorphism,
    from: &WeakHopfAlgebra,
    to: &WeakHopfAlgebra,
) -> Vec<AlgebraElement> {
    (0..from.dim())
        .map(|i| {
            let c = from.pair.cell_at(i);
            let mut out = AlgebraElement::zero();
            for g in to.pair.vertical().arrows() {
                if mor.beta[g.idx()] != c.right {
                    continue;
                }
                let img = Cell {
                    top: mor.alpha[c.top.idx()],
                    right: g,
                };
                if let Some(k) = to.pair.cell_index(img) {
                    out.add_term(k, Rat::one());
                }
            }
            out
        })
        .collect()
}

/// Certify that basis images define a morphism of weak Hopf algebras:
/// multiplicative, unital, comultiplicative, counital, antipode-compatible.
pub fn certify_hopf_morphism(
    phi: &[AlgebraElement],
    from: &WeakHopfAlgebra,
    to: &WeakHopfAlgebra,
) -> ValidationReport {
    let mut report = ValidationReport::new("hopf-morphism");
    let apply = |a: &AlgebraElement| -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&i, &c) in a.iter() {
            out = out.add(&phi[i].scale(c));
        }
        out
    };
    let apply_tensor = |t: &TensorElement| -> TensorElement {
        let mut out = TensorElement::zero();
        for (&(i, j), &c) in t.iter() {
            for (&a, &ca) in phi[i].iter() {
                for (&b, &cb) in phi[j].iter() {
                    out.add_term((a, b), c * ca * cb);
                }
            }
        }
        out
    };
    for i in 0..from.dim() {
        for j in 0..from.dim() {
            let lhs = match from.mul_basis(i, j) {
                Some(k) => phi[k].clone(),
                None => AlgebraElement::zero(),
            };
            let rhs = to.mul(&phi[i], &phi[j]);
            if lhs != rhs {
                report.record("multiplicative", format!("({}, {})", i, j));
            }
        }
        let e = AlgebraElement::basis(i);
        if apply_tensor(&from.delta(&e)) != to.delta(&apply(&e)) {
            report.record("comultiplicative", from.basis_label(i));
        }
        if from.counit(&e) != to.counit(&apply(&e)) {
            report.record("counital", from.basis_label(i));
        }
        if apply(&from.antipode(&e)) != to.antipode(&apply(&e)) {
            report.record("antipode", from.basis_label(i));
        }
    }
    if apply(&from.unit()) != to.unit() {
        report.record("unital", "Φ(1) ≠ 1");
    }
    report
}

/// A left module over `k(V,H)` with 0/1 action table on a set basis.
pub struct HopfModule {
    pub dim: usize,
    /// `cell * dim + e` → image, `None` = 0.
    pub action: Vec<Option<usize>>,
}

impl HopfModule {
    pub fn act_basis(&self, cell: usize, e: usize) -> Option<usize> {
        self.action[cell * self.dim + e]
    }

    pub fn act(&self, a: &AlgebraElement, e: usize) -> Sparse<usize> {
        let mut out = Sparse::zero();
        for (&i, &c) in a.iter() {
            if let Some(img) = self.act_basis(i, e) {
                out.add_term(img, c);
            }
        }
        out
    }
}

/// Linearize a set-theoretic representation: `(x, g) · e = x ▷ e` when
/// `|e| = g`, else 0.
pub fn linearize(w: &WeakHopfAlgebra, r: &Representation) -> HopfModule {
    let dim = r.len();
    let mut action = vec![None; w.dim() * dim];
    for i in 0..w.dim() {
        let c = w.pair.cell_at(i);
        for e in 0..dim {
            if r.grade(e) == c.right {
                action[i * dim + e] = r.act(c.top, e);
            }
        }
    }
    HopfModule { dim, action }
}

/// Module axioms for a linearized representation, checked exhaustively.
pub fn certify_module(w: &WeakHopfAlgebra, md: &HopfModule) -> ValidationReport {
    let mut report = ValidationReport::new("module");
    let unit = w.unit();
    for e in 0..md.dim {
        if md.act(&unit, e) != Sparse::basis(e) {
            report.record("unit-action", format!("{e}"));
        }
    }
    for i in 0..w.dim() {
        for j in 0..w.dim() {
            for e in 0..md.dim {
                let rhs = md.act_basis(j, e).and_then(|je| md.act_basis(i, je));
                let lhs = w.mul_basis(i, j).and_then(|ij| md.act_basis(ij, e));
                if lhs != rhs {
                    report.record("action-associativity", format!("({}, {}, {})", i, j, e));
                }
            }
        }
    }
    report
}

/// The truncated module tensor product `M ⊗̄ N = Δ(1)·(M ⊗ N)`: basis the
/// pairs surviving `Δ(1)`, action through `Δ`.
pub fn module_tensor(
    w: &WeakHopfAlgebra,
    m1: &HopfModule,
    n: &HopfModule,
) -> (HopfModule, Vec<(usize, usize)>) {
    // Pairs fixed by Δ(1).
    let d1 = w.delta_one();
    let mut pairs = Vec::new();
    let mut index = std::collections::HashMap::new();
    for e in 0..m1.dim {
        for f in 0..n.dim {
            let mut img = Sparse::zero();
            for (&(u1, u2), &c) in d1.iter() {
                if let (Some(a), Some(b)) = (m1.act_basis(u1, e), n.act_basis(u2, f)) {
                    img.add_term((a, b), c);
                }
            }
            if img == Sparse::basis((e, f)) {
                index.insert((e, f), pairs.len());
                pairs.push((e, f));
            } else if !img.is_zero() {
                // Δ(1) acts idempotently with 0/1 values on set-like
                // modules; anything else would not arise from linearization.
                panic!("Δ(1) does not act as a projection on the chosen basis");
            }
        }
    }
    let dim = pairs.len();
    let mut action = vec![None; w.dim() * dim];
    for i in 0..w.dim() {
        for (t, &(e, f)) in pairs.iter().enumerate() {
            let mut img: Option<usize> = None;
            for &(a1, a2) in w.delta_basis(i) {
                if let (Some(x), Some(y)) = (m1.act_basis(a1, e), n.act_basis(a2, f)) {
                    let target = index.get(&(x, y)).copied();
                    assert!(
                        img.is_none() || img == target,
                        "module tensor action is not single-valued"
                    );
                    img = target;
                }
            }
            action[i * dim + t] = img;
        }
    }
    (HopfModule { dim, action }, pairs)
}
