//! Duality pairing and the Drinfeld double of `k(V,H)`.
//!
//! Cell transposition `(x, g) ↦ (x▷g, x◁g)` is a bijection onto the cells
//! of the dual pair and induces a non-degenerate pairing identifying
//! `k(H,V)` with the dual weak Hopf algebra: products pair with coproducts
//! on both sides. The double is the quotient of `k(H,V) ⊗ k(V,H)` under the
//! source/target relations; the quotient has basis the *admissible pairs*
//! `(f,y) ⊗ (x,g)` with `t(f) = l(x)` and `b(x▷g) = l(y⁻¹◁f⁻¹)`, the
//! product is the Sweedler-sum formula
//!
//! ```text
//! (φ ⊗ h)(φ′ ⊗ h′) = ⟨S(h₁), φ′₁⟩ φ′₂φ ⊗ h₂h′ ⟨h₃, φ′₃⟩
//! ```
//!
//! reduced to the admissible basis, and the map
//! `Ψ : (f,y) ⊗ (x,g) ↦ ((f⁻¹,x), (g, (x◁g)⁻¹(y⁻¹◁f⁻¹)x))` is an
//! isomorphism of algebras onto `k(D(V,H))`, carrying the double's
//! canonical R-matrix to the one induced by the canonical rotation pair.

use super::element::{AlgebraElement, Rat, Sparse, TensorElement};
use super::WeakHopfAlgebra;
use crate::double::GeneralizedDouble;
use crate::error::{Error, Result};
use crate::matched_pair::MatchedPair;
use crate::report::ValidationReport;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Cell transposition `k(V,H) basis → k(H,V) basis`.
pub fn transpose_table(m: &MatchedPair, dual: &MatchedPair) -> Vec<usize> {
    m.cells()
        .iter()
        .map(|&c| {
            dual.cell_index(m.cell_transpose(c))
                .expect("transposed cell lives in the dual pair")
        })
        .collect()
}

/// Certify that the transposition pairing identifies `k(H,V)` with the dual
/// of `k(V,H)`: it is a permutation matrix, products pair with coproducts
/// on both sides, units pair with counits, and antipodes correspond.
pub fn certify_duality_pairing(
    w: &WeakHopfAlgebra,
    dual: &WeakHopfAlgebra,
    transpose: &[usize],
) -> ValidationReport {
    let mut report = ValidationReport::new("duality-pairing");
    // Permutation-matrix property.
    if transpose.len() != w.dim() || dual.dim() != w.dim() {
        report.record("shape", "dimensions differ");
        return report;
    }
    let mut seen = vec![false; w.dim()];
    for &t in transpose {
        if t >= w.dim() || seen[t] {
            report.record("permutation", "transposition is not a bijection");
            return report;
        }
        seen[t] = true;
    }
    let pairing = |a: usize, phi: usize| -> Rat {
        if transpose[a] == phi {
            Rat::one()
        } else {
            Rat::zero()
        }
    };
    // ⟨ab, φ⟩ = Σ ⟨a, φ₁⟩⟨b, φ₂⟩.
    for a in 0..w.dim() {
        for b in 0..w.dim() {
            for phi in 0..w.dim() {
                let lhs = match w.mul_basis(a, b) {
                    Some(k) => pairing(k, phi),
                    None => Rat::zero(),
                };
                let mut rhs = Rat::zero();
                for &(p1, p2) in dual.delta_basis(phi) {
                    rhs += pairing(a, p1) * pairing(b, p2);
                }
                if lhs != rhs {
                    report.record("product-coproduct", format!("({a}, {b}, {phi})"));
                }
            }
        }
    }
    // ⟨a, φψ⟩ = Σ ⟨a₁, φ⟩⟨a₂, ψ⟩.
    for a in 0..w.dim() {
        let da = w.delta_basis(a);
        for phi in 0..w.dim() {
            for psi in 0..w.dim() {
                let lhs = match dual.mul_basis(phi, psi) {
                    Some(k) => pairing(a, k),
                    None => Rat::zero(),
                };
                let mut rhs = Rat::zero();
                for &(a1, a2) in da {
                    rhs += pairing(a1, phi) * pairing(a2, psi);
                }
                if lhs != rhs {
                    report.record("coproduct-product", format!("({a}, {phi}, {psi})"));
                }
            }
        }
    }
    // ⟨1, φ⟩ = ε_dual(φ) and ⟨a, 1_dual⟩ = ε(a).
    for phi in 0..w.dim() {
        let mut lhs = Rat::zero();
        for (&ui, &c) in w.unit().iter() {
            lhs += c * pairing(ui, phi);
        }
        if lhs != dual.counit(&AlgebraElement::basis(phi)) {
            report.record("unit-counit", format!("φ = {phi}"));
        }
    }
    for a in 0..w.dim() {
        let mut lhs = Rat::zero();
        for (&ui, &c) in dual.unit().iter() {
            lhs += c * pairing(a, ui);
        }
        if lhs != w.counit(&AlgebraElement::basis(a)) {
            report.record("counit-unit", format!("a = {a}"));
        }
    }
    // ⟨S(a), φ⟩ = ⟨a, S_dual(φ)⟩, i.e. transpose ∘ S = S_dual ∘ transpose.
    for a in 0..w.dim() {
        if transpose[w.antipode_basis(a)] != dual.antipode_basis(transpose[a]) {
            report.record("antipode-pairing", format!("a = {a}"));
        }
    }
    report
}

/// The Drinfeld double on its admissible-pair basis.
pub struct DoubleAlgebra {
    pub hopf: WeakHopfAlgebra,
    pub dual: WeakHopfAlgebra,
    pub transpose: Vec<usize>,
    /// Basis: `(φ, h)` with `φ` a dual-pair cell and `h` a cell.
    pub admissible: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    /// `Δ⁽²⁾` factorization triples per cell, shared by both legs.
    triples: Vec<Vec<(usize, usize, usize)>>,
    /// Dual `Δ⁽²⁾` triples, grouped by outer legs for the pairing filters.
    dual_middle: Vec<HashMap<(usize, usize), Vec<usize>>>,
}

pub type DoubleElement = Sparse<usize>;

impl DoubleAlgebra {
    pub fn build(m: &MatchedPair) -> DoubleAlgebra {
        let dual_pair = m.dual();
        let hopf = WeakHopfAlgebra::build(m);
        let dual = WeakHopfAlgebra::build(&dual_pair);
        let transpose = transpose_table(m, &dual_pair);
        let v = m.vertical();
        let h = m.horizontal();

        let mut admissible = Vec::new();
        let mut index = HashMap::new();
        for phi in 0..dual.dim() {
            let pc = dual_pair.cell_at(phi);
            let (f, y) = (pc.top, pc.right); // f ∈ V, y ∈ H with b(f) = l(y)
            for hcell in 0..hopf.dim() {
                let c = m.cell_at(hcell);
                let x = c.top;
                // t(f) = l(x) and b(x ▷ g) = l(y⁻¹ ◁ f⁻¹).
                if v.src(f) != h.src(x) {
                    continue;
                }
                let yf = m
                    .act_right(h.inv(y), v.inv(f))
                    .expect("r(y⁻¹) = l(y) = b(f) = t(f⁻¹)");
                if v.end(m.cell_left(c)) != h.src(yf) {
                    continue;
                }
                index.insert((phi, hcell), admissible.len());
                admissible.push((phi, hcell));
            }
        }

        let triples = (0..hopf.dim())
            .map(|i| {
                let mut out = Vec::new();
                for &(b1, b2) in hopf.delta_basis(i) {
                    for &(c1, c2) in hopf.delta_basis(b2) {
                        out.push((b1, c1, c2));
                    }
                }
                out
            })
            .collect();
        // Group the dual Δ⁽²⁾ triples (p₁, p₂, p₃) by (p₁, p₃): the pairing
        // filters in the product formula fix the outer legs, so the inner
        // loop only visits the surviving middle legs.
        let dual_middle = (0..dual.dim())
            .map(|i| {
                let mut out: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
                for &(b1, b2) in dual.delta_basis(i) {
                    for &(c1, c2) in dual.delta_basis(b2) {
                        out.entry((b1, c2)).or_default().push(c1);
                    }
                }
                out
            })
            .collect();

        DoubleAlgebra {
            hopf,
            dual,
            transpose,
            admissible,
            index,
            triples,
            dual_middle,
        }
    }

    pub fn dim(&self) -> usize {
        self.admissible.len()
    }

    pub fn basis_index(&self, phi: usize, h: usize) -> Option<usize> {
        self.index.get(&(phi, h)).copied()
    }

    /// The class of `ε ⊗ 1`: the unit of the double.
    pub fn unit(&self) -> DoubleElement {
        let mut u = DoubleElement::zero();
        for (&phi, &cp) in self.dual.unit().iter() {
            for (&hc, &ch) in self.hopf.unit().iter() {
                if let Some(i) = self.basis_index(phi, hc) {
                    u.add_term(i, cp * ch);
                }
            }
        }
        u
    }

    /// Product of two admissible basis elements, reduced to the admissible
    /// basis (non-admissible summands are the relations' zero classes).
    pub fn mul_basis(&self, i: usize, j: usize) -> DoubleElement {
        let (phi, hc) = self.admissible[i];
        let (phi2, hc2) = self.admissible[j];
        let mut out = DoubleElement::zero();
        for &(h1, h2, h3) in &self.triples[hc] {
            // ⟨S(h₁), φ′₁⟩ and ⟨h₃, φ′₃⟩ are 0/1 via transposition: they pin
            // the outer legs of the dual Δ⁽²⁾.
            let key = (
                self.transpose[self.hopf.antipode_basis(h1)],
                self.transpose[h3],
            );
            let Some(middles) = self.dual_middle[phi2].get(&key) else {
                continue;
            };
            let Some(hprod) = self.hopf.mul_basis(h2, hc2) else {
                continue;
            };
            for &p2 in middles {
                let Some(dprod) = self.dual.mul_basis(p2, phi) else {
                    continue;
                };
                if let Some(k) = self.basis_index(dprod, hprod) {
                    out.add_term(k, Rat::one());
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &DoubleElement, b: &DoubleElement) -> DoubleElement {
        let mut out = DoubleElement::zero();
        for (&i, &ci) in a.iter() {
            for (&j, &cj) in b.iter() {
                out = out.add(&self.mul_basis(i, j).scale(ci * cj));
            }
        }
        out
    }

    pub fn describe(&self, i: usize) -> String {
        let (phi, hc) = self.admissible[i];
        format!(
            "{} ⊗ {}",
            self.dual.basis_label(phi),
            self.hopf.basis_label(hc)
        )
    }
}

/// Associativity and unitality of the double, checked exhaustively on basis
/// triples (the products are sparse elements, compared exactly).
pub fn certify_double_algebra(da: &DoubleAlgebra) -> ValidationReport {
    let mut report = ValidationReport::new("double-algebra");
    let n = da.dim();
    let unit = da.unit();
    for i in 0..n {
        let e = DoubleElement::basis(i);
        if da.mul(&unit, &e) != e || da.mul(&e, &unit) != e {
            report.record("unit", da.describe(i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = da.mul_basis(i, j);
            for k in 0..n {
                let left = da.mul(&ij, &DoubleElement::basis(k));
                let right = da.mul(&DoubleElement::basis(i), &da.mul_basis(j, k));
                if left != right {
                    report.record("associativity", format!("({i}, {j}, {k})"));
                }
            }
        }
    }
    report
}

/// The vanishing rule for products of admissible basis elements: the product
/// is nonzero exactly when `f′g = (x′▷g′)(y′⁻¹◁f′⁻¹)⁻¹` and
/// `xy′ = (y⁻¹◁f⁻¹)⁻¹(x◁g)`.
pub fn certify_vanishing_rule(da: &DoubleAlgebra) -> ValidationReport {
    let mut report = ValidationReport::new("double-vanishing");
    let m = da.hopf.pair();
    let dual_pair = da.dual.pair();
    let v = m.vertical();
    let h = m.horizontal();
    for i in 0..da.dim() {
        let (phi, hc) = da.admissible[i];
        let pc = dual_pair.cell_at(phi);
        let (f, y) = (pc.top, pc.right);
        let c = m.cell_at(hc);
        let (x, g) = (c.top, c.right);
        for j in 0..da.dim() {
            let (phi2, hc2) = da.admissible[j];
            let pc2 = dual_pair.cell_at(phi2);
            let (f2, y2) = (pc2.top, pc2.right);
            let c2 = m.cell_at(hc2);
            let (x2, g2) = (c2.top, c2.right);

            let first = v.compose(f2, g) == {
                let left = m.act_left(x2, g2).expect("cell");
                let right = v.inv(m.act_left(h.inv(y2), v.inv(f2)).expect("dual cell"));
                v.compose(left, right)
            } && v.compose(f2, g).is_some();
            let second = h.compose(x, y2) == {
                let left = h.inv(m.act_right(h.inv(y), v.inv(f)).expect("dual cell"));
                let right = m.act_right(x, g).expect("cell");
                h.compose(left, right)
            } && h.compose(x, y2).is_some();

            let nonzero = !da.mul_basis(i, j).is_zero();
            if nonzero != (first && second) {
                report.record(
                    "vanishing",
                    format!("({}, {})", da.describe(i), da.describe(j)),
                );
            }
        }
    }
    report
}

/// The isomorphism `Ψ` from the double onto `k(D(V,H))`, as the image cell
/// index per admissible basis element.
pub fn drinfeld_iso(da: &DoubleAlgebra, d: &GeneralizedDouble) -> Result<Vec<usize>> {
    let m = da.hopf.pair();
    let dual_pair = da.dual.pair();
    let v = m.vertical();
    let h = m.horizontal();
    da.admissible
        .iter()
        .map(|&(phi, hc)| {
            let pc = dual_pair.cell_at(phi);
            let (f, y) = (pc.top, pc.right);
            let c = m.cell_at(hc);
            let (x, g) = (c.top, c.right);
            let top = d
                .horizontal_arrow(v.inv(f), x)
                .ok_or_else(|| Error::NoSolution("Ψ corner (f⁻¹, x) missing".into()))?;
            let omega = h
                .compose_chain(&[
                    h.inv(m.act_right(x, g).expect("cell")),
                    m.act_right(h.inv(y), v.inv(f)).expect("dual cell"),
                    x,
                ])
                .ok_or_else(|| Error::NoSolution("Ψ loop not composable".into()))?;
            let right = d
                .vertical_arrow(g, omega)
                .ok_or_else(|| Error::NoSolution("Ψ pair (g, Ω) missing".into()))?;
            d.pair
                .cell_index(crate::Cell { top, right })
                .ok_or_else(|| Error::NoSolution("Ψ image is not a cell of D(V,H)".into()))
        })
        .collect()
}

/// Certify that `Ψ` is a bijective algebra morphism onto `k(D(V,H))`.
pub fn certify_drinfeld_iso(
    da: &DoubleAlgebra,
    dw: &WeakHopfAlgebra,
    psi: &[usize],
) -> ValidationReport {
    let mut report = ValidationReport::new("drinfeld-iso");
    if da.dim() != dw.dim() {
        report.record(
            "dimension",
            format!("double dim {} ≠ k(D) dim {}", da.dim(), dw.dim()),
        );
        return report;
    }
    let mut seen = vec![false; dw.dim()];
    for &t in psi {
        if seen[t] {
            report.record("bijection", "Ψ repeats a basis cell");
            return report;
        }
        seen[t] = true;
    }
    // Ψ(a·b) = Ψ(a)·Ψ(b) on every basis pair; Ψ(1) = 1.
    let apply = |a: &DoubleElement| -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&i, &c) in a.iter() {
            out.add_term(psi[i], c);
        }
        out
    };
    for i in 0..da.dim() {
        for j in 0..da.dim() {
            let lhs = apply(&da.mul_basis(i, j));
            let rhs = match dw.mul_basis(psi[i], psi[j]) {
                Some(k) => AlgebraElement::basis(k),
                None => AlgebraElement::zero(),
            };
            if lhs != rhs {
                report.record(
                    "multiplicative",
                    format!("({}, {})", da.describe(i), da.describe(j)),
                );
            }
        }
    }
    if apply(&da.unit()) != dw.unit() {
        report.record("unital", "Ψ(1) ≠ 1");
    }
    report
}

/// The canonical R-matrix of the double on the admissible basis:
/// `R = Σᵢ (ε ⊗ eᵢ) ⊗ (S*(eⁱ) ⊗ 1)` with both legs reduced to the quotient.
/// The antipode twist on the dual-basis leg is the convention under which
/// the transported element coincides with the rotation-pair R-matrix of
/// `k(D(V,H))`; the plain dual basis fails the comparison (checked in the
/// tests), so the twisted form is the one recorded here.
pub fn canonical_double_r(da: &DoubleAlgebra) -> Vec<(DoubleElement, DoubleElement)> {
    let mut terms = Vec::new();
    for i in 0..da.hopf.dim() {
        let mut left = DoubleElement::zero();
        for (&phi, &c) in da.dual.unit().iter() {
            if let Some(k) = da.basis_index(phi, i) {
                left.add_term(k, c);
            }
        }
        let mut right = DoubleElement::zero();
        let dual_leg = da.transpose[da.hopf.antipode_basis(i)];
        for (&u, &c) in da.hopf.unit().iter() {
            if let Some(k) = da.basis_index(dual_leg, u) {
                right.add_term(k, c);
            }
        }
        if !left.is_zero() && !right.is_zero() {
            terms.push((left, right));
        }
    }
    terms
}

/// Transport the double's canonical R through `Ψ ⊗ Ψ` into `k(D(V,H))`.
pub fn transport_canonical_r(da: &DoubleAlgebra, psi: &[usize]) -> TensorElement {
    let mut out = TensorElement::zero();
    for (left, right) in canonical_double_r(da) {
        for (&a, &ca) in left.iter() {
            for (&b, &cb) in right.iter() {
                out.add_term((psi[a], psi[b]), ca * cb);
            }
        }
    }
    out
}
