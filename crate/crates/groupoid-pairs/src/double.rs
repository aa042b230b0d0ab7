//! Doubles and generalized doubles of matched pairs.
//!
//! A morphism `(α, β) : (𝕍, ℍ) → (V, H)` induces a new matched pair
//! `D(α,β) = (𝕍 ×ₑ H^op, V ⋈ ℍ)`: the vertical groupoid is the restricted
//! product of `𝕍` with the opposite of `H`, the horizontal groupoid is the
//! diagonal of the pullback pair, and the actions are
//!
//! ```text
//! (g,h) ⇀ (γ,x) = ( β(g)(h▷γ)β(Ω ▷ g⁻¹), Ω ◁ g⁻¹ )
//! (g,h) ↼ (γ,x) = ( (Ω ◁ g⁻¹) ▷ g, h ◁ γ )        Ω = α(h◁γ)·x·α(h)⁻¹
//! ```
//!
//! The abbreviation `Ω` is computed once per evaluation; the two formulas
//! share it and mis-parenthesization is the dominant bug risk. `D(V,H)` is
//! the double, the case of the identity morphism. Everything produced here
//! is re-validated exhaustively by the test suites: the validation of
//! `D(α,β)` for every fleet morphism is the executable form of the proof
//! that these actions satisfy the matched-pair axioms.

use crate::diagonal::{diagonal_groupoid, DiagonalGroupoid};
use crate::error::{Error, Result};
use crate::groupoid::{restricted_product, ArrowId, ArrowMap, PairProduct};
use crate::matched_pair::MatchedPair;
use crate::morphism::{pullback_pair, MatchedPairMorphism};

pub struct GeneralizedDouble {
    /// The defining morphism `(α, β)`.
    pub morphism: MatchedPairMorphism,
    /// `D(α,β)` as a matched pair.
    pub pair: MatchedPair,
    /// Vertical groupoid `𝕍 ×ₑ H^op` with components `(γ ∈ 𝕍, x ∈ H)`.
    pub vertical: PairProduct,
    /// Horizontal groupoid `V ⋈ ℍ` with components `(g ∈ V, h ∈ ℍ)`.
    pub horizontal: DiagonalGroupoid,
    /// The pullback pair `(V, ℍ)` whose diagonal is the horizontal leg.
    pub pullback: MatchedPair,
}

impl GeneralizedDouble {
    pub fn vertical_arrow(&self, gamma: ArrowId, x: ArrowId) -> Option<ArrowId> {
        self.vertical.arrow(gamma, x)
    }

    pub fn horizontal_arrow(&self, g: ArrowId, h: ArrowId) -> Option<ArrowId> {
        self.horizontal.arrow(g, h)
    }
}

/// Build the generalized double `D(α,β)`.
pub fn generalized_double(m: &MatchedPairMorphism) -> Result<GeneralizedDouble> {
    let source = &m.source;
    let target = &m.target;
    let hop = target.horizontal().opposite();
    let vertical = restricted_product(source.vertical(), &hop)?;
    let pullback = pullback_pair(m);
    let horizontal = diagonal_groupoid(&pullback);

    let sv = source.vertical().clone();
    let th = target.horizontal().clone();
    let tv = target.vertical().clone();
    let alpha = m.alpha.clone();
    let beta = m.beta.clone();
    let src_pair = source.clone();
    let tgt_pair = target.clone();
    let v_components = vertical.components.clone();
    let h_components = horizontal.components.clone();
    let v_index: std::collections::HashMap<(ArrowId, ArrowId), ArrowId> = v_components
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, ArrowId(i as u32)))
        .collect();
    let h_index: std::collections::HashMap<(ArrowId, ArrowId), ArrowId> = h_components
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, ArrowId(i as u32)))
        .collect();

    let pair = MatchedPair::from_actions(
        vertical.groupoid.clone(),
        horizontal.groupoid.clone(),
        move |hd, vd| {
            let (g, h) = h_components[hd.idx()];
            let (gamma, x) = v_components[vd.idx()];
            // Ω = α(h ◁ γ) · x · α(h)⁻¹ in the target horizontal groupoid.
            let h_q_gamma = src_pair
                .act_right(h, gamma)
                .expect("r(h) = t(γ) by cell composability");
            let omega = th
                .compose_chain(&[alpha[h_q_gamma.idx()], x, th.inv(alpha[h.idx()])])
                .expect("Ω is composable: r(h◁γ) = b(γ) = l(x), r(x) = t(γ) = r(h)");
            let g_inv = tv.inv(g);
            let om_left = tgt_pair
                .act_left(omega, g_inv)
                .expect("r(Ω) = l(h) = b(g) = t(g⁻¹)");
            let om_bottom = tgt_pair
                .act_right(omega, g_inv)
                .expect("same composability as Ω ▷ g⁻¹");
            let h_l_gamma = src_pair
                .act_left(h, gamma)
                .expect("r(h) = t(γ) by cell composability");
            let first = sv
                .compose_chain(&[beta[g.idx()], h_l_gamma, beta[om_left.idx()]])
                .expect("β(g)·(h▷γ)·β(Ω▷g⁻¹) chains through matching endpoints");
            let left = v_index[&(first, om_bottom)];
            let bottom_v = tgt_pair
                .act_left(om_bottom, g)
                .expect("r(Ω◁g⁻¹) = b(g⁻¹) = t(g)");
            let bottom = h_index[&(bottom_v, h_q_gamma)];
            (left, bottom)
        },
    )?;

    Ok(GeneralizedDouble {
        morphism: m.clone(),
        pair,
        vertical,
        horizontal,
        pullback,
    })
}

/// The double `D(V,H) = D(id)`.
pub fn double(m: &MatchedPair) -> GeneralizedDouble {
    generalized_double(&MatchedPairMorphism::identity(m))
        .expect("the identity morphism always doubles")
}

/// The inclusion `(ι, π) : (𝕍, ℍ) → D(α,β)` with `ι(h) = (id_V l(h), h)`
/// and `π(γ, x) = γ`.
pub fn inclusion_morphism(d: &GeneralizedDouble) -> MatchedPairMorphism {
    let source = d.morphism.source.clone();
    let tv = d.morphism.target.vertical();
    let iota: ArrowMap = source
        .horizontal()
        .arrows()
        .map(|h| {
            let e = tv.id(source.horizontal().src(h));
            d.horizontal_arrow(e, h).expect("corner pair exists")
        })
        .collect();
    let pi: ArrowMap = d
        .vertical
        .components
        .iter()
        .map(|&(gamma, _)| gamma)
        .collect();
    MatchedPairMorphism {
        source,
        target: d.pair.clone(),
        alpha: iota,
        beta: pi,
    }
}

/// A commutative triangle of matched-pair morphisms: `ac = bc ∘ ab`.
pub struct Triangle {
    pub ab: MatchedPairMorphism,
    pub bc: MatchedPairMorphism,
    pub ac: MatchedPairMorphism,
}

impl Triangle {
    pub fn new(
        ab: MatchedPairMorphism,
        bc: MatchedPairMorphism,
        ac: MatchedPairMorphism,
    ) -> Result<Self> {
        let composite = MatchedPairMorphism::compose(&bc, &ab)?;
        if composite.alpha != ac.alpha || composite.beta != ac.beta {
            return Err(Error::HypothesisViolation {
                condition: "triangle commutes".into(),
                witness: "bc ∘ ab ≠ ac".into(),
            });
        }
        Ok(Triangle { ab, bc, ac })
    }
}

/// The two morphisms of matched pairs induced by a commutative triangle:
/// `D(ac) → D(bc)`, acting as `α_ab` on the second horizontal component and
/// `β_ab` on the first vertical component, and `D(ac) → D(ab)`, acting as
/// `β_bc` on the first horizontal component and `α_bc` on the second
/// vertical component.
pub fn functoriality_maps(t: &Triangle) -> Result<(MatchedPairMorphism, MatchedPairMorphism)> {
    let d_ac = generalized_double(&t.ac)?;
    let d_bc = generalized_double(&t.bc)?;
    let d_ab = generalized_double(&t.ab)?;

    // D(ac) → D(bc): (g, h) ↦ (g, α_ab(h)); (γ, x) ↦ (β_ab(γ), x).
    let first_alpha: ArrowMap = d_ac
        .horizontal
        .components
        .iter()
        .map(|&(g, h)| {
            d_bc.horizontal_arrow(g, t.ab.alpha[h.idx()])
                .expect("α_ab preserves the corner condition")
        })
        .collect();
    let first_beta: ArrowMap = d_bc
        .vertical
        .components
        .iter()
        .map(|&(gamma, x)| {
            d_ac.vertical_arrow(t.ab.beta[gamma.idx()], x)
                .expect("β_ab preserves the agreement condition")
        })
        .collect();
    let first = MatchedPairMorphism {
        source: d_ac.pair.clone(),
        target: d_bc.pair.clone(),
        alpha: first_alpha,
        beta: first_beta,
    };

    // D(ac) → D(ab): (g, h) ↦ (β_bc(g), h); (γ, x) ↦ (γ, α_bc(x)).
    let second_alpha: ArrowMap = d_ac
        .horizontal
        .components
        .iter()
        .map(|&(g, h)| {
            d_ab.horizontal_arrow(t.bc.beta[g.idx()], h)
                .expect("β_bc preserves the corner condition")
        })
        .collect();
    let second_beta: ArrowMap = d_ab
        .vertical
        .components
        .iter()
        .map(|&(gamma, x)| {
            d_ac.vertical_arrow(gamma, t.bc.alpha[x.idx()])
                .expect("α_bc preserves the agreement condition")
        })
        .collect();
    let second = MatchedPairMorphism {
        source: d_ac.pair.clone(),
        target: d_ab.pair.clone(),
        alpha: second_alpha,
        beta: second_beta,
    };

    Ok((first, second))
}

/// The dual of a morphism: `(β, α) : dual(target) → dual(source)`.
pub fn dual_morphism(m: &MatchedPairMorphism) -> MatchedPairMorphism {
    MatchedPairMorphism {
        source: m.target.dual(),
        target: m.source.dual(),
        alpha: m.beta.clone(),
        beta: m.alpha.clone(),
    }
}

/// The isomorphism `D(α,β) ≅ D(β,α)`: a matched-pair morphism whose legs are
///
/// ```text
/// V ⋈ ℍ → ℍ ⋈ V        (g,h) ↦ ( (h⁻¹ ◁ β(g)⁻¹)⁻¹, (α(h)⁻¹ ▷ g⁻¹)⁻¹ )
/// H ×ₑ 𝕍^op → 𝕍 ×ₑ H^op   (x,γ) ↦ (γ⁻¹, x⁻¹)
/// ```
///
/// both bijective. Applying the construction to `(β, α)` yields the inverse;
/// at the identity morphism this specializes to `D(V,H) ≅ D(H,V)`.
pub fn gendouble_dual_iso(
    d: &GeneralizedDouble,
    d_dual: &GeneralizedDouble,
) -> MatchedPairMorphism {
    let m = &d.morphism;
    let sh = m.source.horizontal();
    let sv = m.source.vertical();
    let th = m.target.horizontal();
    let tv = m.target.vertical();
    let alpha_leg: ArrowMap = d
        .horizontal
        .components
        .iter()
        .map(|&(g, h)| {
            let first = sh.inv(
                m.source
                    .act_right(sh.inv(h), sv.inv(m.beta[g.idx()]))
                    .expect("r(h⁻¹) = l(h) = b(g) = b(β(g)) = t(β(g)⁻¹)"),
            );
            let second = tv.inv(
                m.target
                    .act_left(th.inv(m.alpha[h.idx()]), tv.inv(g))
                    .expect("r(α(h)⁻¹) = l(h) = b(g) = t(g⁻¹)"),
            );
            d_dual
                .horizontal_arrow(first, second)
                .expect("image satisfies the corner condition of ℍ ⋈ V")
        })
        .collect();
    let beta_leg: ArrowMap = d_dual
        .vertical
        .components
        .iter()
        .map(|&(x, gamma)| {
            d.vertical_arrow(sv.inv(gamma), th.inv(x))
                .expect("(γ⁻¹, x⁻¹) agrees on endpoints")
        })
        .collect();
    MatchedPairMorphism {
        source: d.pair.clone(),
        target: d_dual.pair.clone(),
        alpha: alpha_leg,
        beta: beta_leg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::zoo;
    use crate::iso::{find_isomorphism, PairIso};
    use crate::ObjId;

    fn assert_lawful(m: &MatchedPair) {
        let v = m.validate();
        assert!(v.is_ok(), "{v}");
        let d = m.derived_identities();
        assert!(d.is_ok(), "{d}");
    }

    #[test]
    fn doubles_of_small_pairs_are_matched_pairs() {
        for m in [
            MatchedPair::initial(1).unwrap(),
            MatchedPair::initial(2).unwrap(),
            MatchedPair::terminal(2).unwrap(),
            MatchedPair::mxy(2, 2).unwrap(),
        ] {
            let d = double(&m);
            assert_lawful(&d.pair);
        }
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        let d = double(&m);
        assert_lawful(&d.pair);
        assert_eq!(d.pair.cell_count(), 36);
    }

    #[test]
    fn double_of_initial_is_terminal_and_terminal_is_its_own() {
        for n in 1..=3 {
            let d = double(&MatchedPair::initial(n).unwrap());
            let t = MatchedPair::terminal(n).unwrap();
            let iso = find_isomorphism(&d.pair, &t).expect("D(initial) ≅ terminal");
            assert!(iso.validate(&d.pair, &t).is_ok());

            let dt = double(&t);
            let iso2 = find_isomorphism(&dt.pair, &t).expect("D(terminal) ≅ terminal");
            assert!(iso2.validate(&dt.pair, &t).is_ok());
        }
    }

    #[test]
    fn double_of_mxy22_is_terminal_over_four_points() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let d = double(&m);
        let t = MatchedPair::terminal(4).unwrap();
        // Explicit endpoint-collapse map first: (γ,x) ↦ id at t(γ),
        // (g,h) ↦ the coarse arrow t(g) → r(h).
        let vd = d.pair.vertical();
        let hd = d.pair.horizontal();
        let explicit = PairIso {
            obj_map: vd.objects().collect(),
            v_map: vd.arrows().map(|a| t.vertical().id(vd.src(a))).collect(),
            h_map: hd
                .arrows()
                .map(|a| {
                    t.horizontal()
                        .hom(hd.src(a), hd.end(a))
                        .first()
                        .copied()
                        .unwrap()
                })
                .collect(),
        };
        assert!(explicit.validate(&d.pair, &t).is_ok());
    }

    #[test]
    fn gendouble_along_initial_morphism_is_the_dual() {
        for m in [
            MatchedPair::mxy(2, 2).unwrap(),
            MatchedPair::terminal(2).unwrap(),
        ] {
            let d = generalized_double(&MatchedPairMorphism::from_initial(&m).unwrap()).unwrap();
            assert_lawful(&d.pair);
            let dual = m.dual();
            // Explicit identification: (γ, x) ↦ x⁻¹ and (g, id) ↦ g.
            let explicit = PairIso {
                obj_map: d.pair.vertical().objects().collect(),
                v_map: d
                    .vertical
                    .components
                    .iter()
                    .map(|&(_, x)| m.horizontal().inv(x))
                    .collect(),
                h_map: d.horizontal.components.iter().map(|&(g, _)| g).collect(),
            };
            let report = explicit.validate(&d.pair, &dual);
            assert!(report.is_ok(), "{report}");
        }
    }

    #[test]
    fn gendouble_along_terminal_morphism_is_the_source() {
        let (s3, c3, c2) = zoo::symmetric_3();
        for m in [
            MatchedPair::mxy(2, 2).unwrap(),
            MatchedPair::group_pair(&s3, &c3, &c2).unwrap(),
        ] {
            let d = generalized_double(&MatchedPairMorphism::to_terminal(&m).unwrap()).unwrap();
            assert_lawful(&d.pair);
            let explicit = PairIso {
                obj_map: d.pair.vertical().objects().collect(),
                v_map: d
                    .vertical
                    .components
                    .iter()
                    .map(|&(gamma, _)| gamma)
                    .collect(),
                h_map: d.horizontal.components.iter().map(|&(_, h)| h).collect(),
            };
            let report = explicit.validate(&d.pair, &m);
            assert!(report.is_ok(), "{report}");
        }
    }

    #[test]
    fn easydouble_is_the_coopposite_conjugation_pair() {
        for h in [zoo::cyclic(3), zoo::symmetric_3().0] {
            let semi = MatchedPair::semi_horizontal(&h);
            let d = double(&semi);
            assert_lawful(&d.pair);
            let target = MatchedPair::conjugation(&h).coopposite();
            let iso =
                find_isomorphism(&d.pair, &target).expect("D((P,H)) ≅ coopposite conjugation pair");
            assert!(iso.validate(&d.pair, &target).is_ok());
        }
        // Similarly D((V,P)) ≅ conjugation pair of V (vertical flavour).
        let coarse = crate::FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
        let semi_v = MatchedPair::semi_vertical(&coarse);
        let d = double(&semi_v);
        assert_lawful(&d.pair);
    }

    #[test]
    fn inclusion_morphism_validates() {
        let m = MatchedPair::initial(2).unwrap();
        let d = double(&m);
        let inc = inclusion_morphism(&d);
        assert!(inc.validate().is_ok());

        let m2 = MatchedPair::mxy(2, 2).unwrap();
        let d2 = double(&m2);
        let inc2 = inclusion_morphism(&d2);
        assert!(inc2.validate().is_ok());

        // Along a non-identity morphism as well.
        let d3 = generalized_double(&MatchedPairMorphism::from_initial(&m2).unwrap()).unwrap();
        let inc3 = inclusion_morphism(&d3);
        assert!(inc3.validate().is_ok());
    }

    #[test]
    fn functoriality_triangle_maps_validate() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let id = MatchedPairMorphism::identity(&m);
        // Degenerate triangle of identities: both induced maps are identities.
        let t = Triangle::new(id.clone(), id.clone(), id.clone()).unwrap();
        let (first, second) = functoriality_maps(&t).unwrap();
        assert!(first.validate().is_ok());
        assert!(second.validate().is_ok());
        assert!(first.alpha.iter().enumerate().all(|(i, a)| a.idx() == i));
        assert!(second.beta.iter().enumerate().all(|(i, a)| a.idx() == i));

        // Terminal apex: the second induced map reduces to (ι, π) under the
        // identification D(to_terminal) ≅ (𝕍, ℍ).
        let to_t = MatchedPairMorphism::to_terminal(&m).unwrap();
        let tri = Triangle::new(id.clone(), to_t.clone(), to_t.clone()).unwrap();
        let (first, second) = functoriality_maps(&tri).unwrap();
        assert!(first.validate().is_ok());
        assert!(second.validate().is_ok());

        // Initial apex: the second induced map is the dual morphism under
        // the identifications of the initial-leg doubles.
        let from_i = MatchedPairMorphism::from_initial(&m).unwrap();
        let tri2 = Triangle::new(from_i.clone(), id, from_i.clone()).unwrap();
        let (first2, second2) = functoriality_maps(&tri2).unwrap();
        assert!(first2.validate().is_ok());
        assert!(second2.validate().is_ok());
    }

    #[test]
    fn gendouble_dual_iso_is_mutually_inverse() {
        let (s3, c3, c2) = zoo::symmetric_3();
        for m in [
            MatchedPair::initial(2).unwrap(),
            MatchedPair::mxy(2, 2).unwrap(),
            MatchedPair::group_pair(&s3, &c3, &c2).unwrap(),
        ] {
            for mor in [
                MatchedPairMorphism::identity(&m),
                MatchedPairMorphism::from_initial(&m).unwrap(),
            ] {
                let d = generalized_double(&mor).unwrap();
                let dual_mor = dual_morphism(&mor);
                assert!(dual_mor.validate().is_ok());
                let dd = generalized_double(&dual_mor).unwrap();
                let fwd = gendouble_dual_iso(&d, &dd);
                let report = fwd.validate();
                assert!(report.is_ok(), "{report}");
                assert!(fwd.is_bijective());
                let bwd = gendouble_dual_iso(&dd, &d);
                assert!(bwd.validate().is_ok());
                // Mutually inverse in both orders, on both legs.
                for (i, &a) in fwd.alpha.iter().enumerate() {
                    assert_eq!(bwd.alpha[a.idx()].idx(), i);
                }
                for (i, &b) in bwd.beta.iter().enumerate() {
                    assert_eq!(fwd.beta[b.idx()].idx(), i);
                }
            }
        }
    }

    #[test]
    fn double_dual_identification_on_identity() {
        // D(V,H) ≅ D(H,V) at the identity morphism.
        let m = MatchedPair::mxy(2, 1).unwrap();
        let d = double(&m);
        let d_dual = double(&m.dual());
        let iso = gendouble_dual_iso(&d, &d_dual);
        assert!(iso.validate().is_ok());
        assert!(iso.is_bijective());
        let _ = ObjId(0);
    }
}
