//! Morphisms of matched pairs.
//!
//! A morphism `(𝕍, ℍ) → (V, H)` over a common base is a pair of groupoid
//! morphisms `α : ℍ → H` (covariant, horizontal) and `β : V → 𝕍`
//! (contravariant, vertical) intertwining the actions:
//!
//! ```text
//! β(α(h) ▷ g) = h ▷ β(g)        α(h ◁ β(g)) = α(h) ◁ g
//! ```
//!
//! for every `(h, g) ∈ ℍ ×_{r,t} V`. Matched pairs over a fixed base form a
//! category with the initial pair `(P×P, P)` initial and `(P, P×P)`
//! terminal; composition runs the `α` legs forward and the `β` legs
//! backward.

use crate::error::{Error, Result};
use crate::groupoid::{validate_arrow_map, ArrowId, ArrowMap};
use crate::matched_pair::MatchedPair;
use crate::report::ValidationReport;

#[derive(Clone)]
pub struct MatchedPairMorphism {
    pub source: MatchedPair,
    pub target: MatchedPair,
    /// `α : ℍ → H`, stored by source arrow.
    pub alpha: ArrowMap,
    /// `β : V → 𝕍`, stored by target arrow.
    pub beta: ArrowMap,
}

impl MatchedPairMorphism {
    pub fn identity(m: &MatchedPair) -> Self {
        MatchedPairMorphism {
            source: m.clone(),
            target: m.clone(),
            alpha: m.horizontal().arrows().collect(),
            beta: m.vertical().arrows().collect(),
        }
    }

    /// The unique morphism from the initial pair:
    /// `α₀(P) = id_H P`, `β₀(g) = (t(g), b(g))`.
    pub fn from_initial(m: &MatchedPair) -> Result<Self> {
        let initial = MatchedPair::initial_over(m.vertical().object_labels())?;
        let h = m.horizontal();
        let v = m.vertical();
        let coarse = initial.vertical();
        let alpha: ArrowMap = initial
            .horizontal()
            .arrows()
            .map(|p| h.id(initial.horizontal().src(p)))
            .collect();
        let beta: ArrowMap = v
            .arrows()
            .map(|g| {
                coarse
                    .hom(v.src(g), v.end(g))
                    .first()
                    .copied()
                    .expect("coarse has an arrow for every ordered pair")
            })
            .collect();
        Ok(MatchedPairMorphism {
            source: initial,
            target: m.clone(),
            alpha,
            beta,
        })
    }

    /// The unique morphism to the terminal pair:
    /// `α₁(x) = (l(x), r(x))`, `β₁(P) = id_V P`.
    pub fn to_terminal(m: &MatchedPair) -> Result<Self> {
        let terminal = MatchedPair::terminal_over(m.vertical().object_labels())?;
        let h = m.horizontal();
        let v = m.vertical();
        let coarse = terminal.horizontal();
        let alpha: ArrowMap = h
            .arrows()
            .map(|x| {
                coarse
                    .hom(h.src(x), h.end(x))
                    .first()
                    .copied()
                    .expect("coarse has an arrow for every ordered pair")
            })
            .collect();
        let beta: ArrowMap = terminal
            .vertical()
            .arrows()
            .map(|p| v.id(terminal.vertical().src(p)))
            .collect();
        Ok(MatchedPairMorphism {
            source: m.clone(),
            target: terminal,
            alpha,
            beta,
        })
    }

    /// Composition `second ∘ first`: the `α` legs compose forward, the `β`
    /// legs backward.
    pub fn compose(second: &MatchedPairMorphism, first: &MatchedPairMorphism) -> Result<Self> {
        if first.target != second.source {
            return Err(Error::BaseMismatch(
                "composition of matched-pair morphisms with mismatched middle".into(),
            ));
        }
        let alpha: ArrowMap = first.alpha.iter().map(|&a| second.alpha[a.idx()]).collect();
        let beta: ArrowMap = second.beta.iter().map(|&b| first.beta[b.idx()]).collect();
        Ok(MatchedPairMorphism {
            source: first.source.clone(),
            target: second.target.clone(),
            alpha,
            beta,
        })
    }

    /// Check both legs and both intertwining laws exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("matched-pair-morphism");
        report.absorb(validate_arrow_map(
            self.source.horizontal(),
            self.target.horizontal(),
            &self.alpha,
        ));
        report.absorb(validate_arrow_map(
            self.target.vertical(),
            self.source.vertical(),
            &self.beta,
        ));
        if !report.is_ok() {
            return report;
        }
        let sh = self.source.horizontal();
        let tv = self.target.vertical();
        for h in sh.arrows() {
            for g in tv.arrows() {
                if sh.end(h) != tv.src(g) {
                    continue;
                }
                // β(α(h) ▷ g) = h ▷ β(g)
                let lhs = self
                    .target
                    .act_left(self.alpha[h.idx()], g)
                    .map(|a| self.beta[a.idx()]);
                let rhs = self.source.act_left(h, self.beta[g.idx()]);
                if lhs != rhs || lhs.is_none() {
                    report.record(
                        "intertwine-left",
                        format!("({}, {})", sh.label(h), tv.label(g)),
                    );
                }
                // α(h ◁ β(g)) = α(h) ◁ g
                let lhs = self
                    .source
                    .act_right(h, self.beta[g.idx()])
                    .map(|a| self.alpha[a.idx()]);
                let rhs = self.target.act_right(self.alpha[h.idx()], g);
                if lhs != rhs || lhs.is_none() {
                    report.record(
                        "intertwine-right",
                        format!("({}, {})", sh.label(h), tv.label(g)),
                    );
                }
            }
        }
        report
    }

    /// Both legs bijective.
    pub fn is_bijective(&self) -> bool {
        is_permutation(&self.alpha, self.target.horizontal().arrow_count())
            && is_permutation(&self.beta, self.source.vertical().arrow_count())
    }
}

fn is_permutation(map: &[ArrowId], target_size: usize) -> bool {
    if map.len() != target_size {
        return false;
    }
    let mut seen = vec![false; target_size];
    for a in map {
        if a.idx() >= target_size || seen[a.idx()] {
            return false;
        }
        seen[a.idx()] = true;
    }
    true
}

/// The matched pair `(V, ℍ)` pulled back along a morphism: `h ⇀ g = α(h) ▷ g`
/// and `h ↼ g = h ◁ β(g)`.
pub fn pullback_pair(m: &MatchedPairMorphism) -> MatchedPair {
    let v = m.target.vertical().clone();
    let hh = m.source.horizontal().clone();
    let alpha = m.alpha.clone();
    let beta = m.beta.clone();
    let target = m.target.clone();
    let source = m.source.clone();
    MatchedPair::from_actions(v, hh, move |h, g| {
        let left = target
            .act_left(alpha[h.idx()], g)
            .expect("r(α(h)) = r(h) = t(g)");
        let bottom = source
            .act_right(h, beta[g.idx()])
            .expect("r(h) = t(g) = t(β(g))");
        (left, bottom)
    })
    .expect("pullback pair shares the base")
}

/// Enumerate all matched-pair morphisms between two pairs by filtering the
/// products of groupoid-morphism enumerations. Desk scale only.
pub fn enumerate_pair_morphisms(
    source: &MatchedPair,
    target: &MatchedPair,
) -> Vec<MatchedPairMorphism> {
    let alphas = crate::groupoid::enumerate_morphisms(source.horizontal(), target.horizontal());
    let betas = crate::groupoid::enumerate_morphisms(target.vertical(), source.vertical());
    let mut found = Vec::new();
    for alpha in &alphas {
        for beta in &betas {
            let cand = MatchedPairMorphism {
                source: source.clone(),
                target: target.clone(),
                alpha: alpha.clone(),
                beta: beta.clone(),
            };
            if cand.validate().is_ok() {
                found.push(cand);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::zoo;

    #[test]
    fn canonical_morphisms_validate() {
        for m in [
            MatchedPair::initial(3).unwrap(),
            MatchedPair::terminal(2).unwrap(),
            MatchedPair::mxy(2, 2).unwrap(),
        ] {
            assert!(MatchedPairMorphism::identity(&m).validate().is_ok());
            assert!(MatchedPairMorphism::from_initial(&m)
                .unwrap()
                .validate()
                .is_ok());
            assert!(MatchedPairMorphism::to_terminal(&m)
                .unwrap()
                .validate()
                .is_ok());
        }
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        assert!(MatchedPairMorphism::from_initial(&m)
            .unwrap()
            .validate()
            .is_ok());
        assert!(MatchedPairMorphism::to_terminal(&m)
            .unwrap()
            .validate()
            .is_ok());
    }

    #[test]
    fn composition_laws() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let id = MatchedPairMorphism::identity(&m);
        let f = MatchedPairMorphism::from_initial(&m).unwrap();
        let t = MatchedPairMorphism::to_terminal(&m).unwrap();
        // id ∘ f = f and t ∘ id = t.
        let idf = MatchedPairMorphism::compose(&id, &f).unwrap();
        assert_eq!(idf.alpha, f.alpha);
        assert_eq!(idf.beta, f.beta);
        let tid = MatchedPairMorphism::compose(&t, &id).unwrap();
        assert_eq!(tid.alpha, t.alpha);
        assert_eq!(tid.beta, t.beta);
        // The composite initial → M → terminal is the unique morphism
        // initial → terminal (uniqueness by exhaustive enumeration).
        let tf = MatchedPairMorphism::compose(&t, &f).unwrap();
        assert!(tf.validate().is_ok());
        let all = enumerate_pair_morphisms(&tf.source, &tf.target);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].alpha, tf.alpha);
        assert_eq!(all[0].beta, tf.beta);
    }

    #[test]
    fn initial_and_terminal_morphisms_are_unique() {
        for m in [
            MatchedPair::mxy(2, 2).unwrap(),
            MatchedPair::terminal(2).unwrap(),
        ] {
            let f = MatchedPairMorphism::from_initial(&m).unwrap();
            let all_from = enumerate_pair_morphisms(&f.source, &m);
            assert_eq!(all_from.len(), 1);
            assert_eq!(all_from[0].alpha, f.alpha);
            assert_eq!(all_from[0].beta, f.beta);
            let t = MatchedPairMorphism::to_terminal(&m).unwrap();
            let all_to = enumerate_pair_morphisms(&m, &t.target);
            assert_eq!(all_to.len(), 1);
            assert_eq!(all_to[0].alpha, t.alpha);
            assert_eq!(all_to[0].beta, t.beta);
        }
    }

    #[test]
    fn composition_is_associative_on_selfmaps() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let selfmaps = enumerate_pair_morphisms(&m, &m);
        assert!(!selfmaps.is_empty());
        for a in &selfmaps {
            for b in &selfmaps {
                for c in &selfmaps {
                    let left = MatchedPairMorphism::compose(
                        &MatchedPairMorphism::compose(a, b).unwrap(),
                        c,
                    )
                    .unwrap();
                    let right = MatchedPairMorphism::compose(
                        a,
                        &MatchedPairMorphism::compose(b, c).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(left.alpha, right.alpha);
                    assert_eq!(left.beta, right.beta);
                }
            }
        }
    }

    #[test]
    fn pullback_pairs_validate() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        // Along the identity: the original pair.
        let p = pullback_pair(&MatchedPairMorphism::identity(&m));
        assert_eq!(p, m);
        // Along (α₀, β₀): ℍ = P acts trivially.
        let p0 = pullback_pair(&MatchedPairMorphism::from_initial(&m).unwrap());
        assert!(p0.validate().is_ok());
        assert!(p0.derived_identities().is_ok());
        // Along (α₁, β₁).
        let p1 = pullback_pair(&MatchedPairMorphism::to_terminal(&m).unwrap());
        assert!(p1.validate().is_ok());
        assert!(p1.derived_identities().is_ok());
    }

    #[test]
    fn broken_intertwining_is_reported() {
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        let mut bad = MatchedPairMorphism::identity(&m);
        // Collapse α to the trivial endomorphism of C₂: still a groupoid
        // morphism, but e ▷ g = g disagrees with (01) ▷ g on non-identities.
        bad.alpha = vec![ArrowId(0), ArrowId(0)];
        let report = bad.validate();
        assert!(!report.is_ok());
        assert!(report.cites("intertwine"));
    }
}
