//! The diagonal groupoid `V ⋈ H`, exact factorizations, and semidirect
//! products.
//!
//! Arrows of `V ⋈ H` are corner pairs `(f, y)` with `b(f) = l(y)`, composed
//! by stacking corners diagonally and filling in with a cell:
//! `(f, y)(h, z) = (f (y ▷ h), (y ◁ h) z)`. Both `V` and `H` embed, and the
//! pair of embeddings is an exact factorization; conversely every exact
//! factorization induces a matched pair via `x g = (x ▷ g)(x ◁ g)`, and the
//! two constructions are mutually inverse (checked table-for-table in the
//! tests).

use crate::error::{Error, Result};
use crate::groupoid::{same_base, validate_arrow_map, ArrowId, ArrowMap, FiniteGroupoid};
use crate::matched_pair::MatchedPair;
use std::collections::HashMap;

/// `V ⋈ H` together with the pair decomposition of each arrow.
pub struct DiagonalGroupoid {
    pub groupoid: FiniteGroupoid,
    /// Dense arrow id → `(f ∈ V, y ∈ H)`.
    pub components: Vec<(ArrowId, ArrowId)>,
    index: HashMap<(ArrowId, ArrowId), ArrowId>,
}

impl DiagonalGroupoid {
    pub fn arrow(&self, f: ArrowId, y: ArrowId) -> Option<ArrowId> {
        self.index.get(&(f, y)).copied()
    }

    /// Embedding `V → V ⋈ H`, `f ↦ (f, id_H b(f))`.
    pub fn embed_vertical(&self, m: &MatchedPair, f: ArrowId) -> ArrowId {
        let e = m.horizontal().id(m.vertical().end(f));
        self.arrow(f, e).expect("corner pair exists")
    }

    /// Embedding `H → V ⋈ H`, `y ↦ (id_V l(y), y)`.
    pub fn embed_horizontal(&self, m: &MatchedPair, y: ArrowId) -> ArrowId {
        let e = m.vertical().id(m.horizontal().src(y));
        self.arrow(e, y).expect("corner pair exists")
    }
}

/// Build the diagonal groupoid of a matched pair.
pub fn diagonal_groupoid(m: &MatchedPair) -> DiagonalGroupoid {
    let v = m.vertical();
    let h = m.horizontal();
    let mut components = Vec::new();
    let mut index = HashMap::new();
    for f in v.arrows() {
        for y in h.arrows() {
            if v.end(f) == h.src(y) {
                index.insert((f, y), ArrowId(components.len() as u32));
                components.push((f, y));
            }
        }
    }
    let n = components.len();
    let mut comp = vec![None; n * n];
    for (i, &(f, y)) in components.iter().enumerate() {
        for (j, &(g, z)) in components.iter().enumerate() {
            // Composable iff r(y) = t(g); fill in with the cell at (y, g).
            if h.end(y) != v.src(g) {
                continue;
            }
            let yg = m.act_left(y, g).expect("composable pair");
            let yq = m.act_right(y, g).expect("composable pair");
            let first = v.compose(f, yg).expect("b(f) = l(y) = t(y▷g)");
            let second = h.compose(yq, z).expect("r(y◁g) = b(g) = l(z)");
            comp[i * n + j] = index.get(&(first, second)).copied();
        }
    }
    let identity: Vec<ArrowId> = v.objects().map(|p| index[&(v.id(p), h.id(p))]).collect();
    let inverse: Vec<ArrowId> = components
        .iter()
        .map(|&(f, y)| {
            let yi = h.inv(y);
            let fi = v.inv(f);
            let nf = m.act_left(yi, fi).expect("r(y⁻¹) = l(y) = b(f) = t(f⁻¹)");
            let ny = m.act_right(yi, fi).expect("same composability");
            index[&(nf, ny)]
        })
        .collect();
    let groupoid = FiniteGroupoid::from_parts(
        v.object_labels().to_vec(),
        components
            .iter()
            .map(|&(f, y)| format!("({},{})", v.label(f), h.label(y)))
            .collect(),
        components.iter().map(|&(f, _)| v.src(f)).collect(),
        components.iter().map(|&(_, y)| h.end(y)).collect(),
        comp,
        identity,
        inverse,
    );
    DiagonalGroupoid {
        groupoid,
        components,
        index,
    }
}

/// An exact factorization of an ambient groupoid `D` into wide subgroupoids
/// `V` and `H`: the composition map `V ×ₑ,ₛ H → D` is a bijection. The
/// decomposition table is stored, not recomputed.
pub struct Factorization {
    pub ambient: FiniteGroupoid,
    pub vertical: FiniteGroupoid,
    pub v_embed: Vec<ArrowId>,
    pub horizontal: FiniteGroupoid,
    pub h_embed: Vec<ArrowId>,
    /// Ambient arrow → `(f ∈ V, y ∈ H)` with `embed(f)·embed(y)` the arrow.
    pub decomposition: Vec<(ArrowId, ArrowId)>,
}

impl Factorization {
    /// Check exactness by counting decompositions of every ambient arrow:
    /// the witness of failure is the first arrow with count ≠ 1.
    pub fn new(
        ambient: &FiniteGroupoid,
        v_arrows: &[ArrowId],
        h_arrows: &[ArrowId],
    ) -> Result<Factorization> {
        let (vertical, v_embed) = ambient.wide_subgroupoid(v_arrows)?;
        let (horizontal, h_embed) = ambient.wide_subgroupoid(h_arrows)?;
        let mut decomposition: Vec<Option<(ArrowId, ArrowId)>> = vec![None; ambient.arrow_count()];
        for (i, &fa) in v_embed.iter().enumerate() {
            for (j, &ya) in h_embed.iter().enumerate() {
                if let Some(p) = ambient.compose(fa, ya) {
                    if decomposition[p.idx()].is_some() {
                        return Err(Error::NotExact {
                            arrow: ambient.label(p).to_string(),
                            count: 2,
                        });
                    }
                    decomposition[p.idx()] = Some((ArrowId(i as u32), ArrowId(j as u32)));
                }
            }
        }
        if let Some(p) = ambient.arrows().find(|p| decomposition[p.idx()].is_none()) {
            return Err(Error::NotExact {
                arrow: ambient.label(p).to_string(),
                count: 0,
            });
        }
        Ok(Factorization {
            ambient: ambient.clone(),
            vertical,
            v_embed,
            horizontal,
            h_embed,
            decomposition: decomposition.into_iter().map(|d| d.unwrap()).collect(),
        })
    }

    pub fn decompose(&self, a: ArrowId) -> (ArrowId, ArrowId) {
        self.decomposition[a.idx()]
    }
}

/// The canonical exact factorization of `V ⋈ H` by the embedded copies of
/// `V` and `H`.
pub fn canonical_factorization(m: &MatchedPair) -> Factorization {
    let d = diagonal_groupoid(m);
    let v_arrows: Vec<ArrowId> = m
        .vertical()
        .arrows()
        .map(|f| d.embed_vertical(m, f))
        .collect();
    let h_arrows: Vec<ArrowId> = m
        .horizontal()
        .arrows()
        .map(|y| d.embed_horizontal(m, y))
        .collect();
    Factorization::new(&d.groupoid, &v_arrows, &h_arrows)
        .expect("the diagonal factors exactly through its canonical copies")
}

/// Recover the matched pair of an exact factorization: for `(x, g)` with
/// `r(x) = t(g)` the unique decomposition `x g = (x ▷ g)(x ◁ g)` defines the
/// actions.
pub fn matched_pair_from_factorization(fac: &Factorization) -> MatchedPair {
    let amb = fac.ambient.clone();
    let v_embed = fac.v_embed.clone();
    let h_embed = fac.h_embed.clone();
    let decomposition = fac.decomposition.clone();
    MatchedPair::from_actions(fac.vertical.clone(), fac.horizontal.clone(), move |x, g| {
        let p = amb
            .compose(h_embed[x.idx()], v_embed[g.idx()])
            .expect("r(x) = t(g) in the ambient groupoid");
        decomposition[p.idx()]
    })
    .expect("wide subgroupoids share the ambient base")
}

/// Semidirect product `V ⋉ N`: the diagonal groupoid of the bundle-action
/// pair. The projection `(g, n) ↦ g` is a morphism with section
/// `g ↦ (g, id b(g))`.
pub fn semidirect_product(
    v: &FiniteGroupoid,
    n: &FiniteGroupoid,
    act: impl Fn(ArrowId, ArrowId) -> ArrowId,
) -> Result<(MatchedPair, DiagonalGroupoid)> {
    let pair = MatchedPair::bundle_action_right(v, n, act)?;
    let d = diagonal_groupoid(&pair);
    Ok((pair, d))
}

/// Split-morphism reconstruction: given a morphism `α : G → K` over the base
/// with a section `σ` (both given as arrow maps), `K` acts on `ker α` by
/// `n ◁ k = σ(k)⁻¹ n σ(k)` and `G ≅ K ⋉ ker α`. Returns the semidirect
/// product and the isomorphism `K ⋉ N → G` as an arrow map.
pub fn split_reconstruction(
    g: &FiniteGroupoid,
    k: &FiniteGroupoid,
    alpha: &ArrowMap,
    sigma: &ArrowMap,
) -> Result<(DiagonalGroupoid, ArrowMap)> {
    let a_check = validate_arrow_map(g, k, alpha);
    if !a_check.is_ok() {
        return Err(Error::NotOverBase(format!("{a_check}")));
    }
    let s_check = validate_arrow_map(k, g, sigma);
    if !s_check.is_ok() {
        return Err(Error::NotOverBase(format!("{s_check}")));
    }
    for x in k.arrows() {
        if alpha[sigma[x.idx()].idx()] != x {
            return Err(Error::HypothesisViolation {
                condition: "σ is a section of α".into(),
                witness: k.label(x).to_string(),
            });
        }
    }
    let (nker, embed) = crate::groupoid::kernel(g, k, alpha)?;
    let mut back = vec![None; g.arrow_count()];
    for (i, &a) in embed.iter().enumerate() {
        back[a.idx()] = Some(ArrowId(i as u32));
    }
    let gg = g.clone();
    let embed2 = embed.clone();
    let sigma2 = sigma.clone();
    let (pair, d) = semidirect_product(k, &nker, move |n, kk| {
        let s = sigma2[kk.idx()];
        let conj = gg
            .compose_chain(&[gg.inv(s), embed2[n.idx()], s])
            .expect("kernel arrows conjugate along sections");
        back[conj.idx()].expect("conjugation preserves the kernel")
    })?;
    let _ = pair;
    // (k, n) ↦ σ(k)·n in G is the isomorphism K ⋉ N ≅ G.
    let iso: ArrowMap = d
        .components
        .iter()
        .map(|&(kk, n)| {
            g.compose(sigma[kk.idx()], embed[n.idx()])
                .expect("b(k) = fiber of n")
        })
        .collect();
    Ok((d, iso))
}

/// Verify the universal property of the diagonal: morphisms `α : H → F`,
/// `β : V → F` over the base satisfying `α(y)β(h) = β(y ▷ h)α(y ◁ h)` on
/// every cell extend uniquely to `V ⋈ H → F` via `(f, y) ↦ β(f)α(y)`.
/// Returns the mediating arrow map. A violated hypothesis is reported with
/// its witness cell.
pub fn check_universal_diagonal(
    m: &MatchedPair,
    target: &FiniteGroupoid,
    alpha: &ArrowMap,
    beta: &ArrowMap,
) -> Result<ArrowMap> {
    let a_check = validate_arrow_map(m.horizontal(), target, alpha);
    if !a_check.is_ok() {
        return Err(Error::NotOverBase(format!("{a_check}")));
    }
    let b_check = validate_arrow_map(m.vertical(), target, beta);
    if !b_check.is_ok() {
        return Err(Error::NotOverBase(format!("{b_check}")));
    }
    if !same_base(m.vertical(), target) {
        return Err(Error::BaseMismatch("universal-diagonal target".into()));
    }
    // Hypothesis: cells become commutative squares in the target.
    for &c in m.cells() {
        let (y, h) = (c.top, c.right);
        let lhs = target.compose(alpha[y.idx()], beta[h.idx()]);
        let rhs = target.compose(beta[m.cell_left(c).idx()], alpha[m.cell_bottom(c).idx()]);
        if lhs != rhs || lhs.is_none() {
            return Err(Error::HypothesisViolation {
                condition: "α(y)β(h) = β(y▷h)α(y◁h)".into(),
                witness: m.describe_cell(c),
            });
        }
    }
    let d = diagonal_groupoid(m);
    let mediating: ArrowMap = d
        .components
        .iter()
        .map(|&(f, y)| {
            target
                .compose(beta[f.idx()], alpha[y.idx()])
                .expect("b(f) = l(y)")
        })
        .collect();
    let check = validate_arrow_map(&d.groupoid, target, &mediating);
    if !check.is_ok() {
        return Err(Error::HypothesisViolation {
            condition: format!("mediating map fails to be a morphism: {check}"),
            witness: "diagonal".into(),
        });
    }
    // Uniqueness: any morphism commuting with both embeddings is forced on
    // (f, y) = (f, id)(id, y); verify the embeddings are recovered.
    for f in m.vertical().arrows() {
        assert_eq!(mediating[d.embed_vertical(m, f).idx()], beta[f.idx()]);
    }
    for y in m.horizontal().arrows() {
        assert_eq!(mediating[d.embed_horizontal(m, y).idx()], alpha[y.idx()]);
    }
    Ok(mediating)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::zoo;

    #[test]
    fn diagonal_of_initial_is_coarse() {
        let m = MatchedPair::initial(3).unwrap();
        let d = diagonal_groupoid(&m);
        assert!(d.groupoid.validate().is_ok());
        // One arrow per ordered pair of objects, composing like coarse.
        assert_eq!(d.groupoid.arrow_count(), 9);
        for p in d.groupoid.objects() {
            for q in d.groupoid.objects() {
                assert_eq!(d.groupoid.hom(p, q).len(), 1);
            }
        }
    }

    #[test]
    fn diagonal_of_semi_vertical_is_v() {
        let coarse = FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
        let m = MatchedPair::semi_vertical(&coarse);
        let d = diagonal_groupoid(&m);
        // y is always an identity, so (f, id) ↔ f is an isomorphism.
        assert_eq!(d.groupoid.arrow_count(), coarse.arrow_count());
        for f in coarse.arrows() {
            for g in coarse.arrows() {
                let df = d.embed_vertical(&m, f);
                let dg = d.embed_vertical(&m, g);
                let lhs = d.groupoid.compose(df, dg);
                let rhs = coarse.compose(f, g).map(|fg| d.embed_vertical(&m, fg));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn s3_diagonal_recovers_the_group_table() {
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        let d = diagonal_groupoid(&m);
        assert!(d.groupoid.validate().is_ok());
        assert_eq!(d.groupoid.arrow_count(), 6);
        // (f, y) ↦ f·y in S₃ matches the diagonal's multiplication table.
        let to_s3: Vec<ArrowId> = d
            .components
            .iter()
            .map(|&(f, y)| s3.compose(c3[f.idx()], c2[y.idx()]).unwrap())
            .collect();
        for a in d.groupoid.arrows() {
            for b in d.groupoid.arrows() {
                let lhs = d.groupoid.compose(a, b).map(|ab| to_s3[ab.idx()]);
                let rhs = s3.compose(to_s3[a.idx()], to_s3[b.idx()]);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn embeddings_into_the_diagonal_are_injective_morphisms() {
        let (s3, c3, c2) = zoo::symmetric_3();
        for m in [
            MatchedPair::mxy(2, 2).unwrap(),
            MatchedPair::group_pair(&s3, &c3, &c2).unwrap(),
        ] {
            let d = diagonal_groupoid(&m);
            let v_embed: ArrowMap = m
                .vertical()
                .arrows()
                .map(|f| d.embed_vertical(&m, f))
                .collect();
            let h_embed: ArrowMap = m
                .horizontal()
                .arrows()
                .map(|y| d.embed_horizontal(&m, y))
                .collect();
            assert!(validate_arrow_map(m.vertical(), &d.groupoid, &v_embed).is_ok());
            assert!(validate_arrow_map(m.horizontal(), &d.groupoid, &h_embed).is_ok());
            let mut seen = vec![false; d.groupoid.arrow_count()];
            for &a in v_embed.iter().chain(h_embed.iter().filter(|a| {
                // identities land in both copies; skip the duplicates
                !d.groupoid.is_identity(**a)
            })) {
                assert!(!seen[a.idx()], "embedding not injective");
                seen[a.idx()] = true;
            }
        }
    }

    #[test]
    fn factorization_round_trip_is_the_identity() {
        for m in [
            MatchedPair::initial(2).unwrap(),
            MatchedPair::terminal(3).unwrap(),
            MatchedPair::mxy(2, 2).unwrap(),
        ] {
            let fac = canonical_factorization(&m);
            let back = matched_pair_from_factorization(&fac);
            assert_eq!(back, m);
        }
    }

    #[test]
    fn group_pair_agrees_with_generic_factorization() {
        let (s3, c3, c2) = zoo::symmetric_3();
        let direct = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        let fac = Factorization::new(&s3, &c3, &c2).unwrap();
        let via_fact = matched_pair_from_factorization(&fac);
        assert_eq!(direct, via_fact);
    }

    #[test]
    fn coarse_factors_through_itself_and_discrete() {
        // D = coarse({P,Q}), V = D, H = discrete: recovers the semi pair.
        let coarse = FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
        let all: Vec<ArrowId> = coarse.arrows().collect();
        let ids: Vec<ArrowId> = coarse.objects().map(|p| coarse.id(p)).collect();
        let fac = Factorization::new(&coarse, &all, &ids).unwrap();
        let m = matched_pair_from_factorization(&fac);
        assert_eq!(m, MatchedPair::semi_vertical(&coarse));
    }

    #[test]
    fn semidirect_c2_on_c3_by_inversion_is_s3() {
        // V = C₂ acting on N = C₃ by inversion.
        let c2 = zoo::cyclic(2);
        let c3 = zoo::cyclic(3);
        let (_, d) =
            semidirect_product(&c2, &c3, |n, g| if g == ArrowId(0) { n } else { c3.inv(n) })
                .unwrap();
        assert!(d.groupoid.validate().is_ok());
        assert_eq!(d.groupoid.arrow_count(), 6);
        // Non-abelian of order 6: exhibit two non-commuting arrows.
        let witnesses = d
            .groupoid
            .arrows()
            .flat_map(|a| d.groupoid.arrows().map(move |b| (a, b)))
            .filter(|&(a, b)| d.groupoid.compose(a, b) != d.groupoid.compose(b, a))
            .count();
        assert!(witnesses > 0);
    }

    #[test]
    fn trivial_bundle_gives_back_v() {
        // The isotropy bundle of coarse(2) has identity fibers, so the only
        // action transports the fiber identity along each arrow.
        let coarse = FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
        let (iso, _) = coarse.isotropy_bundle();
        let iso2 = iso.clone();
        let cg = coarse.clone();
        let (_, d) = semidirect_product(&coarse, &iso, move |_n, g| iso2.id(cg.end(g))).unwrap();
        assert_eq!(d.groupoid.arrow_count(), coarse.arrow_count());
    }

    #[test]
    fn split_morphism_reconstruction() {
        // G = S₃, K = C₂ via the sign-like morphism with section.
        let (s3, _c3, c2sub) = zoo::symmetric_3();
        let c2 = zoo::cyclic(2);
        // α: e,(012),(021) ↦ 0; transpositions ↦ 1.
        let alpha: ArrowMap = (0..6)
            .map(|i| if i < 3 { ArrowId(0) } else { ArrowId(1) })
            .collect();
        let sigma: ArrowMap = c2sub.clone();
        let (d, iso) = split_reconstruction(&s3, &c2, &alpha, &sigma).unwrap();
        assert_eq!(d.groupoid.arrow_count(), 6);
        // iso is a bijective morphism K ⋉ N → G.
        let mut seen: Vec<bool> = vec![false; 6];
        for &a in &iso {
            seen[a.idx()] = true;
        }
        assert!(seen.iter().all(|&b| b));
        assert!(validate_arrow_map(&d.groupoid, &s3, &iso).is_ok());
    }

    #[test]
    fn universal_diagonal_with_canonical_inclusions() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let d = diagonal_groupoid(&m);
        let alpha: ArrowMap = m
            .horizontal()
            .arrows()
            .map(|y| d.embed_horizontal(&m, y))
            .collect();
        let beta: ArrowMap = m
            .vertical()
            .arrows()
            .map(|f| d.embed_vertical(&m, f))
            .collect();
        let mediating = check_universal_diagonal(&m, &d.groupoid, &alpha, &beta).unwrap();
        // Mediating morphism is the identity on V ⋈ H.
        assert!(mediating.iter().enumerate().all(|(i, &a)| a.idx() == i));
    }

    #[test]
    fn universal_diagonal_rejects_bad_data() {
        // β into the discrete target cannot even be a morphism when V has
        // arrows between distinct objects.
        let m = MatchedPair::initial(2).unwrap();
        let target = FiniteGroupoid::discrete(&["P0", "P1"]).unwrap();
        let alpha: ArrowMap = m.horizontal().arrows().collect();
        let beta: ArrowMap = m
            .vertical()
            .arrows()
            .map(|f| target.id(m.vertical().src(f)))
            .collect();
        assert!(check_universal_diagonal(&m, &target, &alpha, &beta).is_err());
    }

    #[test]
    fn universal_diagonal_group_case() {
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        // α, β the subgroup embeddings into S₃ itself.
        let mediating = check_universal_diagonal(&m, &s3, &c2, &c3).unwrap();
        // The mediating morphism is the canonical bijection V ⋈ H ≅ S₃.
        let mut seen = [false; 6];
        for &a in &mediating {
            seen[a.idx()] = true;
        }
        assert!(seen.iter().all(|&b| b));
    }
}
