//! Right Kan extensions over table categories.
//!
//! Two constructions of the same universal object: the generic pointwise
//! formula (a limit over each comma category) and a closed-form fast path
//! along full embeddings whose image receives no morphisms from outside.
//! Both carry the counit and enough per-point data to solve the universal
//! property, and the fast path is required to agree with the generic one
//! *literally* — same objects, same matrices/functions — which the solver
//! conventions in `gf` and `targetcat` are tuned to guarantee.

use std::collections::HashMap;
use std::sync::Arc;

use crate::fincat::{comma_category, TableCategory, TableFunctor};
use crate::targetcat::{lim, CatError, DiagMap, Diagram, LimResult, Mor};

/// Per-object data kept by the generic construction: the comma category
/// (a ↓ γ), its objects as (source object, structure morphism) pairs, the
/// reindexed diagram over it, and the computed limit.
#[derive(Clone, Debug)]
pub struct CommaPoint {
    pub cat: Arc<TableCategory>,
    pub objs: Vec<(usize, usize)>,
    pub diagram: Diagram,
    pub limit: LimResult,
    pos: HashMap<(usize, usize), usize>,
}

/// How a [`RanResult`] was computed.
#[derive(Clone, Debug)]
pub enum RanCore {
    /// Pointwise limits, one [`CommaPoint`] per object of the codomain.
    Generic { points: Vec<CommaPoint> },
    /// Closed form along a full embedding: `preimage[a]` is the source
    /// object sent to `a`, if any; all other objects carry the terminal
    /// object of the target.
    Fast { preimage: Vec<Option<usize>> },
}

/// A right Kan extension Ran_γ F together with its counit ε : Ran∘γ ⇒ F.
#[derive(Clone, Debug)]
pub struct RanResult {
    pub gamma: TableFunctor,
    pub source: Diagram,
    pub diagram: Diagram,
    /// counit component at each source object i: Ran(γ(i)) → F(i).
    pub counit: Vec<Mor>,
    pub core: RanCore,
}

/// Pointwise right Kan extension: value at `a` is the limit of F over
/// (a ↓ γ), morphism action by mediating restricted cones, counit by
/// projecting at the comma object (i, id).
pub fn ran_generic(gamma: &TableFunctor, f: &Diagram) -> Result<RanResult, CatError> {
    assert_eq!(
        gamma.source.name, f.index.name,
        "diagram must live over the functor's source"
    );
    let a_cat = &gamma.target;
    let t = f.target;

    let mut points: Vec<CommaPoint> = Vec::with_capacity(a_cat.n_objects());
    for a in 0..a_cat.n_objects() {
        let (cat, proj, objs) = comma_category(a, gamma);
        let diagram = f.precompose(&proj);
        let limit = lim(&diagram);
        let pos = objs.iter().enumerate().map(|(k, &o)| (o, k)).collect();
        points.push(CommaPoint { cat, objs, diagram, limit, pos });
    }

    let obs: Vec<_> = points.iter().map(|p| p.limit.vertex.clone()).collect();
    let mut mors: Vec<Mor> = Vec::with_capacity(a_cat.n_mors());
    for m in 0..a_cat.n_mors() {
        let (a, a2) = (a_cat.dom(m), a_cat.cod(m));
        if points[a2].objs.is_empty() {
            // limit over the empty category: the unique map to the terminal
            mors.push(t.to_terminal(&points[a].limit.vertex));
            continue;
        }
        // restrict the cone of Ran(a) along (i, f) ↦ (i, f∘m)
        let cone: Vec<Mor> = points[a2]
            .objs
            .iter()
            .map(|&(i, f2)| {
                let fm = a_cat.compose(f2, m).expect("comma restriction composable");
                points[a].limit.legs[points[a].pos[&(i, fm)]].clone()
            })
            .collect();
        mors.push(points[a2].limit.mediate_in(&points[a2].diagram, &cone)?);
    }
    let diagram = Diagram { index: a_cat.clone(), target: t, obs, mors };
    diagram.validate()?;

    let counit: Vec<Mor> = (0..gamma.source.n_objects())
        .map(|i| {
            let a = gamma.ob_map[i];
            let id_a = a_cat.id_of(a);
            points[a].limit.legs[points[a].pos[&(i, id_a)]].clone()
        })
        .collect();
    let out = RanResult {
        gamma: gamma.clone(),
        source: f.clone(),
        diagram,
        counit,
        core: RanCore::Generic { points },
    };
    out.check_counit_naturality()?;
    Ok(out)
}

/// Closed-form right Kan extension along a full embedding γ that is
/// injective on objects and receives no morphisms into its image from
/// outside: F's values sit on the image and the terminal object fills the
/// remaining objects, with unique-to-terminal morphisms.
pub fn ran_embed_fast(gamma: &TableFunctor, f: &Diagram) -> Result<RanResult, CatError> {
    assert_eq!(
        gamma.source.name, f.index.name,
        "diagram must live over the functor's source"
    );
    assert!(gamma.injective_on_objects(), "fast path needs an embedding");
    assert!(gamma.fully_faithful(), "fast path needs a full embedding");
    assert!(
        gamma.no_incoming_from_outside(),
        "fast path needs an image closed against incoming morphisms"
    );
    let a_cat = &gamma.target;
    let t = f.target;

    let mut preimage: Vec<Option<usize>> = vec![None; a_cat.n_objects()];
    for i in 0..gamma.source.n_objects() {
        preimage[gamma.ob_map[i]] = Some(i);
    }
    let obs: Vec<_> = preimage
        .iter()
        .map(|pre| match pre {
            Some(i) => f.obs[*i].clone(),
            None => t.terminal(),
        })
        .collect();
    let mut mors: Vec<Mor> = Vec::with_capacity(a_cat.n_mors());
    for m in 0..a_cat.n_mors() {
        let (a, a2) = (a_cat.dom(m), a_cat.cod(m));
        let mor = match (preimage[a], preimage[a2]) {
            (Some(i), Some(i2)) => {
                let pre = gamma
                    .source
                    .hom(i, i2)
                    .into_iter()
                    .find(|&mm| gamma.mor_map[mm] == m)
                    .expect("full embedding: morphism between image objects has a preimage");
                f.mors[pre].clone()
            }
            (_, None) => t.to_terminal(&obs[a]),
            (None, Some(_)) => unreachable!("no morphisms into the image from outside"),
        };
        mors.push(mor);
    }
    let diagram = Diagram { index: a_cat.clone(), target: t, obs, mors };
    diagram.validate()?;

    let counit: Vec<Mor> = (0..gamma.source.n_objects()).map(|i| t.id(&f.obs[i])).collect();
    Ok(RanResult {
        gamma: gamma.clone(),
        source: f.clone(),
        diagram,
        counit,
        core: RanCore::Fast { preimage },
    })
}

impl RanResult {
    /// ε must be natural: ε_{i'} ∘ Ran(γ m) = F(m) ∘ ε_i for every m: i → i'.
    fn check_counit_naturality(&self) -> Result<(), CatError> {
        let i_cat = &self.gamma.source;
        let t = self.source.target;
        for m in 0..i_cat.n_mors() {
            let (i, i2) = (i_cat.dom(m), i_cat.cod(m));
            let lhs = t.compose(&self.counit[i2], &self.diagram.mors[self.gamma.mor_map[m]]);
            let rhs = t.compose(&self.source.mors[m], &self.counit[i]);
            if lhs != rhs {
                return Err(CatError::Universal(format!(
                    "counit not natural at {}",
                    i_cat.mors[m].name
                )));
            }
        }
        Ok(())
    }

    /// Do the two extensions agree object-for-object, morphism-for-morphism
    /// and counit-for-counit? Used to certify the fast path.
    pub fn literally_equal(&self, other: &RanResult) -> bool {
        self.diagram.obs == other.diagram.obs
            && self.diagram.mors == other.diagram.mors
            && self.counit == other.counit
    }

    /// Universal property: given G over the codomain and a transformation
    /// δ: G∘γ ⇒ F (one component per source object), produce the unique
    /// σ: G ⇒ Ran_γ F with ε ∘ (σ∗γ) = δ. The factorization identity and
    /// the naturality of σ are verified before returning.
    pub fn factorize(&self, g: &Diagram, delta: &[Mor]) -> Result<DiagMap, CatError> {
        let i_cat = &self.gamma.source;
        let a_cat = &self.gamma.target;
        let t = self.source.target;
        if delta.len() != i_cat.n_objects() {
            return Err(CatError::Universal("wrong number of δ components".into()));
        }
        // δ must itself be natural: δ_{i'} ∘ G(γ m) = F(m) ∘ δ_i.
        for m in 0..i_cat.n_mors() {
            let (i, i2) = (i_cat.dom(m), i_cat.cod(m));
            let lhs = t.compose(&delta[i2], &g.mors[self.gamma.mor_map[m]]);
            let rhs = t.compose(&self.source.mors[m], &delta[i]);
            if lhs != rhs {
                return Err(CatError::Universal(format!(
                    "δ not natural at {}",
                    i_cat.mors[m].name
                )));
            }
        }

        let components: Vec<Mor> = match &self.core {
            RanCore::Generic { points } => {
                let mut out = Vec::with_capacity(a_cat.n_objects());
                for (a, point) in points.iter().enumerate() {
                    if point.objs.is_empty() {
                        out.push(t.to_terminal(&g.obs[a]));
                        continue;
                    }
                    let cone: Vec<Mor> = point
                        .objs
                        .iter()
                        .map(|&(i, f)| t.compose(&delta[i], &g.mors[f]))
                        .collect();
                    out.push(point.limit.mediate_in(&point.diagram, &cone)?);
                }
                out
            }
            RanCore::Fast { preimage } => preimage
                .iter()
                .enumerate()
                .map(|(a, pre)| match pre {
                    Some(i) => delta[*i].clone(),
                    None => t.to_terminal(&g.obs[a]),
                })
                .collect(),
        };
        let sigma = DiagMap { components };
        sigma.validate(g, &self.diagram)?;
        for i in 0..i_cat.n_objects() {
            let got = t.compose(&self.counit[i], &sigma.components[self.gamma.ob_map[i]]);
            if got != delta[i] {
                return Err(CatError::Universal(format!(
                    "ε-factorization fails at source object {}",
                    i_cat.objects[i]
                )));
            }
        }
        Ok(sigma)
    }
}

/// The transformation between Kan extensions induced by a commuting
/// reindexing square v∘γ = γ₂∘u, via the universal property:
/// v*(Ran_{γ₂} G) ⇒ Ran_γ (u*G), with components over γ's codomain.
///
/// `inner` must be Ran_{γ₂}(G) and `outer` must be Ran_γ(G∘u); both are
/// supplied by the caller so each can use whichever construction it likes.
pub fn ran_transform(
    u: &TableFunctor,
    v: &TableFunctor,
    inner: &RanResult,
    outer: &RanResult,
) -> Result<DiagMap, CatError> {
    let gamma = &outer.gamma;
    let gamma2 = &inner.gamma;
    let vg = v.compose(gamma);
    let g2u = gamma2.compose(u);
    if vg.ob_map != g2u.ob_map || vg.mor_map != g2u.mor_map {
        return Err(CatError::Universal("reindexing square does not commute".into()));
    }
    let restricted = inner.source.precompose(u);
    if restricted.obs != outer.source.obs || restricted.mors != outer.source.mors {
        return Err(CatError::Universal(
            "outer extension is not taken of the restricted diagram".into(),
        ));
    }
    let g_along_v = inner.diagram.precompose(v);
    let delta: Vec<Mor> = (0..gamma.source.n_objects())
        .map(|j| inner.counit[u.ob_map[j]].clone())
        .collect();
    outer.factorize(&g_along_v, &delta)
}
