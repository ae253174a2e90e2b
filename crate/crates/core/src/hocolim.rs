//! The colimit instance of a system of homotopy colimits: Fubini
//! comparisons for diagrams over product tables, restriction maps along
//! index functors, invariance under objectwise isomorphisms, and the
//! nested-extension comparison for diagrams extended along a pair of full
//! embeddings. Everything is an ordinary (conical) colimit; every
//! comparison "isomorphism" is materialized as a morphism together with a
//! verified two-sided inverse, never as an identification.

use std::sync::Arc;

use crate::fincat::{prod_mor_ix, prod_ob_ix, TableCategory, TableFunctor};
use crate::kan::{ran_embed_fast, ran_generic, RanResult};
use crate::targetcat::{colim, colim_map, CatError, ColimResult, DiagMap, Diagram, Mor, Target};

/// The homotopy colimit in this model is the colimit itself.
pub fn hocolim(d: &Diagram) -> ColimResult {
    colim(d)
}

/// The slice functor J → I×J at a fixed object i, sending j ↦ (i, j) and
/// m ↦ (id_i, m).
pub fn slice_functor(
    product: &Arc<TableCategory>,
    i_cat: &Arc<TableCategory>,
    j_cat: &Arc<TableCategory>,
    i: usize,
) -> TableFunctor {
    let jn = j_cat.n_objects();
    let jm = j_cat.n_mors();
    TableFunctor {
        source: j_cat.clone(),
        target: product.clone(),
        ob_map: (0..jn).map(|j| prod_ob_ix(jn, i, j)).collect(),
        mor_map: (0..jm).map(|m| prod_mor_ix(jm, i_cat.ids[i], m)).collect(),
    }
}

/// Fubini data for a diagram over a product table I×J: the collapsed
/// diagram E(i) = colim_J D(i,−) over I, the colimit of E, the colimit of D
/// over the whole product, and the comparison morphism between them with
/// its verified two-sided inverse. The orientation is fixed once and for
/// all: the second factor collapses first.
#[derive(Clone, Debug)]
pub struct Fubini {
    pub slices: Vec<(Diagram, ColimResult)>,
    pub collapsed: Diagram,
    pub inner: ColimResult,
    pub outer: ColimResult,
    /// colim_I E → colim_{I×J} D
    pub to_double: Mor,
    /// colim_{I×J} D → colim_I E
    pub from_double: Mor,
}

pub fn fubini(
    d2: &Diagram,
    i_cat: &Arc<TableCategory>,
    j_cat: &Arc<TableCategory>,
) -> Result<Fubini, CatError> {
    let t = d2.target;
    let jn = j_cat.n_objects();
    let expected = i_cat.n_objects() * jn;
    if d2.index.n_objects() != expected {
        return Err(CatError::BadDiagram(
            "diagram does not live over the stated product".into(),
        ));
    }

    let slices: Vec<(Diagram, ColimResult)> = (0..i_cat.n_objects())
        .map(|i| {
            let sd = d2.precompose(&slice_functor(&d2.index, i_cat, j_cat, i));
            let c = colim(&sd);
            (sd, c)
        })
        .collect();

    let obs: Vec<_> = slices.iter().map(|(_, c)| c.vertex.clone()).collect();
    let jm = j_cat.n_mors();
    let mut mors: Vec<Mor> = Vec::with_capacity(i_cat.n_mors());
    for m in 0..i_cat.n_mors() {
        let (a, b) = (i_cat.dom(m), i_cat.cod(m));
        let comps = DiagMap {
            components: (0..jn)
                .map(|j| d2.mors[prod_mor_ix(jm, m, j_cat.ids[j])].clone())
                .collect(),
        };
        mors.push(colim_map(&slices[a].0, &slices[b].0, &comps, &slices[a].1, &slices[b].1)?);
    }
    let collapsed = Diagram { index: i_cat.clone(), target: t, obs, mors };
    collapsed.validate()?;

    let inner = colim(&collapsed);
    let outer = colim(d2);

    // legs of the double colimit, grouped one slice at a time
    let q: Vec<Mor> = (0..i_cat.n_objects())
        .map(|i| {
            let cocone: Vec<Mor> =
                (0..jn).map(|j| outer.legs[prod_ob_ix(jn, i, j)].clone()).collect();
            slices[i].1.mediate_out(&slices[i].0, &cocone)
        })
        .collect::<Result<_, _>>()?;
    let to_double = inner.mediate_out(&collapsed, &q)?;

    let back: Vec<Mor> = (0..expected)
        .map(|o| {
            let (i, j) = (o / jn, o % jn);
            t.compose(&inner.legs[i], &slices[i].1.legs[j])
        })
        .collect();
    let from_double = outer.mediate_out(d2, &back)?;

    if t.compose(&from_double, &to_double) != t.id(&inner.vertex)
        || t.compose(&to_double, &from_double) != t.id(&outer.vertex)
    {
        return Err(CatError::Universal(
            "Fubini comparison is not an isomorphism".into(),
        ));
    }
    Ok(Fubini { slices, collapsed, inner, outer, to_double, from_double })
}

/// The canonical map hocolim_I (D∘α) → hocolim_J D induced by restricting
/// the colimit cocone of D along α : I → J.
pub fn restriction_map(
    alpha: &TableFunctor,
    d: &Diagram,
    c_restricted: &ColimResult,
    c_full: &ColimResult,
) -> Result<Mor, CatError> {
    let da = d.precompose(alpha);
    let cocone: Vec<Mor> =
        (0..alpha.source.n_objects()).map(|i| c_full.legs[alpha.ob_map[i]].clone()).collect();
    c_restricted.mediate_out(&da, &cocone)
}

/// The composite hocolim_I D₁ → hocolim_I (D∘α) → hocolim_J D of the map
/// induced by σ : D₁ ⇒ D∘α with the restriction map, fused into a single
/// mediating map (equal to the two-step composite by uniqueness).
pub fn mapped_restriction(
    alpha: &TableFunctor,
    d_src: &Diagram,
    d_dst: &Diagram,
    sigma: &DiagMap,
    c_src: &ColimResult,
    c_dst: &ColimResult,
) -> Result<Mor, CatError> {
    let t = d_src.target;
    let restricted = d_dst.precompose(alpha);
    sigma.validate(d_src, &restricted)?;
    let cocone: Vec<Mor> = (0..alpha.source.n_objects())
        .map(|i| t.compose(&c_dst.legs[alpha.ob_map[i]], &sigma.components[i]))
        .collect();
    c_src.mediate_out(d_src, &cocone)
}

/// An objectwise isomorphism of diagrams must induce an isomorphism on
/// colimits; the components are required to be isomorphisms up front.
pub fn invariance_under_objectwise_iso(
    src: &Diagram,
    dst: &Diagram,
    map: &DiagMap,
    c_src: &ColimResult,
    c_dst: &ColimResult,
) -> Result<bool, CatError> {
    for (k, c) in map.components.iter().enumerate() {
        if !src.target.is_iso(c) {
            return Err(CatError::Universal(format!(
                "component {k} is not an isomorphism"
            )));
        }
    }
    let induced = colim_map(src, dst, map, c_src, c_dst)?;
    Ok(src.target.is_iso(&induced))
}

/// Over a one-object one-morphism index the colimit is the value itself,
/// on the nose: same object, identity leg.
pub fn singleton_index_identity(d: &Diagram) -> bool {
    assert_eq!(d.index.n_objects(), 1, "index must be a single point");
    let c = colim(d);
    c.vertex == d.obs[0] && c.legs[0] == d.target.id(&d.obs[0])
}

/// The colimit of the constant diagram at the terminal object is the
/// terminal object, on the nose.
pub fn constant_terminal_collapse(index: &Arc<TableCategory>, target: Target) -> bool {
    let d = Diagram::constant(index, target, &target.terminal());
    let c = colim(&d);
    c.vertex == target.terminal()
        && c.legs.iter().all(|l| *l == target.id(&target.terminal()))
}

/// The nested-extension comparison: for γ : I → A a full embedding whose
/// image receives nothing from outside, β : J → B arbitrary, and
/// F over I×J, the double colimit of Ran_{γ×β} F is isomorphic to the
/// colimit over A of Ran_γ applied to the collapsed diagram
/// i ↦ colim_B (Ran_{id×β} F)(i,−). In this model the outer extension's
/// table coincides literally with the Fubini-collapsed table; the
/// comparison is the Fubini map, and the coincidence is asserted.
pub struct NestedExtension {
    pub double: RanResult,
    pub collapsed_inner: Diagram,
    pub outer: RanResult,
    pub fubini: Fubini,
}

pub fn nested_extension_iso(
    gamma: &TableFunctor,
    beta: &TableFunctor,
    f: &Diagram,
) -> Result<NestedExtension, CatError> {
    let a_cat = &gamma.target;
    let b_cat = &beta.target;
    let i_cat = &gamma.source;
    let j_cat = &beta.source;

    let prod_src = Arc::new(crate::fincat::product_category(i_cat, j_cat));
    if f.index.name != prod_src.name {
        return Err(CatError::BadDiagram("diagram must live over I×J".into()));
    }
    let prod_dst = Arc::new(crate::fincat::product_category(a_cat, b_cat));
    let gb = gamma.product(beta, &f.index, &prod_dst);

    let embeds = |g: &TableFunctor| {
        g.injective_on_objects() && g.fully_faithful() && g.no_incoming_from_outside()
    };
    let double = if embeds(&gb) { ran_embed_fast(&gb, f)? } else { ran_generic(&gb, f)? };
    let fub = fubini(&double.diagram, a_cat, b_cat)?;

    // inner: extend along the second factor only, then collapse it
    let half = Arc::new(crate::fincat::product_category(i_cat, b_cat));
    let ib = TableFunctor::identity(i_cat).product(beta, &f.index, &half);
    let r_half = if embeds(&ib) { ran_embed_fast(&ib, f)? } else { ran_generic(&ib, f)? };
    let bn = b_cat.n_objects();
    let bm = b_cat.n_mors();
    let mut slices: Vec<(Diagram, ColimResult)> = Vec::with_capacity(i_cat.n_objects());
    for i in 0..i_cat.n_objects() {
        let sd = r_half.diagram.precompose(&slice_functor(&half, i_cat, b_cat, i));
        let c = colim(&sd);
        slices.push((sd, c));
    }
    let obs: Vec<_> = slices.iter().map(|(_, c)| c.vertex.clone()).collect();
    let mut mors: Vec<Mor> = Vec::with_capacity(i_cat.n_mors());
    for m in 0..i_cat.n_mors() {
        let (a, b) = (i_cat.dom(m), i_cat.cod(m));
        let comps = DiagMap {
            components: (0..bn)
                .map(|j| r_half.diagram.mors[prod_mor_ix(bm, m, b_cat.ids[j])].clone())
                .collect(),
        };
        mors.push(colim_map(&slices[a].0, &slices[b].0, &comps, &slices[a].1, &slices[b].1)?);
    }
    let collapsed_inner = Diagram { index: i_cat.clone(), target: f.target, obs, mors };
    collapsed_inner.validate()?;

    let outer = if embeds(gamma) {
        ran_embed_fast(gamma, &collapsed_inner)?
    } else {
        ran_generic(gamma, &collapsed_inner)?
    };
    if outer.diagram.obs != fub.collapsed.obs || outer.diagram.mors != fub.collapsed.mors {
        return Err(CatError::Universal(
            "nested extension does not reproduce the collapsed table".into(),
        ));
    }
    Ok(NestedExtension { double, collapsed_inner, outer, fubini: fub })
}
