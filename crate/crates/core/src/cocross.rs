//! Cocross effects of functors between pointed categories: crⁿF(a₁,…,aₙ)
//! is the iterated cofiber of the subset cube U ↦ F(∏_{i∈U} a_i), computed
//! as the word-poset colimit of the extended cube. The module also houses
//! an independent recursive-cofiber oracle (peel one direction at a time,
//! taking pushouts against zero) together with mutually inverse mediating
//! maps between the two routes, the diagonal cocross-effect monad, and the
//! surjection-indexed monad morphisms that make the construction a functor
//! out of the opposite category of finite surjections.

use std::rc::Rc;

use crate::cubes::{corner_ix, lambda_n, phi_n, pn, Surjection};
use crate::hocolim::hocolim;
use crate::kan::{ran_embed_fast, RanResult};
use crate::monadgen::{
    adj_l, adj_r, beta_morphism, compose_monad_morphisms, composite_monad,
    diagonal_product_adjunction, identity_monad, induced_monad_morphism,
    monad_of_module_morphism, precompose_functor, precompose_product, registry, BObFn, BMorFn,
    BetaInput, CFunctor, CNat, Evaluated, ModuleMonad, MonadInstance, MonadMorphism,
};
use crate::pnmod::{diagonal_for_surjection, BaseOb, CCat, CModule};
use crate::targetcat::{ColimResult, Diagram, Mor, Ob, Target};

// ---------------------------------------------------------------------------
// cubes of products

/// The subset cube of a tuple: U ↦ ∏_{i∈U} g(i), with the map for U ⊆ V
/// keeping shared factors and hitting new ones with the zero component.
/// The value at the full set is the full product; the empty product is the
/// zero object. These tables coincide literally with the product of the
/// coordinate-zeroing module cube, which the tests pin down.
pub fn cube_of_products(t: Target, g: &[Ob]) -> Diagram {
    let n = g.len();
    let p = pn(n);
    let members = |u: usize| -> Vec<usize> { (0..n).filter(|i| u >> i & 1 == 1).collect() };
    let obs: Vec<Ob> = (0..p.n_objects())
        .map(|u| {
            let factors: Vec<Ob> = members(u).iter().map(|&i| g[i].clone()).collect();
            t.product(&factors).0
        })
        .collect();
    let mors: Vec<Mor> = (0..p.n_mors())
        .map(|pm| {
            let (u, v) = (p.dom(pm), p.cod(pm));
            let u_factors: Vec<Ob> = members(u).iter().map(|&i| g[i].clone()).collect();
            let (pu, projs) = t.product(&u_factors);
            let legs: Vec<Mor> = members(v)
                .iter()
                .map(|&i| match members(u).iter().position(|&j| j == i) {
                    Some(k) => projs[k].clone(),
                    None => t.zero_mor(&pu, &g[i]),
                })
                .collect();
            t.tuple(&legs)
        })
        .collect();
    Diagram { index: p, target: t, obs, mors }
}

// ---------------------------------------------------------------------------
// the iterated cofiber of a cube, two ways

/// The main route: extend the subset cube to the word poset (zero objects
/// off the image, established by the extension solver) and take the
/// colimit.
pub struct Icofib {
    pub ran: RanResult,
    pub colim: ColimResult,
}

pub fn icofib(chi: &Diagram) -> Icofib {
    let n = chi.index.n_objects().trailing_zeros() as usize;
    assert_eq!(chi.index.n_objects(), 1 << n, "icofib expects a subset-poset cube");
    chi.validate().expect("cube must be a diagram");
    let ran = ran_embed_fast(&phi_n(n), chi).expect("word-poset extension");
    let colim = hocolim(&ran.diagram);
    Icofib { ran, colim }
}

/// One cofiber (pushout against the zero object) presented as the colimit
/// of a span, so both its projection and its universal property stay
/// available.
pub struct CofiberStep {
    diagram: Diagram,
    colim: ColimResult,
}

/// The cofiber of a map, as an object with projection q : cod f → C.
pub fn cofiber(t: Target, f: &Mor) -> CofiberStep {
    let lam = lambda_n(1);
    let (a, b) = (t.dom(f), t.cod(f));
    let obs = vec![a.clone(), b, t.zero_ob()];
    let mors: Vec<Mor> = (0..lam.n_mors())
        .map(|lm| {
            let (x, y) = (lam.dom(lm), lam.cod(lm));
            match (x, y) {
                _ if x == y => t.id(&obs[x]),
                (0, 1) => f.clone(),
                (0, 2) => t.to_terminal(&a),
                _ => unreachable!("the one-letter word poset has no other arrows"),
            }
        })
        .collect();
    let diagram = Diagram { index: lam, target: t, obs, mors };
    let colim = hocolim(&diagram);
    CofiberStep { diagram, colim }
}

impl CofiberStep {
    pub fn object(&self) -> &Ob {
        &self.colim.vertex
    }

    /// q : cod f → cofiber.
    pub fn q(&self) -> &Mor {
        &self.colim.legs[1]
    }

    /// Factor l : cod f → X through q, given l ∘ f = 0 (checked).
    pub fn factor(&self, l: &Mor) -> Mor {
        let t = self.diagram.target;
        let x = t.cod(l);
        let cocone = vec![
            t.zero_mor(&self.diagram.obs[0], &x),
            l.clone(),
            t.zero_mor(&t.zero_ob(), &x),
        ];
        self.colim
            .mediate_out(&self.diagram, &cocone)
            .expect("the map must kill the cofiber's image")
    }
}

/// The recursive oracle's result: the iterated cofiber peeled one
/// direction at a time, keeping every stage so that maps out of the cube's
/// top corner can be factored through the full projection.
pub enum OracleStage {
    Point { object: Ob },
    Peel { step: CofiberStep, rest: Box<OracleStage> },
}

impl OracleStage {
    pub fn object(&self) -> &Ob {
        match self {
            OracleStage::Point { object } => object,
            OracleStage::Peel { rest, .. } => rest.object(),
        }
    }

    /// The composite projection χ(full) → icofib.
    pub fn proj(&self, t: Target) -> Mor {
        match self {
            OracleStage::Point { object } => t.id(object),
            OracleStage::Peel { step, rest } => t.compose(&rest.proj(t), step.q()),
        }
    }

    /// Factor l : χ(full) → X through the composite projection; panics if
    /// any stage's image survives in l.
    pub fn factor(&self, t: Target, l: &Mor) -> Mor {
        match self {
            OracleStage::Point { .. } => l.clone(),
            OracleStage::Peel { step, rest } => rest.factor(t, &step.factor(l)),
        }
    }
}

/// Independent route to the iterated cofiber: split the cube along its
/// last direction, take pointwise cofibers of the connecting map, and
/// recurse on the induced cube of cofibers.
pub fn iterated_cofiber_oracle(chi: &Diagram) -> OracleStage {
    let t = chi.target;
    let n = chi.index.n_objects().trailing_zeros() as usize;
    assert_eq!(chi.index.n_objects(), 1 << n, "oracle expects a subset-poset cube");
    if n == 0 {
        return OracleStage::Point { object: chi.obs[0].clone() };
    }
    let p = &chi.index;
    let last = 1usize << (n - 1);
    let steps: Vec<CofiberStep> = (0..last)
        .map(|u| cofiber(t, chi.mor(p.hom(u, u | last)[0])))
        .collect();
    let sub = pn(n - 1);
    let obs: Vec<Ob> = steps.iter().map(|s| s.object().clone()).collect();
    let mors: Vec<Mor> = (0..sub.n_mors())
        .map(|pm| {
            let (u, v) = (sub.dom(pm), sub.cod(pm));
            let across = chi.mor(p.hom(u | last, v | last)[0]);
            steps[u].factor(&t.compose(steps[v].q(), across))
        })
        .collect();
    let induced = Diagram { index: sub, target: t, obs, mors };
    induced.validate().expect("cofibers of a cube map form a cube");
    let top = steps.into_iter().last().expect("a positive-dimensional cube has a top corner");
    OracleStage::Peel { step: top, rest: Box::new(iterated_cofiber_oracle(&induced)) }
}

/// Compare the two routes: equal objects and a mutually inverse pair of
/// mediating maps (main → oracle, oracle → main), each produced by the
/// other side's universal property.
pub fn oracle_comparison(ran: &RanResult, colim: &ColimResult) -> Result<(Mor, Mor), String> {
    let t = ran.diagram.target;
    let n = ran.source.index.n_objects().trailing_zeros() as usize;
    let stage = iterated_cofiber_oracle(&ran.source);
    let b = stage.object().clone();
    if b != colim.vertex {
        return Err(format!(
            "routes disagree on the object: colimit gives {:?}, recursion gives {:?}",
            colim.vertex, b
        ));
    }
    let corner = corner_ix(n);
    let cocone: Vec<Mor> = (0..ran.diagram.index.n_objects())
        .map(|x| {
            if x == corner {
                stage.proj(t)
            } else {
                t.zero_mor(ran.diagram.ob(x), &b)
            }
        })
        .collect();
    let fwd = colim
        .mediate_out(&ran.diagram, &cocone)
        .map_err(|e| format!("oracle projection is not a cocone: {e:?}"))?;
    let bwd = stage.factor(t, &colim.legs[corner]);
    if t.compose(&fwd, &bwd) != t.id(&b) {
        return Err("main∘oracle mediating composite is not the identity".into());
    }
    if t.compose(&bwd, &fwd) != t.id(&colim.vertex) {
        return Err("oracle∘main mediating composite is not the identity".into());
    }
    Ok((fwd, bwd))
}

// ---------------------------------------------------------------------------
// cocross effects

/// crⁿF(a₁,…,aₙ) with the diagram and cocone that produced it.
pub struct CocrossValue {
    pub n: usize,
    pub inputs: Vec<Ob>,
    pub object: Ob,
    ev: Rc<Evaluated>,
}

impl CocrossValue {
    /// The subset cube U ↦ F(∏_{i∈U} a_i).
    pub fn cube(&self) -> &Diagram {
        &self.ev.ran.source
    }

    /// The word-poset extension of the cube.
    pub fn extension(&self) -> &Diagram {
        &self.ev.ran.diagram
    }

    pub fn colimit(&self) -> &ColimResult {
        &self.ev.colim
    }

    /// Check this value against the recursive oracle; returns the mutually
    /// inverse mediating maps.
    pub fn check_oracle(&self) -> Result<(Mor, Mor), String> {
        oracle_comparison(&self.ev.ran, &self.ev.colim)
    }
}

/// The n-th cocross effect of a one-variable functor at an input tuple:
/// the iterated cofiber of U ↦ F(∏_{i∈U} a_i).
pub fn cocross(f0: &CFunctor, inputs: &[Ob]) -> CocrossValue {
    assert_eq!(f0.base.width, 1, "cocross effects are taken of one-variable functors");
    let n = inputs.len();
    let base = CCat::new(f0.base.target, n);
    let monad = ModuleMonad::new(CModule::theta_n(base), f0.cod);
    let f = precompose_product(f0, base);
    let ev = monad.evaluate(&f, &inputs.to_vec());
    CocrossValue { n, inputs: inputs.to_vec(), object: ev.colim.vertex.clone(), ev }
}

// ---------------------------------------------------------------------------
// the diagonal cocross-effect monad

/// The monad structure on F ↦ (a ↦ crⁿF(a,…,a)): the coordinate-zeroing
/// cube monad conjugated through the diagonal ⊣ product adjunction. The
/// zero-fold case is taken to be the identity monad; the literal composite
/// over the empty product degenerates to evaluation at the zero object,
/// which a test records.
pub fn diagonal_cocross_monad(t: Target, n: usize) -> MonadInstance {
    if n == 0 {
        return identity_monad(CCat::new(t, 1), t);
    }
    let adj = diagonal_product_adjunction(t, n);
    let theta = ModuleMonad::new(CModule::theta_n(CCat::new(t, n)), t);
    composite_monad(&adj, &theta.ops())
}

// ---------------------------------------------------------------------------
// surjection functoriality

/// The monad morphism of a surjection s : {1..n} ↠ {1..m} between the
/// diagonal cocross monads: the transformation runs crᵐF(a,…,a) →
/// crⁿF(a,…,a), built by composing the restriction morphism along the
/// preimage poset map with the repeat-coordinates module morphism, then
/// transporting across the two diagonal ⊣ product adjunctions. The
/// adjunction-compatibility hypotheses are verified on the built-in
/// functor registry before the morphism is assembled.
pub fn surjection_monad_morphism(
    s: &Surjection,
    t: Target,
) -> Result<MonadMorphism, Vec<String>> {
    let (n, m) = (s.n, s.m);
    assert!(m >= 1, "the empty diagonal monad is degenerate");
    let mf = diagonal_for_surjection(s, t);
    let theta_n_monad = ModuleMonad::new(CModule::theta_n(CCat::new(t, n)), t);
    let theta_res = ModuleMonad::new(mf.to.clone(), t);
    let theta_m_monad = ModuleMonad::new(mf.from.clone(), t);

    let g = s.poset_functor();
    let restrict = induced_monad_morphism(&g, &theta_n_monad, &theta_res);
    let repeat = monad_of_module_morphism(&mf, &theta_res, &theta_m_monad);
    let mm = compose_monad_morphisms(&repeat, &restrict);

    let adj = diagonal_product_adjunction(t, n);
    let adj2 = diagonal_product_adjunction(t, m);

    let smap = s.map.clone();
    let h_ob: BObFn = Rc::new(move |a: &BaseOb| smap.iter().map(|&j| a[j].clone()).collect());
    let smap2 = s.map.clone();
    let h_mor: BMorFn = Rc::new(move |f| smap2.iter().map(|&j| f[j].clone()).collect());

    // τ_L(G) : G∘⊓ᵐ ⇒ G∘⊓ⁿ∘Δ^(s), componentwise G applied to the tuple of
    // repeated projections ∏ y → ∏_i y_{s(i)}.
    let (adj_c, adj2_c) = (adj.clone(), adj2.clone());
    let (tl_ob, tl_mor) = (h_ob.clone(), h_mor.clone());
    let tl_map = s.map.clone();
    let tl_token = mf.token.clone();
    let tau_l: Rc<dyn Fn(&CFunctor) -> CNat> = Rc::new(move |g: &CFunctor| {
        let from = adj_l(&adj2_c, g);
        let to = precompose_functor(&adj_l(&adj_c, g), &tl_ob, &tl_mor, &tl_token, adj2_c.far);
        let gc = g.clone();
        let map = tl_map.clone();
        CNat {
            token: format!("tauL({})", g.token),
            from,
            to,
            at: Rc::new(move |y: &BaseOb| {
                let (_, projs) = t.product(y);
                let legs: Vec<Mor> = map.iter().map(|&j| projs[j].clone()).collect();
                gc.mor(&vec![t.tuple(&legs)])
            }),
        }
    });

    // τ_R(H) : H∘Δ^(s)∘Δᵐ ⇒ H∘Δⁿ, the identity componentwise since
    // repeating the coordinates of a diagonal is the wider diagonal.
    let (adj_c2, adj2_c2) = (adj.clone(), adj2.clone());
    let (tr_ob, tr_mor) = (h_ob.clone(), h_mor.clone());
    let tr_token = mf.token.clone();
    let tau_r: Rc<dyn Fn(&CFunctor) -> CNat> = Rc::new(move |hf: &CFunctor| {
        let from = adj_r(&adj2_c2, &precompose_functor(hf, &tr_ob, &tr_mor, &tr_token, adj2_c2.far));
        let to = adj_r(&adj_c2, hf);
        let hc = hf.clone();
        CNat {
            token: format!("tauR({})", hf.token),
            from,
            to,
            at: Rc::new(move |a: &BaseOb| t.id(&hc.ob(&vec![a[0].clone(); n]))),
        }
    });

    let near_functors = registry(t);
    let b_functors: Vec<CFunctor> =
        registry(t).iter().map(|f| precompose_product(f, CCat::new(t, n))).collect();
    let near_obs: Vec<BaseOb> = sample_points(t).into_iter().map(|o| vec![o]).collect();
    let b2_obs: Vec<BaseOb> = tuples(&sample_points(t), m);

    let input = BetaInput { adj, adj2, mm, tau_l, tau_r };
    beta_morphism(&input, &near_functors, &b_functors, &near_obs, &b2_obs)
}

fn sample_points(t: Target) -> Vec<Ob> {
    match t {
        Target::VectGF { .. } => (0..3).map(Ob::Dim).collect(),
        Target::PSet => (1..4).map(Ob::Size).collect(),
    }
}

fn tuples(points: &[Ob], width: usize) -> Vec<BaseOb> {
    let mut out: Vec<BaseOb> = vec![vec![]];
    for _ in 0..width {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                points.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Matrix;
    use crate::monadgen::{identity_functor, tensor_square_functor, verify_monad};
    use crate::pset::PFun;

    fn vect(p: u64) -> Target {
        Target::VectGF { p }
    }

    #[test]
    fn products_cube_matches_the_zeroing_module_cube() {
        for (t, g) in [
            (vect(2), vec![Ob::Dim(2), Ob::Dim(1)]),
            (vect(3), vec![Ob::Dim(1), Ob::Dim(2), Ob::Dim(1)]),
            (Target::PSet, vec![Ob::Size(2), Ob::Size(3)]),
        ] {
            let direct = cube_of_products(t, &g);
            direct.validate().expect("product cube is a diagram");
            assert_eq!(direct.obs[0], t.zero_ob(), "empty product is the zero object");
            assert_eq!(
                direct.obs[direct.obs.len() - 1],
                t.product(&g).0,
                "full subset gives the full product"
            );
            let base = CCat::new(t, g.len());
            let monad = ModuleMonad::new(CModule::theta_n(base), t);
            let f = precompose_product(&identity_functor(t), base);
            let via_module = monad.cube_diagram(&f, &g.to_vec());
            assert_eq!(direct.obs, via_module.obs, "objects agree literally");
            assert_eq!(direct.mors, via_module.mors, "morphisms agree literally");
        }
    }

    #[test]
    fn first_cocross_effect_is_the_functor_itself() {
        let t = vect(2);
        for d in 0..4usize {
            let cv = cocross(&identity_functor(t), &[Ob::Dim(d)]);
            assert_eq!(cv.object, Ob::Dim(d), "cofiber of 0 → V is V");
            cv.check_oracle().expect("oracle agrees on the first cocross effect");
        }
    }

    #[test]
    fn additive_functors_have_no_higher_cocross_effects() {
        let t = vect(2);
        for inputs in [
            vec![Ob::Dim(1), Ob::Dim(1)],
            vec![Ob::Dim(2), Ob::Dim(1)],
            vec![Ob::Dim(1), Ob::Dim(1), Ob::Dim(2)],
        ] {
            let cv = cocross(&identity_functor(t), &inputs);
            assert_eq!(cv.object, Ob::Dim(0), "the identity functor is additive");
            cv.check_oracle().expect("oracle agrees on the vanishing");
        }
    }

    #[test]
    fn tensor_square_second_cocross_dimension_law() {
        for p in [2u64, 3] {
            let t = vect(p);
            for v in 0..3usize {
                for w in 0..3usize {
                    let cv = cocross(&tensor_square_functor(t), &[Ob::Dim(v), Ob::Dim(w)]);
                    assert_eq!(
                        cv.object,
                        Ob::Dim(2 * v * w),
                        "cr²(V↦V⊗V)(V,W) has dimension 2·dimV·dimW"
                    );
                    cv.check_oracle().expect("oracle agrees on the tensor square");
                }
            }
        }
    }

    #[test]
    fn oracle_on_a_single_map_is_the_cokernel() {
        let t = vect(2);
        // x ↦ (x, x) into GF(2)²: rank 1, cokernel dimension 1
        let f = Mor::Mat(Matrix::new(2, 2, 1, vec![1, 1]));
        let p = pn(1);
        let obs = vec![Ob::Dim(1), Ob::Dim(2)];
        let mors: Vec<Mor> = (0..p.n_mors())
            .map(|pm| match (p.dom(pm), p.cod(pm)) {
                (u, v) if u == v => t.id(&obs[u]),
                _ => f.clone(),
            })
            .collect();
        let chi = Diagram { index: p, target: t, obs, mors };
        chi.validate().expect("interval diagram");
        let stage = iterated_cofiber_oracle(&chi);
        assert_eq!(*stage.object(), Ob::Dim(1), "cokernel of a rank-1 map into dim 2");
        let ic = icofib(&chi);
        let (fwd, bwd) = oracle_comparison(&ic.ran, &ic.colim).expect("routes agree");
        assert!(t.is_iso(&fwd) && t.is_iso(&bwd), "mediating maps are isomorphisms");
    }

    #[test]
    fn oracle_kills_constant_cubes() {
        for t in [vect(3), Target::PSet] {
            let at = match t {
                Target::PSet => Ob::Size(3),
                _ => Ob::Dim(2),
            };
            for n in 1..=2usize {
                let chi = Diagram::constant(&pn(n), t, &at);
                let stage = iterated_cofiber_oracle(&chi);
                assert_eq!(*stage.object(), t.zero_ob(), "cofiber of an identity vanishes");
                let ic = icofib(&chi);
                oracle_comparison(&ic.ran, &ic.colim).expect("routes agree on constants");
            }
        }
    }

    #[test]
    fn oracle_matches_on_a_mixed_pointed_square() {
        let t = Target::PSet;
        // a square starting at the point, mixing a collapse with an inclusion
        let collapse = Mor::Fun(PFun::new(3, 3, vec![0, 2, 0]));
        let include = Mor::Fun(PFun::new(2, 3, vec![0, 2]));
        let p = pn(2);
        let obs = vec![Ob::Size(1), Ob::Size(3), Ob::Size(2), Ob::Size(3)];
        let mors: Vec<Mor> = (0..p.n_mors())
            .map(|pm| match (p.dom(pm), p.cod(pm)) {
                (u, v) if u == v => t.id(&obs[u]),
                (0, v) => t.from_initial(&obs[v]),
                (1, 3) => collapse.clone(),
                (2, 3) => include.clone(),
                pair => unreachable!("no other arrows in the square: {pair:?}"),
            })
            .collect();
        let chi = Diagram { index: p, target: t, obs, mors };
        chi.validate().expect("square commutes");
        assert_eq!(
            *iterated_cofiber_oracle(&chi).object(),
            Ob::Size(2),
            "one point of the top corner escapes both images"
        );
        let ic = icofib(&chi);
        oracle_comparison(&ic.ran, &ic.colim).expect("pointed routes agree");
    }

    #[test]
    fn zero_fold_diagonal_monad_is_the_identity_by_convention() {
        let t = vect(2);
        let m = diagonal_cocross_monad(t, 0);
        let f = tensor_square_functor(t);
        let a = vec![Ob::Dim(2)];
        assert_eq!((m.act)(&f).ob(&a), f.ob(&a));
        assert_eq!((m.unit_at)(&f, &a), t.id(&f.ob(&a)));
    }

    #[test]
    fn zero_fold_literal_composite_evaluates_at_zero() {
        // The un-specialized composite over the empty product adjunction is
        // the constant-at-F(0) monad, not the identity monad; the public
        // constructor therefore special-cases the empty diagonal.
        let t = vect(2);
        let adj = diagonal_product_adjunction(t, 0);
        let theta = ModuleMonad::new(CModule::theta_n(CCat::new(t, 0)), t);
        let comp = composite_monad(&adj, &theta.ops());
        let f = tensor_square_functor(t);
        assert_eq!((comp.act)(&f).ob(&vec![Ob::Dim(2)]), Ob::Dim(0));
        let report = verify_monad(
            &comp,
            &[f],
            &[vec![Ob::Dim(1)], vec![Ob::Dim(2)]],
            &[vec![Mor::Mat(Matrix::new(2, 2, 1, vec![1, 1]))]],
        );
        assert!(report.is_empty(), "the constant composite is still a lawful monad: {report:?}");
    }

    #[test]
    fn one_fold_diagonal_monad_is_lawful_and_evaluates_cocross() {
        let t = vect(2);
        let m = diagonal_cocross_monad(t, 1);
        let f = tensor_square_functor(t);
        for d in 1..3usize {
            let expected = cocross(&f, &[Ob::Dim(d)]).object;
            assert_eq!((m.act)(&f).ob(&vec![Ob::Dim(d)]), expected);
        }
        let report = verify_monad(
            &m,
            &registry(t),
            &[vec![Ob::Dim(0)], vec![Ob::Dim(1)], vec![Ob::Dim(2)]],
            &[vec![Mor::Mat(Matrix::new(2, 1, 2, vec![1, 0]))]],
        );
        assert!(report.is_empty(), "one-fold diagonal monad laws: {report:?}");
    }

    #[test]
    fn two_fold_diagonal_monad_evaluates_the_diagonal_cocross() {
        let t = vect(2);
        let m = diagonal_cocross_monad(t, 2);
        let f = tensor_square_functor(t);
        for d in 1..3usize {
            let expected = cocross(&f, &[Ob::Dim(d), Ob::Dim(d)]).object;
            assert_eq!(
                (m.act)(&f).ob(&vec![Ob::Dim(d)]),
                expected,
                "the monad's functor computes cr²F on the diagonal"
            );
        }
    }

    #[test]
    fn collapse_surjection_morphism_maps_first_to_second_cocross() {
        let t = vect(2);
        let s = Surjection::new(2, 1, vec![0, 0]);
        let mm = surjection_monad_morphism(&s, t).expect("compatibility hypotheses hold");
        let f = tensor_square_functor(t);
        let a = vec![Ob::Dim(1)];
        let alpha = (mm.alpha)(&f, &a);
        assert_eq!(t.dom(&alpha), Ob::Dim(1), "the source is cr¹(V↦V⊗V)(GF(2))");
        assert_eq!(t.cod(&alpha), Ob::Dim(2), "the target is cr²(V↦V⊗V)(GF(2), GF(2))");
        let report = mm.verify(&[f], &[vec![Ob::Dim(1)], vec![Ob::Dim(2)]]);
        assert!(report.is_empty(), "surjection morphism coherence: {report:?}");
    }

    #[test]
    fn identity_surjection_gives_identity_components() {
        let t = vect(2);
        let s = Surjection::identity(2);
        let mm = surjection_monad_morphism(&s, t).expect("identity hypotheses hold");
        let f = tensor_square_functor(t);
        for d in 1..3usize {
            let a = vec![Ob::Dim(d)];
            let alpha = (mm.alpha)(&f, &a);
            assert_eq!(
                alpha,
                t.id(&t.dom(&alpha)),
                "the identity surjection induces identity components"
            );
        }
    }

    #[test]
    fn composing_with_identity_surjections_changes_nothing() {
        let t = vect(2);
        let s = Surjection::new(2, 1, vec![0, 0]);
        let m_s = surjection_monad_morphism(&s, t).expect("collapse hypotheses");
        let m_id1 = surjection_monad_morphism(&Surjection::identity(1), t).expect("id₁");
        let m_id2 = surjection_monad_morphism(&Surjection::identity(2), t).expect("id₂");
        let post = compose_monad_morphisms(&m_id1, &m_s);
        let pre = compose_monad_morphisms(&m_s, &m_id2);
        let f = tensor_square_functor(t);
        for d in 1..3usize {
            let a = vec![Ob::Dim(d)];
            let reference = (m_s.alpha)(&f, &a);
            assert_eq!(
                t.cod(&reference),
                Ob::Dim(2 * d * d),
                "the reference component lands in a second cocross effect of honest dimension"
            );
            assert_eq!((post.alpha)(&f, &a), reference, "postcomposing an identity is absorbed");
            assert_eq!((pre.alpha)(&f, &a), reference, "precomposing an identity is absorbed");
        }
    }

    #[test]
    fn surjection_morphisms_compose_contravariantly() {
        let t = vect(2);
        let s1 = Surjection::new(3, 2, vec![0, 1, 1]);
        let s2 = Surjection::new(2, 1, vec![0, 0]);
        let s12 = s2.compose(&s1);
        let m1 = surjection_monad_morphism(&s1, t).expect("s1 hypotheses");
        let m2 = surjection_monad_morphism(&s2, t).expect("s2 hypotheses");
        let direct = surjection_monad_morphism(&s12, t).expect("composite hypotheses");
        let chained = compose_monad_morphisms(&m2, &m1);
        let f = tensor_square_functor(t);
        for d in 1..3usize {
            let a = vec![Ob::Dim(d)];
            assert_eq!(
                (direct.alpha)(&f, &a),
                (chained.alpha)(&f, &a),
                "the morphism of a composite surjection is the composite morphism"
            );
        }
    }
}
