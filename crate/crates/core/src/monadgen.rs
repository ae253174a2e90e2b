//! Monads on functor categories Fun(A, M) with A a finite power of a target
//! instance: the cube-extension monad of a subset-poset module (evaluate the
//! functor on the module's cube, extend along the poset-of-words embedding,
//! take the colimit), monad morphisms induced by module morphisms and by
//! strict monoidal poset maps, composite monads across adjunctions, the
//! β-construction transporting a monad morphism through compatible
//! adjunctions, and sampled law verifiers for all of them.
//!
//! Everything is verified by literal morphism equality: the colimit and Kan
//! solvers return canonical representatives, so two parallel maps agree iff
//! their matrices (or pointed functions) agree entry by entry.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use crate::cubes::{
    corner_ix, diamond_functor, diamond_ob, intersection_functor, lambda_extension, lambda_n,
    lambda_square, phi_n, pn, pn_square, word_digits,
};
use crate::fincat::{TableCategory, TableFunctor};
use crate::hocolim::{fubini, hocolim, restriction_map};
use crate::kan::{ran_embed_fast, RanResult};
use crate::pnmod::{BaseMor, BaseOb, CCat, CModule, CModuleMorphism};
use crate::targetcat::{colim_map, ColimResult, Diagram, Mor, Ob, Target};

pub type ObFn = Rc<dyn Fn(&BaseOb) -> Ob>;
pub type MorFn = Rc<dyn Fn(&BaseMor) -> Mor>;
pub type BObFn = Rc<dyn Fn(&BaseOb) -> BaseOb>;
pub type BMorFn = Rc<dyn Fn(&BaseMor) -> BaseMor>;

// ---------------------------------------------------------------------------
// functors and natural transformations with computable evaluators

/// A functor from a finite power of a target instance into a target
/// instance, given by evaluators. The token is the functor's identity for
/// memoization: distinct functors must carry distinct tokens, and every
/// combinator here derives tokens canonically from its inputs.
#[derive(Clone)]
pub struct CFunctor {
    pub base: CCat,
    pub cod: Target,
    pub token: String,
    pub ob: ObFn,
    pub mor: MorFn,
}

impl CFunctor {
    pub fn ob(&self, a: &BaseOb) -> Ob {
        (self.ob)(a)
    }

    pub fn mor(&self, f: &BaseMor) -> Mor {
        (self.mor)(f)
    }
}

/// A natural transformation between two functors on the same base, given by
/// its components.
#[derive(Clone)]
pub struct CNat {
    pub from: CFunctor,
    pub to: CFunctor,
    pub at: Rc<dyn Fn(&BaseOb) -> Mor>,
    pub token: String,
}

impl CNat {
    pub fn at(&self, a: &BaseOb) -> Mor {
        (self.at)(a)
    }
}

/// Functoriality check on supplied composable pairs.
pub fn check_functor(f: &CFunctor, pairs: &[(BaseMor, BaseMor)]) -> Vec<String> {
    let mut out = Vec::new();
    let t = f.cod;
    for (k, (g2, g1)) in pairs.iter().enumerate() {
        if f.base.dom(g2) != f.base.cod(g1) {
            out.push(format!("pair {k} for {} is not composable", f.token));
            continue;
        }
        let lhs = f.mor(&f.base.compose(g2, g1));
        let rhs = t.compose(&f.mor(g2), &f.mor(g1));
        if lhs != rhs {
            out.push(format!("{} breaks composition on pair {k}", f.token));
        }
        let a = f.base.dom(g1);
        if f.mor(&f.base.id(&a)) != t.id(&f.ob(&a)) {
            out.push(format!("{} breaks identities on pair {k}", f.token));
        }
    }
    out
}

/// Naturality check on supplied base morphisms.
pub fn check_nat(nu: &CNat, mors: &[BaseMor]) -> Vec<String> {
    let mut out = Vec::new();
    let t = nu.from.cod;
    for (k, f) in mors.iter().enumerate() {
        let (a, b) = (nu.from.base.dom(f), nu.from.base.cod(f));
        let lhs = t.compose(&nu.at(&b), &nu.from.mor(f));
        let rhs = t.compose(&nu.to.mor(f), &nu.at(&a));
        if lhs != rhs {
            out.push(format!("{} is not natural on morphism {k}", nu.token));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// a small registry of generator functors

/// The identity functor on a width-one base.
pub fn identity_functor(t: Target) -> CFunctor {
    CFunctor {
        base: CCat::new(t, 1),
        cod: t,
        token: "id".into(),
        ob: Rc::new(|a: &BaseOb| a[0].clone()),
        mor: Rc::new(|f: &BaseMor| f[0].clone()),
    }
}

/// The constant functor at the zero object.
pub fn constant_zero_functor(base: CCat, cod: Target) -> CFunctor {
    CFunctor {
        base,
        cod,
        token: "const0".into(),
        ob: Rc::new(move |_| cod.zero_ob()),
        mor: Rc::new(move |_| cod.id(&cod.zero_ob())),
    }
}

/// The square under the monoidal product: V ↦ V ⊗ V for vector spaces,
/// S ↦ S ∧ S for pointed sets.
pub fn tensor_square_functor(t: Target) -> CFunctor {
    let ob: ObFn = match t {
        Target::VectGF { .. } => Rc::new(|a: &BaseOb| Ob::Dim(a[0].dim() * a[0].dim())),
        Target::PSet => {
            Rc::new(|a: &BaseOb| Ob::Size(crate::pset::smash_square_size(a[0].size())))
        }
    };
    let mor: MorFn = match t {
        Target::VectGF { .. } => Rc::new(|f: &BaseMor| Mor::Mat(f[0].mat().kron(f[0].mat()))),
        Target::PSet => Rc::new(|f: &BaseMor| Mor::Fun(crate::pset::smash_square_map(f[0].fun()))),
    };
    CFunctor { base: CCat::new(t, 1), cod: t, token: "sq".into(), ob, mor }
}

/// The generator functors used by the law-verification sweeps.
pub fn registry(t: Target) -> Vec<CFunctor> {
    vec![identity_functor(t), constant_zero_functor(CCat::new(t, 1), t), tensor_square_functor(t)]
}

/// F₀ ∘ ⊓ : compose a width-one functor with the n-fold product.
pub fn precompose_product(f0: &CFunctor, far: CCat) -> CFunctor {
    assert_eq!(f0.base.width, 1, "only width-one functors compose with the product");
    assert_eq!(f0.base.target, far.target, "product must land in the functor's base");
    let t = far.target;
    let inner_ob = f0.ob.clone();
    let inner_mor = f0.mor.clone();
    CFunctor {
        base: far,
        cod: f0.cod,
        token: format!("{}∘prod{}", f0.token, far.width),
        ob: Rc::new(move |a: &BaseOb| inner_ob(&vec![t.product(a).0])),
        mor: Rc::new(move |f: &BaseMor| inner_mor(&vec![t.product_mor(f)])),
    }
}

/// G ∘ h for a base functor h given by evaluators.
pub fn precompose_functor(
    g: &CFunctor,
    h_ob: &BObFn,
    h_mor: &BMorFn,
    h_token: &str,
    new_base: CCat,
) -> CFunctor {
    let (go, gm) = (g.ob.clone(), g.mor.clone());
    let (ho, hm) = (h_ob.clone(), h_mor.clone());
    CFunctor {
        base: new_base,
        cod: g.cod,
        token: format!("({})∘{}", g.token, h_token),
        ob: Rc::new(move |a| go(&ho(a))),
        mor: Rc::new(move |f| gm(&hm(f))),
    }
}

// ---------------------------------------------------------------------------
// monads as evaluator bundles

/// A monad on Fun(base, codomain): the underlying endofunctor (on functors
/// and on natural transformations) plus unit and multiplication component
/// factories. Law checks are sampled literal morphism equalities.
#[derive(Clone)]
pub struct MonadInstance {
    pub base: CCat,
    pub codomain: Target,
    pub token: String,
    pub act: Rc<dyn Fn(&CFunctor) -> CFunctor>,
    pub map_nat: Rc<dyn Fn(&CNat) -> CNat>,
    pub unit_at: Rc<dyn Fn(&CFunctor, &BaseOb) -> Mor>,
    pub mult_at: Rc<dyn Fn(&CFunctor, &BaseOb) -> Mor>,
}

/// The identity monad.
pub fn identity_monad(base: CCat, codomain: Target) -> MonadInstance {
    MonadInstance {
        base,
        codomain,
        token: "Id".into(),
        act: Rc::new(|f| f.clone()),
        map_nat: Rc::new(|nu| nu.clone()),
        unit_at: Rc::new(move |f, a| codomain.id(&f.ob(a))),
        mult_at: Rc::new(move |f, a| codomain.id(&f.ob(a))),
    }
}

/// Sampled monad-law verification: both unit triangles and associativity at
/// every (functor, object) pair, and naturality of η and μ at every sampled
/// base morphism. Returns one line per failure; empty means all laws hold.
pub fn verify_monad(
    m: &MonadInstance,
    functors: &[CFunctor],
    objects: &[BaseOb],
    mors: &[BaseMor],
) -> Vec<String> {
    let mut out = Vec::new();
    let t = m.codomain;
    for f in functors {
        let tf = (m.act)(f);
        let ttf = (m.act)(&tf);
        let eta = unit_nat(m, f);
        let mu = mult_nat(m, f);
        let t_eta = (m.map_nat)(&eta);
        let t_mu = (m.map_nat)(&mu);
        for a in objects {
            let w = format!("({}, {})", f.token, m.base.ob_token(a));
            let id_tf = t.id(&tf.ob(a));
            let mu_a = mu.at(a);
            if t.compose(&mu_a, &(m.unit_at)(&tf, a)) != id_tf {
                out.push(format!("left unit law fails at {w}"));
            }
            if t.compose(&mu_a, &t_eta.at(a)) != id_tf {
                out.push(format!("right unit law fails at {w}"));
            }
            let lhs = t.compose(&mu_a, &(m.mult_at)(&tf, a));
            let rhs = t.compose(&mu_a, &t_mu.at(a));
            if lhs != rhs {
                out.push(format!("associativity fails at {w}"));
            }
        }
        for (k, bf) in mors.iter().enumerate() {
            let (a, b) = (m.base.dom(bf), m.base.cod(bf));
            let tf_f = tf.mor(bf);
            if t.compose(&tf_f, &eta.at(&a)) != t.compose(&eta.at(&b), &f.mor(bf)) {
                out.push(format!("unit not natural at ({}, morphism {k})", f.token));
            }
            if t.compose(&tf_f, &mu.at(&a)) != t.compose(&mu.at(&b), &ttf.mor(bf)) {
                out.push(format!("multiplication not natural at ({}, morphism {k})", f.token));
            }
        }
    }
    out
}

/// η as a natural transformation F ⇒ TF.
pub fn unit_nat(m: &MonadInstance, f: &CFunctor) -> CNat {
    let u = m.unit_at.clone();
    let fc = f.clone();
    CNat {
        from: f.clone(),
        to: (m.act)(f),
        at: Rc::new(move |a| u(&fc, a)),
        token: format!("eta({})", f.token),
    }
}

/// μ as a natural transformation T²F ⇒ TF.
pub fn mult_nat(m: &MonadInstance, f: &CFunctor) -> CNat {
    let mu = m.mult_at.clone();
    let fc = f.clone();
    let tf = (m.act)(f);
    CNat {
        from: (m.act)(&tf),
        to: tf,
        at: Rc::new(move |a| mu(&fc, a)),
        token: format!("mu({})", f.token),
    }
}

/// Naturality of η and μ in the functor argument: for ν : F ⇒ F′, the
/// squares T(ν)∘η_F = η_{F′}∘ν and T(ν)∘μ_F = μ_{F′}∘T(T(ν)) at sampled
/// objects.
pub fn monad_naturality_in_functor(
    m: &MonadInstance,
    nu: &CNat,
    objects: &[BaseOb],
) -> Vec<String> {
    let mut out = Vec::new();
    let t = m.codomain;
    let t_nu = (m.map_nat)(nu);
    let tt_nu = (m.map_nat)(&t_nu);
    for a in objects {
        let w = format!("({}, {})", nu.token, m.base.ob_token(a));
        let lhs = t.compose(&t_nu.at(a), &(m.unit_at)(&nu.from, a));
        let rhs = t.compose(&(m.unit_at)(&nu.to, a), &nu.at(a));
        if lhs != rhs {
            out.push(format!("unit not natural in the functor at {w}"));
        }
        let lhs = t.compose(&t_nu.at(a), &(m.mult_at)(&nu.from, a));
        let rhs = t.compose(&(m.mult_at)(&nu.to, a), &tt_nu.at(a));
        if lhs != rhs {
            out.push(format!("multiplication not natural in the functor at {w}"));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// the cube-extension monad of a subset-poset module

/// One memoized evaluation T F(a): the extended word-poset diagram with its
/// counit data, and its colimit.
pub struct Evaluated {
    pub ran: RanResult,
    pub colim: ColimResult,
}

struct MonadEngine {
    module: CModule,
    cod: Target,
    phi: TableFunctor,
    lambda: Arc<TableCategory>,
    token: String,
    memo: RefCell<HashMap<(String, String), Rc<Evaluated>>>,
    mult_memo: RefCell<HashMap<(String, String), Mor>>,
}

/// The monad of a subset-poset module on Fun(A, M):
/// T F(a) = colim over the word poset of the extension of U ↦ F(θ(a, U)).
/// The unit is the colimit leg at the all-ones corner; the multiplication
/// is an explicitly materialized comparison chain (see `mult_at`).
#[derive(Clone)]
pub struct ModuleMonad {
    inner: Rc<MonadEngine>,
}

fn same_tables(x: &Diagram, y: &Diagram) -> bool {
    x.obs == y.obs && x.mors == y.mors
}

fn word_to_mask(x: usize, n: usize) -> Option<usize> {
    let mut mask = 0usize;
    for (i, d) in word_digits(x, n).into_iter().enumerate() {
        match d {
            0 => {}
            1 => mask |= 1 << i,
            _ => return None,
        }
    }
    Some(mask)
}

impl ModuleMonad {
    pub fn new(module: CModule, cod: Target) -> ModuleMonad {
        let n = module.n;
        let token = format!("Cube[{}]", module.token);
        ModuleMonad {
            inner: Rc::new(MonadEngine {
                module,
                cod,
                phi: phi_n(n),
                lambda: lambda_n(n),
                token,
                memo: RefCell::new(HashMap::new()),
                mult_memo: RefCell::new(HashMap::new()),
            }),
        }
    }

    pub fn module(&self) -> &CModule {
        &self.inner.module
    }

    pub fn codomain(&self) -> Target {
        self.inner.cod
    }

    /// The subset-poset diagram U ↦ F(θ(a, U)) with connector images as its
    /// morphisms.
    pub fn cube_diagram(&self, f: &CFunctor, a: &BaseOb) -> Diagram {
        let md = &self.inner.module;
        let p = pn(md.n);
        let obs = (0..p.n_objects()).map(|u| f.ob(&md.theta_ob(a, u))).collect();
        let mors = (0..p.n_mors())
            .map(|pm| f.mor(&md.theta_connect(a, p.dom(pm), p.cod(pm))))
            .collect();
        Diagram { index: p, target: self.inner.cod, obs, mors }
    }

    /// Evaluate T F at an object, memoized by (functor token, object token).
    pub fn evaluate(&self, f: &CFunctor, a: &BaseOb) -> Rc<Evaluated> {
        let key = (f.token.clone(), self.inner.module.base.ob_token(a));
        if let Some(hit) = self.inner.memo.borrow().get(&key) {
            return hit.clone();
        }
        let chi = self.cube_diagram(f, a);
        chi.validate().expect("module cube must be a diagram");
        let ran = ran_embed_fast(&self.inner.phi, &chi).expect("word-poset extension");
        let colim = hocolim(&ran.diagram);
        let val = Rc::new(Evaluated { ran, colim });
        self.inner.memo.borrow_mut().insert(key, val.clone());
        val
    }

    /// The map between evaluations induced by compatible components
    /// δ_U : E_src(φU) → χ_dst(U), through the extension's universal
    /// property and the colimit functoriality.
    fn induced(&self, src: &Evaluated, dst: &Evaluated, delta: Vec<Mor>) -> Mor {
        let sigma = dst.ran.factorize(&src.ran.diagram, &delta).expect("cone factors");
        colim_map(&src.ran.diagram, &dst.ran.diagram, &sigma, &src.colim, &dst.colim)
            .expect("induced colimit map")
    }

    /// T F as a functor value.
    pub fn act(&self, f: &CFunctor) -> CFunctor {
        assert_eq!(f.base, self.inner.module.base, "functor must live on the module's base");
        assert_eq!(f.cod, self.inner.cod, "functor must land in the monad's codomain");
        let me = self.clone();
        let me2 = self.clone();
        let fc = f.clone();
        let fc2 = f.clone();
        let full = (1usize << self.inner.module.n) - 1;
        CFunctor {
            base: f.base,
            cod: f.cod,
            token: format!("T({})", f.token),
            ob: Rc::new(move |a| me.evaluate(&fc, a).colim.vertex.clone()),
            mor: Rc::new(move |bf| {
                let md = &me2.inner.module;
                let t = me2.inner.cod;
                let (a, b) = (md.base.dom(bf), md.base.cod(bf));
                let ea = me2.evaluate(&fc2, &a);
                let eb = me2.evaluate(&fc2, &b);
                let delta = (0..=full)
                    .map(|u| t.compose(&fc2.mor(&md.theta_mor(bf, u)), &ea.ran.counit[u]))
                    .collect();
                me2.induced(&ea, &eb, delta)
            }),
        }
    }

    /// T ν for a natural transformation ν.
    pub fn map_nat(&self, nu: &CNat) -> CNat {
        let me = self.clone();
        let nuc = nu.clone();
        let full = (1usize << self.inner.module.n) - 1;
        CNat {
            from: self.act(&nu.from),
            to: self.act(&nu.to),
            token: format!("T({})", nu.token),
            at: Rc::new(move |a| {
                let md = &me.inner.module;
                let t = me.inner.cod;
                let ea = me.evaluate(&nuc.from, a);
                let eb = me.evaluate(&nuc.to, a);
                let delta = (0..=full)
                    .map(|u| t.compose(&nuc.at(&md.theta_ob(a, u)), &ea.ran.counit[u]))
                    .collect();
                me.induced(&ea, &eb, delta)
            }),
        }
    }

    /// η_F(a): the colimit leg at the all-ones corner, whose diagram value
    /// is F(θ(a, full)) = F(a).
    pub fn unit_at(&self, f: &CFunctor, a: &BaseOb) -> Mor {
        let e = self.evaluate(f, a);
        e.colim.legs[corner_ix(self.inner.module.n)].clone()
    }

    /// μ_F(a): T(TF)(a) → TF(a). For n ≤ 2 the comparison chain is fully
    /// materialized: the double extension over the squared word poset is
    /// built, identified literally with the diamond-restricted extension,
    /// collapsed by the verified double-colimit comparison, and finished by
    /// the restriction map along the diamond. For larger n the same map is
    /// produced as a single mediating morphism out of the iterated colimit
    /// (equal to the chain by colimit uniqueness; the two routes are
    /// compared exhaustively in tests at small n).
    pub fn mult_at(&self, f: &CFunctor, a: &BaseOb) -> Mor {
        let key = (f.token.clone(), self.inner.module.base.ob_token(a));
        if let Some(hit) = self.inner.mult_memo.borrow().get(&key) {
            return hit.clone();
        }
        let mu = if self.inner.module.n <= 2 {
            self.mult_materialized(f, a)
        } else {
            self.mult_fused(f, a)
        };
        self.inner.mult_memo.borrow_mut().insert(key, mu.clone());
        mu
    }

    pub fn mult_materialized(&self, f: &CFunctor, a: &BaseOb) -> Mor {
        let n = self.inner.module.n;
        let t = self.inner.cod;
        let tf = self.act(f);
        let e = self.evaluate(f, a);
        let e2 = self.evaluate(&tf, a);

        // the squared-cube extension of (U, V) ↦ F(θ(a, U ∩ V))
        let chi2 = e.ran.source.precompose(&intersection_functor(n, &pn_square(n)));
        let phi2 = self.inner.phi.product(&self.inner.phi, &pn_square(n), &lambda_square(n));
        let d2 = ran_embed_fast(&phi2, &chi2).expect("squared word-poset extension");

        // literal identification with the diamond restriction of E
        let dia = diamond_functor(n, &lambda_square(n));
        assert!(
            same_tables(&d2.diagram, &e.ran.diagram.precompose(&dia)),
            "squared extension must equal the diamond restriction of the single extension"
        );

        // collapse the second factor; the collapsed diagram is literally the
        // extension that computes T(TF)(a)
        let fub = fubini(&d2.diagram, &lambda_n(n), &lambda_n(n))
            .expect("double colimit comparison must invert");
        assert!(
            same_tables(&fub.collapsed, &e2.ran.diagram),
            "slicewise collapse must reproduce the iterated extension"
        );
        assert!(
            fub.inner.vertex == e2.colim.vertex && fub.inner.legs == e2.colim.legs,
            "collapsed colimit must reproduce the iterated evaluation"
        );

        let restr = restriction_map(&dia, &e.ran.diagram, &fub.outer, &e.colim)
            .expect("diamond restriction map");
        t.compose(&restr, &fub.to_double)
    }

    pub fn mult_fused(&self, f: &CFunctor, a: &BaseOb) -> Mor {
        let n = self.inner.module.n;
        let t = self.inner.cod;
        let md = &self.inner.module;
        let tf = self.act(f);
        let e = self.evaluate(f, a);
        let e2 = self.evaluate(&tf, a);
        let legs: Vec<Mor> = (0..self.inner.lambda.n_objects())
            .map(|x| match word_to_mask(x, n) {
                Some(u) => {
                    let eu = self.evaluate(f, &md.theta_ob(a, u));
                    let cocone: Vec<Mor> = (0..self.inner.lambda.n_objects())
                        .map(|y| e.colim.legs[diamond_ob(x, y, n)].clone())
                        .collect();
                    eu.colim
                        .mediate_out(&eu.ran.diagram, &cocone)
                        .expect("diamond legs form a cocone on the inner evaluation")
                }
                None => t.from_initial(&e.colim.vertex),
            })
            .collect();
        e2.colim
            .mediate_out(&e2.ran.diagram, &legs)
            .expect("fused multiplication cocone")
    }

    /// The evaluator bundle for this monad.
    pub fn ops(&self) -> MonadInstance {
        let m1 = self.clone();
        let m2 = self.clone();
        let m3 = self.clone();
        let m4 = self.clone();
        MonadInstance {
            base: self.inner.module.base,
            codomain: self.inner.cod,
            token: self.inner.token.clone(),
            act: Rc::new(move |f| m1.act(f)),
            map_nat: Rc::new(move |nu| m2.map_nat(nu)),
            unit_at: Rc::new(move |f, a| m3.unit_at(f, a)),
            mult_at: Rc::new(move |f, a| m4.mult_at(f, a)),
        }
    }
}

// ---------------------------------------------------------------------------
// monad morphisms

/// A morphism of monads (C₁, T₁) → (C₂, T₂) between functor categories
/// Fun(base₁, M) and Fun(base₂, M). The functor part is precomposition by a
/// base functor h : base₂ → base₁; the transformation part has components
/// α_G(a) : T₂(G∘h)(a) → T₁(G)(h a), natural in both, subject to the unit
/// and multiplication coherence diagrams checked by `verify`.
#[derive(Clone)]
pub struct MonadMorphism {
    pub from: MonadInstance,
    pub to: MonadInstance,
    pub h_ob: BObFn,
    pub h_mor: BMorFn,
    pub h_token: String,
    pub alpha: Rc<dyn Fn(&CFunctor, &BaseOb) -> Mor>,
    pub token: String,
}

impl MonadMorphism {
    /// The functor part applied to a functor value: G ↦ G∘h.
    pub fn transport(&self, g: &CFunctor) -> CFunctor {
        precompose_functor(g, &self.h_ob, &self.h_mor, &self.h_token, self.to.base)
    }

    /// α_G as a natural transformation T₂(G∘h) ⇒ (T₁G)∘h.
    pub fn alpha_nat(&self, g: &CFunctor) -> CNat {
        let al = self.alpha.clone();
        let gc = g.clone();
        CNat {
            from: (self.to.act)(&self.transport(g)),
            to: self.transport(&(self.from.act)(g)),
            at: Rc::new(move |a| al(&gc, a)),
            token: format!("alpha[{}]({})", self.token, g.token),
        }
    }

    /// Sampled coherence: the unit and multiplication diagrams of a monad
    /// morphism at every (functor, object) pair.
    pub fn verify(&self, functors: &[CFunctor], objects: &[BaseOb]) -> Vec<String> {
        let mut out = Vec::new();
        let t = self.from.codomain;
        for g in functors {
            let gh = self.transport(g);
            let t1g = (self.from.act)(g);
            let a_nat = self.alpha_nat(g);
            let t2_a = (self.to.map_nat)(&a_nat);
            let a_t1g = self.alpha_nat(&t1g);
            for a in objects {
                let w = format!("({}, {})", g.token, self.to.base.ob_token(a));
                let ha = (self.h_ob)(a);
                let alpha_a = (self.alpha)(g, a);
                let lhs = t.compose(&alpha_a, &(self.to.unit_at)(&gh, a));
                let rhs = (self.from.unit_at)(g, &ha);
                if lhs != rhs {
                    out.push(format!("unit coherence fails at {w} for {}", self.token));
                }
                let lhs = t.compose(&alpha_a, &(self.to.mult_at)(&gh, a));
                let rhs = t.compose(
                    &(self.from.mult_at)(g, &ha),
                    &t.compose(&a_t1g.at(a), &t2_a.at(a)),
                );
                if lhs != rhs {
                    out.push(format!("multiplication coherence fails at {w} for {}", self.token));
                }
            }
        }
        out
    }
}

/// The identity morphism on a monad.
pub fn identity_monad_morphism(m: &MonadInstance) -> MonadMorphism {
    let t = m.codomain;
    let act = m.act.clone();
    MonadMorphism {
        from: m.clone(),
        to: m.clone(),
        h_ob: Rc::new(|a| a.clone()),
        h_mor: Rc::new(|f| f.clone()),
        h_token: "id".into(),
        alpha: Rc::new(move |g, a| t.id(&act(g).ob(a))),
        token: format!("id[{}]", m.token),
    }
}

/// Composition: `second ∘ first`, with first : (C₁,T₁) → (C₂,T₂) and
/// second : (C₂,T₂) → (C₃,T₃).
pub fn compose_monad_morphisms(second: &MonadMorphism, first: &MonadMorphism) -> MonadMorphism {
    let t = first.from.codomain;
    let (f_ob, f_mor) = (first.h_ob.clone(), first.h_mor.clone());
    let (s_ob, s_mor) = (second.h_ob.clone(), second.h_mor.clone());
    let h_ob: BObFn = Rc::new(move |a| f_ob(&s_ob(a)));
    let h_mor: BMorFn = Rc::new(move |f| f_mor(&s_mor(f)));
    let first_c = first.clone();
    let second_c = second.clone();
    MonadMorphism {
        from: first.from.clone(),
        to: second.to.clone(),
        h_ob,
        h_mor,
        h_token: format!("{}∘{}", first.h_token, second.h_token),
        token: format!("{}∘{}", second.token, first.token),
        alpha: Rc::new(move |g, a| {
            let mid = (second_c.h_ob)(a);
            t.compose(
                &(first_c.alpha)(g, &mid),
                &(second_c.alpha)(&first_c.transport(g), a),
            )
        }),
    }
}

/// The monad morphism of a module morphism: for F : (A, θ_A) → (B, θ_B)
/// intertwining the actions on the nose, precomposition by F carries the
/// θ_B-monad to the θ_A-monad with identity comparison components — the two
/// evaluations produce literally equal extension tables, which the
/// component factory asserts before returning the identity.
pub fn monad_of_module_morphism(
    mf: &CModuleMorphism,
    theta_b: &ModuleMonad,
    theta_a: &ModuleMonad,
) -> MonadMorphism {
    assert_eq!(theta_b.module().token, mf.to.token, "source monad must be built on the codomain module");
    assert_eq!(theta_a.module().token, mf.from.token, "target monad must be built on the domain module");
    let t = theta_a.codomain();
    let tb = theta_b.clone();
    let ta = theta_a.clone();
    let h_ob: BObFn = mf.ob.clone();
    let h_mor: BMorFn = mf.mor.clone();
    let (ho, hm) = (h_ob.clone(), h_mor.clone());
    let h_token = mf.token.clone();
    let ht = h_token.clone();
    MonadMorphism {
        from: theta_b.ops(),
        to: theta_a.ops(),
        h_ob,
        h_mor,
        h_token: h_token.clone(),
        token: format!("Cube[{}]", mf.token),
        alpha: Rc::new(move |g, a| {
            let gh = precompose_functor(g, &ho, &hm, &ht, ta.module().base);
            let lhs = ta.evaluate(&gh, a);
            let rhs = tb.evaluate(g, &ho(a));
            assert!(
                same_tables(&lhs.ran.diagram, &rhs.ran.diagram)
                    && lhs.colim.vertex == rhs.colim.vertex
                    && lhs.colim.legs == rhs.colim.legs,
                "module morphism must identify the two extensions literally"
            );
            t.id(&lhs.colim.vertex)
        }),
    }
}

/// The monad morphism induced by a strict monoidal poset map g: restriction
/// along the word-poset extension of g. The underlying transformation runs
/// from the restricted-module monad's value to the full module's value; as
/// a morphism of monads its source is the full-module monad.
pub fn induced_monad_morphism(
    g: &TableFunctor,
    theta: &ModuleMonad,
    theta_g: &ModuleMonad,
) -> MonadMorphism {
    let n = theta.module().n;
    let m = theta_g.module().n;
    let ghat = lambda_extension(g, m, n).expect("strict monoidal map extends to words");
    let th = theta.clone();
    let thg = theta_g.clone();
    MonadMorphism {
        from: theta.ops(),
        to: theta_g.ops(),
        h_ob: Rc::new(|a| a.clone()),
        h_mor: Rc::new(|f| f.clone()),
        h_token: "id".into(),
        token: format!("restr[{}->{}]", theta_g.module().token, theta.module().token),
        alpha: Rc::new(move |gf, a| {
            let em = thg.evaluate(gf, a);
            let en = th.evaluate(gf, a);
            assert!(
                same_tables(&em.ran.diagram, &en.ran.diagram.precompose(&ghat)),
                "restricted extension must equal the word-map restriction of the full extension"
            );
            restriction_map(&ghat, &en.ran.diagram, &em.colim, &en.colim)
                .expect("restriction along the word extension")
        }),
    }
}

// ---------------------------------------------------------------------------
// adjunctions between functor categories and composite monads

/// An adjunction `left ⊣ right` between two computable bases, supplied with
/// its unit and counit. Precomposition turns it into an adjunction
/// right* ⊣ left* between Fun(near, M) and Fun(far, M), which is how the
/// composite-monad and β constructions consume it.
#[derive(Clone)]
pub struct BaseAdjunction {
    pub near: CCat,
    pub far: CCat,
    pub left_ob: BObFn,
    pub left_mor: BMorFn,
    pub right_ob: BObFn,
    pub right_mor: BMorFn,
    /// δ_x : x → right(left x) in the near base.
    pub unit: Rc<dyn Fn(&BaseOb) -> BaseMor>,
    /// e_y : left(right y) → y in the far base.
    pub counit: Rc<dyn Fn(&BaseOb) -> BaseMor>,
    pub token: String,
}

impl BaseAdjunction {
    /// Both triangle identities at sampled objects.
    pub fn verify_triangles(&self, near: &[BaseOb], far: &[BaseOb]) -> Vec<String> {
        let mut out = Vec::new();
        for x in near {
            let lx = (self.left_ob)(x);
            let lhs = self.far.compose(&(self.counit)(&lx), &(self.left_mor)(&(self.unit)(x)));
            if lhs != self.far.id(&lx) {
                out.push(format!("left triangle fails at {}", self.near.ob_token(x)));
            }
        }
        for y in far {
            let ry = (self.right_ob)(y);
            let lhs = self.near.compose(&(self.right_mor)(&(self.counit)(y)), &(self.unit)(&ry));
            if lhs != self.near.id(&ry) {
                out.push(format!("right triangle fails at {}", self.far.ob_token(y)));
            }
        }
        out
    }
}

/// The identity adjunction on a base.
pub fn identity_adjunction(base: CCat) -> BaseAdjunction {
    BaseAdjunction {
        near: base,
        far: base,
        left_ob: Rc::new(|a| a.clone()),
        left_mor: Rc::new(|f| f.clone()),
        right_ob: Rc::new(|a| a.clone()),
        right_mor: Rc::new(|f| f.clone()),
        unit: Rc::new(move |a| base.id(a)),
        counit: Rc::new(move |a| base.id(a)),
        token: "idadj".into(),
    }
}

/// The diagonal ⊣ product adjunction between a target instance and its
/// n-th power: left is the n-fold diagonal, right is the n-fold product,
/// the unit is the tuple of identities, the counit the tuple of
/// projections.
pub fn diagonal_product_adjunction(t: Target, n: usize) -> BaseAdjunction {
    let near = CCat::new(t, 1);
    let far = CCat::new(t, n);
    BaseAdjunction {
        near,
        far,
        left_ob: Rc::new(move |a| vec![a[0].clone(); n]),
        left_mor: Rc::new(move |f| vec![f[0].clone(); n]),
        right_ob: Rc::new(move |y| vec![t.product(y).0]),
        right_mor: Rc::new(move |fs| vec![t.product_mor(fs)]),
        unit: Rc::new(move |a| {
            if n == 0 {
                vec![t.to_terminal(&a[0])]
            } else {
                vec![t.tuple(&vec![t.id(&a[0]); n])]
            }
        }),
        counit: Rc::new(move |y| t.product(y).1),
        token: format!("diagprod{n}"),
    }
}

/// L G = G ∘ right : the left adjoint of the precomposition adjunction.
pub fn adj_l(adj: &BaseAdjunction, g: &CFunctor) -> CFunctor {
    assert_eq!(g.base, adj.near, "functor must live on the near base");
    precompose_functor(g, &adj.right_ob, &adj.right_mor, &format!("R[{}]", adj.token), adj.far)
}

/// R H = H ∘ left : the right adjoint of the precomposition adjunction.
pub fn adj_r(adj: &BaseAdjunction, h: &CFunctor) -> CFunctor {
    assert_eq!(h.base, adj.far, "functor must live on the far base");
    precompose_functor(h, &adj.left_ob, &adj.left_mor, &format!("L[{}]", adj.token), adj.near)
}

/// The composite monad R T L on Fun(near, M) of a monad T on Fun(far, M)
/// across the precomposition adjunction: unit (R∗η∗L)∘u, multiplication
/// (R∗μ∗L)∘(R T∗ε∗T L).
pub fn composite_monad(adj: &BaseAdjunction, far: &MonadInstance) -> MonadInstance {
    assert_eq!(far.base, adj.far, "monad must live on the far base");
    let t = far.codomain;
    let token = format!("Comp[{}]({})", adj.token, far.token);
    let (a1, a2, a3, a4) = (adj.clone(), adj.clone(), adj.clone(), adj.clone());
    let (f1, f2, f3, f4) = (far.clone(), far.clone(), far.clone(), far.clone());
    MonadInstance {
        base: adj.near,
        codomain: t,
        token,
        act: Rc::new(move |g| adj_r(&a1, &(f1.act)(&adj_l(&a1, g)))),
        map_nat: Rc::new(move |nu| {
            let lnu = CNat {
                from: adj_l(&a2, &nu.from),
                to: adj_l(&a2, &nu.to),
                at: {
                    let (ro, at) = (a2.right_ob.clone(), nu.at.clone());
                    Rc::new(move |y| at(&ro(y)))
                },
                token: format!("({})∘R[{}]", nu.token, a2.token),
            };
            let tl = (f2.map_nat)(&lnu);
            CNat {
                from: adj_r(&a2, &tl.from),
                to: adj_r(&a2, &tl.to),
                at: {
                    let (lo, at) = (a2.left_ob.clone(), tl.at.clone());
                    Rc::new(move |a| at(&lo(a)))
                },
                token: format!("({})∘L[{}]", tl.token, a2.token),
            }
        }),
        unit_at: Rc::new(move |g, a| {
            let lg = adj_l(&a3, g);
            t.compose(&(f3.unit_at)(&lg, &(a3.left_ob)(a)), &g.mor(&(a3.unit)(a)))
        }),
        mult_at: Rc::new(move |g, a| {
            let lg = adj_l(&a4, g);
            let tlg = (f4.act)(&lg);
            let lrtlg = adj_l(&a4, &adj_r(&a4, &tlg));
            let eps = CNat {
                from: lrtlg,
                to: tlg.clone(),
                at: {
                    let (tlg2, cu) = (tlg.clone(), a4.counit.clone());
                    Rc::new(move |y| tlg2.mor(&cu(y)))
                },
                token: format!("eps({})", tlg.token),
            };
            let t_eps = (f4.map_nat)(&eps);
            let y = (a4.left_ob)(a);
            t.compose(&(f4.mult_at)(&lg, &y), &t_eps.at(&y))
        }),
    }
}

// ---------------------------------------------------------------------------
// the β-construction: transporting a monad morphism across adjunctions

/// Data for transporting a monad morphism through compatible adjunctions:
/// `mm : (Fun(b, M), T) → (Fun(b′, M), T′)` with base functor h : b′ → b,
/// adjunctions near ↔ b (for T) and near ↔ b′ (for T′), and the two
/// comparison transformations τ_L(G) : L′G ⇒ (LG)∘h on b′ and
/// τ_R(H) : R′(H∘h) ⇒ R H on near.
pub struct BetaInput {
    pub adj: BaseAdjunction,
    pub adj2: BaseAdjunction,
    pub mm: MonadMorphism,
    pub tau_l: Rc<dyn Fn(&CFunctor) -> CNat>,
    pub tau_r: Rc<dyn Fn(&CFunctor) -> CNat>,
}

/// Verify the two compatibility equations of the β-construction at sampled
/// inputs, then build the morphism between the composite monads whose
/// transformation is the three-step composite
/// R′T′L′ ⇒ R′T′((L−)∘h) ⇒ R′((T L−)∘h) ⇒ R T L.
pub fn beta_morphism(
    input: &BetaInput,
    near_functors: &[CFunctor],
    b_functors: &[CFunctor],
    near_obs: &[BaseOb],
    b2_obs: &[BaseOb],
) -> Result<MonadMorphism, Vec<String>> {
    let adj = &input.adj;
    let adj2 = &input.adj2;
    let mm = &input.mm;
    let t = mm.from.codomain;
    assert_eq!(adj.near, adj2.near, "both adjunctions must share the near base");
    assert_eq!(mm.from.base, adj.far, "the source monad must live over the first adjunction");
    assert_eq!(mm.to.base, adj2.far, "the target monad must live over the second adjunction");

    let mut errs = Vec::new();
    // counit compatibility: (H∗ε) ∘ (τ_L · τ_R) = (H∘h)∗ε′ at sampled (H, y)
    for hf in b_functors {
        let rh = adj_r(adj, hf);
        let tl_rh = (input.tau_l)(&rh);
        let tr_h = (input.tau_r)(hf);
        let fh = mm.transport(hf);
        for y in b2_obs {
            let step = t.compose(&tl_rh.at(y), &tr_h.at(&(adj2.right_ob)(y)));
            let lhs = t.compose(&hf.mor(&(adj.counit)(&(mm.h_ob)(y))), &step);
            let rhs = fh.mor(&(adj2.counit)(y));
            if lhs != rhs {
                errs.push(format!(
                    "counit compatibility fails at ({}, {})",
                    hf.token,
                    adj2.far.ob_token(y)
                ));
            }
        }
    }
    // unit compatibility: (τ_R · τ_L) ∘ u′ = u at sampled (G, a)
    for g in near_functors {
        let lg = adj_l(adj, g);
        let tl_g = (input.tau_l)(g);
        let tr_lg = (input.tau_r)(&lg);
        for a in near_obs {
            let lhs = t.compose(
                &tr_lg.at(a),
                &t.compose(&tl_g.at(&(adj2.left_ob)(a)), &g.mor(&(adj2.unit)(a))),
            );
            let rhs = g.mor(&(adj.unit)(a));
            if lhs != rhs {
                errs.push(format!(
                    "unit compatibility fails at ({}, {})",
                    g.token,
                    adj.near.ob_token(a)
                ));
            }
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }

    let from = composite_monad(adj, &mm.from);
    let to = composite_monad(adj2, &mm.to);
    let token = format!("beta[{}]", mm.token);
    let (adj_c, adj2_c, mm_c) = (adj.clone(), adj2.clone(), mm.clone());
    let (tau_l, tau_r) = (input.tau_l.clone(), input.tau_r.clone());
    Ok(MonadMorphism {
        from,
        to,
        h_ob: Rc::new(|a| a.clone()),
        h_mor: Rc::new(|f| f.clone()),
        h_token: "id".into(),
        token,
        alpha: Rc::new(move |g, a| {
            let lg = adj_l(&adj_c, g);
            let tlg = (mm_c.from.act)(&lg);
            let nu1 = tau_l(g);
            let t2_nu1 = (mm_c.to.map_nat)(&nu1);
            let nu2 = tau_r(&tlg);
            let y = (adj2_c.left_ob)(a);
            t.compose(
                &nu2.at(a),
                &t.compose(&(mm_c.alpha)(&lg, &y), &t2_nu1.at(&y)),
            )
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Matrix;
    use crate::pnmod::CoordComonad;
    use crate::pset::PFun;

    fn vect(p: u64) -> Target {
        Target::VectGF { p }
    }

    fn dims(ds: &[usize]) -> BaseOb {
        ds.iter().map(|&d| Ob::Dim(d)).collect()
    }

    fn width1_mors(p: u64) -> Vec<BaseMor> {
        vec![
            vec![Mor::Mat(Matrix::new(p, 2, 1, vec![1, 1]))],
            vec![Mor::Mat(Matrix::new(p, 1, 2, vec![1, 0]))],
            vec![Mor::Mat(Matrix::new(p, 2, 2, vec![1, 1, 0, 1]))],
        ]
    }

    fn width2_mors(p: u64) -> Vec<BaseMor> {
        vec![
            vec![
                Mor::Mat(Matrix::new(p, 2, 1, vec![1, 1])),
                Mor::Mat(Matrix::new(p, 1, 2, vec![1, 0])),
            ],
            vec![
                Mor::Mat(Matrix::new(p, 1, 1, vec![1])),
                Mor::Mat(Matrix::zeros(p, 2, 1)),
            ],
        ]
    }

    fn theta_monad(t: Target, n: usize) -> ModuleMonad {
        ModuleMonad::new(CModule::theta_n(CCat::new(t, n)), t)
    }

    /// registry functors composed with the n-fold product
    fn cube_functors(t: Target, n: usize) -> Vec<CFunctor> {
        registry(t).iter().map(|f| precompose_product(f, CCat::new(t, n))).collect()
    }

    #[test]
    fn identity_monad_satisfies_laws() {
        let t = vect(2);
        let report = verify_monad(
            &identity_monad(CCat::new(t, 1), t),
            &registry(t),
            &[dims(&[0]), dims(&[1]), dims(&[2])],
            &width1_mors(2),
        );
        assert!(report.is_empty(), "identity monad must be lawful: {report:?}");
    }

    #[test]
    fn zero_width_monad_is_the_identity_monad() {
        let t = vect(3);
        let m = theta_monad(t, 0);
        let f = precompose_product(&tensor_square_functor(t), CCat::new(t, 0));
        let a: BaseOb = vec![];
        let tf = m.act(&f);
        assert_eq!(tf.ob(&a), f.ob(&a), "zero-width action is the identity on objects");
        assert_eq!(m.unit_at(&f, &a), t.id(&f.ob(&a)), "unit is the identity");
        assert_eq!(m.mult_at(&f, &a), t.id(&f.ob(&a)), "multiplication is the identity");
    }

    #[test]
    fn one_cube_monad_on_the_identity_functor_keeps_dimensions() {
        let t = vect(2);
        let m = theta_monad(t, 1);
        let f = identity_functor(t);
        for d in 0..4usize {
            let e = m.evaluate(&f, &dims(&[d]));
            assert_eq!(e.colim.vertex, Ob::Dim(d), "cofiber of 0 → V is V");
            assert!(t.is_iso(&m.unit_at(&f, &dims(&[d]))), "unit is an isomorphism here");
        }
        let report =
            verify_monad(&m.ops(), &[f], &[dims(&[0]), dims(&[1]), dims(&[2])], &width1_mors(2));
        assert!(report.is_empty(), "one-cube monad laws: {report:?}");
    }

    #[test]
    fn trivial_module_monad_collapses_everything() {
        let t = vect(2);
        let m = ModuleMonad::new(CModule::trivial(CCat::new(t, 1), 1), t);
        for f in [identity_functor(t), tensor_square_functor(t)] {
            for d in 1..3usize {
                let e = m.evaluate(&f, &dims(&[d]));
                assert_eq!(e.colim.vertex, Ob::Dim(0), "cofiber of an identity vanishes");
            }
        }
    }

    #[test]
    fn two_cube_monad_laws_hold_over_vector_spaces() {
        let t = vect(2);
        let m = theta_monad(t, 2);
        let objects = vec![dims(&[0, 1]), dims(&[1, 1]), dims(&[2, 1]), dims(&[1, 2])];
        let report = verify_monad(&m.ops(), &cube_functors(t, 2), &objects, &width2_mors(2));
        assert!(report.is_empty(), "two-cube monad laws: {report:?}");
    }

    #[test]
    fn two_cube_monad_laws_hold_over_pointed_sets() {
        let t = Target::PSet;
        let m = theta_monad(t, 2);
        let objects = vec![
            vec![Ob::Size(1), Ob::Size(2)],
            vec![Ob::Size(2), Ob::Size(2)],
        ];
        let mors = vec![vec![
            Mor::Fun(PFun::new(2, 2, vec![0, 1])),
            Mor::Fun(PFun::new(2, 2, vec![0, 0])),
        ]];
        let report = verify_monad(&m.ops(), &cube_functors(t, 2), &objects, &mors);
        assert!(report.is_empty(), "two-cube monad laws over pointed sets: {report:?}");
    }

    #[test]
    fn coreflective_module_monad_laws_hold() {
        let t = vect(2);
        let base = CCat::new(t, 2);
        let module =
            CModule::coreflective(base, vec![CoordComonad::Zero, CoordComonad::Identity]);
        let m = ModuleMonad::new(module, t);
        let report = verify_monad(
            &m.ops(),
            &cube_functors(t, 2),
            &[dims(&[1, 1]), dims(&[2, 1])],
            &width2_mors(2),
        );
        assert!(report.is_empty(), "mixed coreflective monad laws: {report:?}");
    }

    #[test]
    fn multiplication_routes_agree() {
        for n in 1..=2usize {
            let t = vect(3);
            let m = theta_monad(t, n);
            let f = precompose_product(&tensor_square_functor(t), CCat::new(t, n));
            for a in [vec![Ob::Dim(1); n], vec![Ob::Dim(2); n]] {
                assert_eq!(
                    m.mult_materialized(&f, &a),
                    m.mult_fused(&f, &a),
                    "materialized and fused multiplication agree at width {n}"
                );
            }
        }
    }

    #[test]
    fn unit_and_multiplication_natural_in_the_functor() {
        let t = vect(2);
        let m = theta_monad(t, 1);
        let f = tensor_square_functor(t);
        let z = constant_zero_functor(CCat::new(t, 1), t);
        let collapse = CNat {
            from: f.clone(),
            to: z.clone(),
            at: Rc::new(move |a: &BaseOb| t.to_terminal(&Ob::Dim(a[0].dim() * a[0].dim()))),
            token: "collapse".into(),
        };
        let grow = CNat {
            from: z,
            to: f.clone(),
            at: Rc::new(move |a: &BaseOb| t.from_initial(&Ob::Dim(a[0].dim() * a[0].dim()))),
            token: "grow".into(),
        };
        for nu in [collapse, grow] {
            let report =
                monad_naturality_in_functor(&m.ops(), &nu, &[dims(&[1]), dims(&[2])]);
            assert!(report.is_empty(), "naturality in the functor: {report:?}");
        }
    }

    #[test]
    fn corrupted_multiplication_is_detected() {
        let t = vect(2);
        let m = theta_monad(t, 2).ops();
        // Tamper with the multiplication at iterated functors only: a swap
        // applied uniformly at every level would enter both associativity
        // routes twice and cancel, surfacing as unit failures instead.
        let inner = m.mult_at.clone();
        let corrupted = MonadInstance {
            mult_at: Rc::new(move |f, a| {
                let honest = inner(f, a);
                if f.token.starts_with("T(") && t.cod(&honest) == Ob::Dim(2) {
                    let s = Matrix::new(2, 2, 2, vec![0, 1, 1, 0]);
                    t.compose(&Mor::Mat(s), &honest)
                } else {
                    honest
                }
            }),
            ..m.clone()
        };
        let f = precompose_product(&tensor_square_functor(t), CCat::new(t, 2));
        let report = verify_monad(&corrupted, &[f], &[dims(&[1, 1])], &[]);
        assert!(
            report.iter().any(|l| l.contains("associativity")),
            "corrupting μ must break associativity: {report:?}"
        );
        assert!(
            report.iter().all(|l| l.contains("associativity")),
            "the tampered level must be localized to associativity: {report:?}"
        );
    }

    #[test]
    fn act_is_functorial_on_samples() {
        let t = vect(2);
        let m = theta_monad(t, 2);
        let tf = m.act(&precompose_product(&tensor_square_functor(t), CCat::new(t, 2)));
        let g1 = vec![
            Mor::Mat(Matrix::new(2, 2, 1, vec![1, 1])),
            Mor::Mat(Matrix::new(2, 1, 1, vec![1])),
        ];
        let g2 = vec![
            Mor::Mat(Matrix::new(2, 1, 2, vec![1, 0])),
            Mor::Mat(Matrix::new(2, 1, 1, vec![1])),
        ];
        let report = check_functor(&tf, &[(g2, g1)]);
        assert!(report.is_empty(), "monad action must be functorial: {report:?}");
    }

    #[test]
    fn identity_module_morphism_gives_identity_monad_morphism() {
        let t = vect(2);
        let m = theta_monad(t, 1);
        let mm = monad_of_module_morphism(
            &CModuleMorphism::identity(m.module()),
            &m,
            &m,
        );
        let f = identity_functor(t);
        assert_eq!(mm.alpha_nat(&f).at(&dims(&[2])), t.id(&m.act(&f).ob(&dims(&[2]))));
        let report = mm.verify(&[f], &[dims(&[1]), dims(&[2])]);
        assert!(report.is_empty(), "identity module morphism coherence: {report:?}");
    }

    #[test]
    fn diagonal_module_morphism_induces_a_monad_morphism() {
        let t = vect(2);
        let s = crate::cubes::Surjection::new(2, 1, vec![0, 0]);
        let mf = crate::pnmod::diagonal_for_surjection(&s, t);
        let theta_b = ModuleMonad::new(mf.to.clone(), t);
        let theta_a = ModuleMonad::new(mf.from.clone(), t);
        let mm = monad_of_module_morphism(&mf, &theta_b, &theta_a);
        let report = mm.verify(&cube_functors(t, 2), &[dims(&[1]), dims(&[2])]);
        assert!(report.is_empty(), "diagonal module morphism coherence: {report:?}");
    }

    #[test]
    fn poset_map_restriction_induces_a_monad_morphism() {
        let t = vect(2);
        let s = crate::cubes::Surjection::new(2, 1, vec![0, 0]);
        let g = s.poset_functor();
        let theta = theta_monad(t, 2);
        let theta_g = ModuleMonad::new(
            CModule::restricted(theta.module().clone(), &g),
            t,
        );
        let mm = induced_monad_morphism(&g, &theta, &theta_g);
        let report = mm.verify(&cube_functors(t, 2), &[dims(&[1, 1]), dims(&[2, 1])]);
        assert!(report.is_empty(), "poset-map restriction coherence: {report:?}");

        let id1 = crate::cubes::Surjection::identity(2).poset_functor();
        let theta_id = ModuleMonad::new(
            CModule::restricted(theta.module().clone(), &id1),
            t,
        );
        let mm_id = induced_monad_morphism(&id1, &theta, &theta_id);
        let f = &cube_functors(t, 2)[2];
        let a = dims(&[1, 1]);
        assert_eq!(
            (mm_id.alpha)(f, &a),
            t.id(&theta.act(f).ob(&a)),
            "identity poset map induces identity components"
        );
    }

    #[test]
    fn restriction_morphisms_compose() {
        let t = vect(2);
        let s1 = crate::cubes::Surjection::new(3, 2, vec![0, 1, 1]);
        let s2 = crate::cubes::Surjection::new(2, 1, vec![0, 0]);
        let g1 = s1.poset_functor();
        let g2 = s2.poset_functor();
        let g12 = g1.compose(&g2);

        let theta3 = theta_monad(t, 3);
        let m1_module = CModule::restricted(theta3.module().clone(), &g1);
        let theta_g1 = ModuleMonad::new(m1_module.clone(), t);
        let theta_g1g2 = ModuleMonad::new(CModule::restricted(m1_module, &g2), t);
        let theta_direct = ModuleMonad::new(
            CModule::restricted(theta3.module().clone(), &g12),
            t,
        );

        let m1 = induced_monad_morphism(&g1, &theta3, &theta_g1);
        let m2 = induced_monad_morphism(&g2, &theta_g1, &theta_g1g2);
        let direct = induced_monad_morphism(&g12, &theta3, &theta_direct);
        let chained = compose_monad_morphisms(&m2, &m1);

        let f = precompose_product(&identity_functor(t), CCat::new(t, 3));
        for a in [dims(&[1, 1, 1]), dims(&[1, 2, 1])] {
            assert_eq!(
                (direct.alpha)(&f, &a),
                (chained.alpha)(&f, &a),
                "restriction along a composite equals the composite restriction"
            );
        }
    }

    #[test]
    fn composite_over_identity_adjunction_is_pointwise_identity() {
        let t = vect(2);
        let m = theta_monad(t, 1);
        let comp = composite_monad(&identity_adjunction(CCat::new(t, 1)), &m.ops());
        let f = tensor_square_functor(t);
        for a in [dims(&[1]), dims(&[2])] {
            assert_eq!((comp.act)(&f).ob(&a), m.act(&f).ob(&a));
            assert_eq!((comp.unit_at)(&f, &a), m.unit_at(&f, &a));
            assert_eq!((comp.mult_at)(&f, &a), m.mult_at(&f, &a));
        }
    }

    #[test]
    fn composite_of_identity_monad_is_the_adjunction_monad() {
        let t = vect(2);
        let adj = diagonal_product_adjunction(t, 2);
        assert!(adj
            .verify_triangles(&[dims(&[1]), dims(&[2])], &[dims(&[1, 2]), dims(&[2, 2])])
            .is_empty());
        let comp = composite_monad(&adj, &identity_monad(CCat::new(t, 2), t));
        let g = tensor_square_functor(t);
        for a in [dims(&[1]), dims(&[2])] {
            let expected = g.mor(&(adj.right_mor)(&(adj.counit)(&(adj.left_ob)(&a))));
            assert_eq!((comp.mult_at)(&g, &a), expected, "multiplication is R∗ε∗L");
        }
        let report = verify_monad(&comp, &registry(t), &[dims(&[1]), dims(&[2])], &width1_mors(2));
        assert!(report.is_empty(), "adjunction monad laws: {report:?}");
    }

    #[test]
    fn diagonal_composite_of_the_two_cube_monad_is_a_monad() {
        let t = vect(2);
        let adj = diagonal_product_adjunction(t, 2);
        let comp = composite_monad(&adj, &theta_monad(t, 2).ops());
        let report = verify_monad(
            &comp,
            &[identity_functor(t), tensor_square_functor(t)],
            &[dims(&[1]), dims(&[2])],
            &width1_mors(2),
        );
        assert!(report.is_empty(), "diagonal composite monad laws: {report:?}");
    }

    #[test]
    fn beta_with_trivial_data_is_the_identity() {
        let t = vect(2);
        let m = theta_monad(t, 1);
        let adj = identity_adjunction(CCat::new(t, 1));
        let mm = identity_monad_morphism(&m.ops());
        let mk_tau = || -> Rc<dyn Fn(&CFunctor) -> CNat> {
            Rc::new(move |g: &CFunctor| {
                let gc = g.clone();
                CNat {
                    from: g.clone(),
                    to: g.clone(),
                    at: Rc::new(move |a| t.id(&gc.ob(a))),
                    token: format!("id({})", g.token),
                }
            })
        };
        let input = BetaInput {
            adj: adj.clone(),
            adj2: adj,
            mm,
            tau_l: mk_tau(),
            tau_r: mk_tau(),
        };
        let objs = vec![dims(&[1]), dims(&[2])];
        let f = tensor_square_functor(t);
        let beta = beta_morphism(&input, &[f.clone()], &[f.clone()], &objs, &objs)
            .expect("trivial compatibility holds");
        for a in &objs {
            assert_eq!(
                (beta.alpha)(&f, a),
                t.id(&m.act(&f).ob(a)),
                "trivial β has identity components"
            );
        }
        let report = beta.verify(&[f], &objs);
        assert!(report.is_empty(), "trivial β coherence: {report:?}");
    }
}
