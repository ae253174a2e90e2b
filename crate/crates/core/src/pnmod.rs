//! Subset-poset module structures on a category: an action θ of (P(n), ∩)
//! that is unital at the full set and strictly associative, together with
//! the three equivalent presentations — the action itself, a family of n
//! commuting strict idempotent comonads, and strict coreflective
//! subcategories — and the conversions between them.
//!
//! Two flavours live here. Table-backed modules support exhaustive law
//! checking and exact roundtrips; modules over a computable base (a finite
//! power of one of the target instances) are validated on samples and feed
//! the monad construction.

use std::rc::Rc;
use std::sync::Arc;

use crate::cubes::{is_strict_monoidal, pn};
use crate::fincat::{
    prod_mor_ix, product_category, TableCategory, TableFunctor, TableNatTransform, Violation,
};
use crate::targetcat::{Mor, Ob, Target};

// ---------------------------------------------------------------------------
// table-backed modules

/// A P(n)-module structure on a table category: θ : A × P(n) → A.
#[derive(Clone, Debug)]
pub struct TableModule {
    pub base: Arc<TableCategory>,
    pub n: usize,
    pub product: Arc<TableCategory>,
    pub theta: TableFunctor,
}

impl TableModule {
    pub fn new(base: &Arc<TableCategory>, n: usize, theta: TableFunctor) -> TableModule {
        let product = theta.source.clone();
        TableModule { base: base.clone(), n, product, theta }
    }

    /// Build from an object assignment when the base is thin enough for the
    /// morphism action to be forced (every hom-set at most a singleton).
    pub fn from_ob_action(
        base: &Arc<TableCategory>,
        n: usize,
        ob: impl Fn(usize, usize) -> usize,
    ) -> TableModule {
        let p = pn(n);
        let product = Arc::new(product_category(base, &p));
        let pn_obs = p.n_objects();
        let ob_map: Vec<usize> =
            (0..product.n_objects()).map(|o| ob(o / pn_obs, o % pn_obs)).collect();
        let pn_mors = p.n_mors();
        let mor_map: Vec<usize> = (0..product.n_mors())
            .map(|m| {
                let (f, pm) = (m / pn_mors, m % pn_mors);
                let (a, b) = (base.dom(f), base.cod(f));
                let (u, v) = (p.dom(pm), p.cod(pm));
                let hom = base.hom(ob(a, u), ob(b, v));
                assert_eq!(hom.len(), 1, "object action does not force the morphism action");
                hom[0]
            })
            .collect();
        let theta = TableFunctor {
            source: product.clone(),
            target: base.clone(),
            ob_map,
            mor_map,
        };
        TableModule { base: base.clone(), n, product, theta }
    }

    pub fn theta_ob(&self, a: usize, u: usize) -> usize {
        let pn_obs = 1usize << self.n;
        self.theta.ob_map[a * pn_obs + u]
    }

    /// θ applied to a pair (f : a → b, U ⊆ V).
    pub fn theta_mor(&self, f: usize, pm: usize) -> usize {
        let p = pn(self.n);
        self.theta.mor_map[prod_mor_ix(p.n_mors(), f, pm)]
    }

    /// The transpose endofunctor θ̂(U) = θ(−, U).
    pub fn transpose(&self, u: usize) -> TableFunctor {
        let p = pn(self.n);
        let idu = p.ids[u];
        TableFunctor {
            source: self.base.clone(),
            target: self.base.clone(),
            ob_map: (0..self.base.n_objects()).map(|a| self.theta_ob(a, u)).collect(),
            mor_map: (0..self.base.n_mors()).map(|f| self.theta_mor(f, idu)).collect(),
        }
    }

    /// Connector θ(id_a, U ⊆ V) : θ(a,U) → θ(a,V).
    pub fn connector(&self, a: usize, u: usize, v: usize) -> usize {
        let p = pn(self.n);
        let pm = p.hom(u, v)[0];
        self.theta_mor(self.base.ids[a], pm)
    }

    /// Exhaustive law check: functoriality, unit at the full set, and
    /// associativity of the action against intersection, on objects and on
    /// all pairs of generating data.
    pub fn validate_module(&self) -> Vec<Violation> {
        let mut out = self.theta.validate();
        let p = pn(self.n);
        let full = (1usize << self.n) - 1;
        for a in 0..self.base.n_objects() {
            if self.theta_ob(a, full) != a {
                out.push(Violation::new(
                    "unit-object",
                    format!("θ({}, full) ≠ {0}", self.base.objects[a]),
                ));
            }
        }
        let idfull = p.ids[full];
        for f in 0..self.base.n_mors() {
            if self.theta_mor(f, idfull) != f {
                out.push(Violation::new(
                    "unit-morphism",
                    format!("θ({}, id_full) is not {0}", self.base.mors[f].name),
                ));
            }
        }
        for a in 0..self.base.n_objects() {
            for u in 0..=full {
                for v in 0..=full {
                    if self.theta_ob(self.theta_ob(a, u), v) != self.theta_ob(a, u & v) {
                        out.push(Violation::new(
                            "associativity-object",
                            format!("at ({}, {u}, {v})", self.base.objects[a]),
                        ));
                    }
                }
            }
        }
        for f in 0..self.base.n_mors() {
            for pm in 0..p.n_mors() {
                for pm2 in 0..p.n_mors() {
                    let (u, u2) = (p.dom(pm), p.cod(pm));
                    let (v, v2) = (p.dom(pm2), p.cod(pm2));
                    let lhs = self.theta_mor(self.theta_mor(f, pm), pm2);
                    let meet = p.hom(u & v, u2 & v2)[0];
                    if lhs != self.theta_mor(f, meet) {
                        out.push(Violation::new(
                            "associativity-morphism",
                            format!("at ({}, {pm}, {pm2})", self.base.mors[f].name),
                        ));
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// strict idempotent comonads on table categories

/// A strict idempotent comonad: an idempotent endofunctor K with natural
/// counit ε : K ⇒ Id such that the comultiplication can be taken to be the
/// identity, which forces K(ε) = ε∗K = id.
#[derive(Clone, Debug)]
pub struct TableComonad {
    pub endo: TableFunctor,
    pub counit: TableNatTransform,
}

impl TableComonad {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.endo.validate();
        out.extend(self.counit.validate());
        let base = &self.endo.source;
        let kk = self.endo.compose(&self.endo);
        if kk.ob_map != self.endo.ob_map || kk.mor_map != self.endo.mor_map {
            out.push(Violation::new("idempotent", "K∘K ≠ K".into()));
        }
        for a in 0..base.n_objects() {
            let ka = self.endo.ob_map[a];
            if self.endo.mor_map[self.counit.components[a]] != base.ids[ka] {
                out.push(Violation::new(
                    "strict-counit-left",
                    format!("K(ε) not the identity at {}", base.objects[a]),
                ));
            }
            if self.counit.components[ka] != base.ids[ka] {
                out.push(Violation::new(
                    "strict-counit-right",
                    format!("ε at K({}) not the identity", base.objects[a]),
                ));
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &TableComonad) -> bool {
        let ab = self.endo.compose(&other.endo);
        let ba = other.endo.compose(&self.endo);
        ab.ob_map == ba.ob_map && ab.mor_map == ba.mor_map
    }
}

/// The comonads K_j = θ̂(full ∖ {j}) with counits given by the inclusion
/// connectors into the full set.
pub fn module_to_comonads(m: &TableModule) -> Vec<TableComonad> {
    let full = (1usize << m.n) - 1;
    (0..m.n)
        .map(|j| {
            let u = full ^ (1 << j);
            let endo = m.transpose(u);
            let components =
                (0..m.base.n_objects()).map(|a| m.connector(a, u, full)).collect();
            let counit = TableNatTransform {
                source: endo.clone(),
                target: TableFunctor::identity(&m.base),
                components,
            };
            TableComonad { endo, counit }
        })
        .collect()
}

/// Reassemble the module action from a commuting family of strict
/// idempotent comonads: θ̂(U) is the composite of the K_j over j ∉ U in
/// ascending order, and connectors peel off one comonad at a time through
/// its counit.
pub fn comonads_to_module(
    base: &Arc<TableCategory>,
    ks: &[TableComonad],
) -> Result<TableModule, Vec<Violation>> {
    let n = ks.len();
    let mut violations: Vec<Violation> = ks.iter().flat_map(|k| k.validate()).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if !ks[i].commutes_with(&ks[j]) {
                violations.push(Violation::new("commutation", format!("K_{i} and K_{j}")));
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    let full = (1usize << n) - 1;
    let composite = |u: usize| -> TableFunctor {
        let mut f = TableFunctor::identity(base);
        for j in 0..n {
            if u & (1 << j) == 0 {
                f = ks[j].endo.compose(&f);
            }
        }
        f
    };
    // single step: insert j into u through ε_j, whiskered by the complement
    let single_step = |u: usize, j: usize, a: usize| -> usize {
        let mut prefix = TableFunctor::identity(base);
        for i in 0..j {
            if u & (1 << i) == 0 {
                prefix = ks[i].endo.compose(&prefix);
            }
        }
        let mut suffix = TableFunctor::identity(base);
        for i in (j + 1)..n {
            if u & (1 << i) == 0 {
                suffix = ks[i].endo.compose(&suffix);
            }
        }
        suffix.mor_map[ks[j].counit.components[prefix.ob_map[a]]]
    };
    let connector = |a: usize, u: usize, v: usize| -> usize {
        let mut cur = u;
        let mut acc = base.ids[composite(u).ob_map[a]];
        for j in 0..n {
            if v & (1 << j) != 0 && cur & (1 << j) == 0 {
                let step = single_step(cur, j, a);
                acc = base.compose(step, acc).expect("connector steps compose");
                cur |= 1 << j;
            }
        }
        acc
    };

    let p = pn(n);
    let product = Arc::new(product_category(base, &p));
    let transposes: Vec<TableFunctor> = (0..=full).map(composite).collect();
    let pn_obs = p.n_objects();
    let ob_map = (0..product.n_objects())
        .map(|o| transposes[o % pn_obs].ob_map[o / pn_obs])
        .collect();
    let pn_mors = p.n_mors();
    let mor_map = (0..product.n_mors())
        .map(|m| {
            let (f, pm) = (m / pn_mors, m % pn_mors);
            let (u, v) = (p.dom(pm), p.cod(pm));
            let uf = transposes[u].mor_map[f];
            base.compose(connector(base.cod(f), u, v), uf).expect("action composes")
        })
        .collect();
    let theta =
        TableFunctor { source: product.clone(), target: base.clone(), ob_map, mor_map };
    let module = TableModule { base: base.clone(), n, product, theta };
    let after = module.validate_module();
    if after.is_empty() {
        Ok(module)
    } else {
        Err(after)
    }
}

// ---------------------------------------------------------------------------
// coreflective subcategories of table categories

/// A strict coreflective full subcategory: the fixed objects, the
/// colocalisation R landing in them, and the counit R(a) → a. The unit of
/// the adjunction (inclusion ⊣ R) is the identity.
#[derive(Clone, Debug)]
pub struct TableCoreflection {
    pub base: Arc<TableCategory>,
    pub fixed: Vec<usize>,
    pub reflector_ob: Vec<usize>,
    pub reflector_mor: Vec<usize>,
    pub counit: Vec<usize>,
}

/// Read a coreflective pair off a strict idempotent comonad and verify the
/// defining universal property exhaustively: for fixed b, composing with
/// ε_a is a bijection hom(b, R(a)) → hom(b, a).
pub fn comonad_to_coreflective(k: &TableComonad) -> Result<TableCoreflection, Vec<Violation>> {
    let mut violations = k.validate();
    let base = &k.endo.source;
    let fixed: Vec<usize> = (0..base.n_objects()).filter(|&a| k.endo.ob_map[a] == a).collect();
    for &b in &fixed {
        for a in 0..base.n_objects() {
            let ra = k.endo.ob_map[a];
            let into_r = base.hom(b, ra);
            let into_a = base.hom(b, a);
            let mut images: Vec<usize> = into_r
                .iter()
                .map(|&g| base.compose(k.counit.components[a], g).expect("composable"))
                .collect();
            images.sort_unstable();
            images.dedup();
            let mut expect = into_a.clone();
            expect.sort_unstable();
            if images != expect {
                violations.push(Violation::new(
                    "coreflection-universal",
                    format!(
                        "hom({}, R{}) does not match hom({0}, {1})",
                        base.objects[b], base.objects[a]
                    ),
                ));
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    Ok(TableCoreflection {
        base: base.clone(),
        fixed,
        reflector_ob: k.endo.ob_map.clone(),
        reflector_mor: k.endo.mor_map.clone(),
        counit: k.counit.components.clone(),
    })
}

/// The comonad ι∘R of a coreflective pair.
pub fn coreflective_to_comonad(c: &TableCoreflection) -> Result<TableComonad, Vec<Violation>> {
    let endo = TableFunctor {
        source: c.base.clone(),
        target: c.base.clone(),
        ob_map: c.reflector_ob.clone(),
        mor_map: c.reflector_mor.clone(),
    };
    let counit = TableNatTransform {
        source: endo.clone(),
        target: TableFunctor::identity(&c.base),
        components: c.counit.clone(),
    };
    let k = TableComonad { endo, counit };
    let violations = k.validate();
    if violations.is_empty() {
        Ok(k)
    } else {
        Err(violations)
    }
}

// ---------------------------------------------------------------------------
// computable base categories: finite powers of a target instance

/// A finite power of one of the target instances, with tuples of objects
/// and morphisms as its data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CCat {
    pub target: Target,
    pub width: usize,
}

pub type BaseOb = Vec<Ob>;
pub type BaseMor = Vec<Mor>;

impl CCat {
    pub fn new(target: Target, width: usize) -> CCat {
        CCat { target, width }
    }

    pub fn id(&self, a: &BaseOb) -> BaseMor {
        a.iter().map(|o| self.target.id(o)).collect()
    }

    pub fn compose(&self, g: &BaseMor, f: &BaseMor) -> BaseMor {
        g.iter().zip(f).map(|(gi, fi)| self.target.compose(gi, fi)).collect()
    }

    pub fn dom(&self, f: &BaseMor) -> BaseOb {
        f.iter().map(|fi| self.target.dom(fi)).collect()
    }

    pub fn cod(&self, f: &BaseMor) -> BaseOb {
        f.iter().map(|fi| self.target.cod(fi)).collect()
    }

    pub fn zero_ob(&self) -> BaseOb {
        vec![self.target.zero_ob(); self.width]
    }

    pub fn is_iso(&self, f: &BaseMor) -> bool {
        f.iter().all(|fi| self.target.is_iso(fi))
    }

    pub fn is_identity(&self, f: &BaseMor) -> bool {
        *f == self.id(&self.dom(f))
    }

    /// Canonical token for memo keys.
    pub fn ob_token(&self, a: &BaseOb) -> String {
        let parts: Vec<String> = a
            .iter()
            .map(|o| match o {
                Ob::Dim(d) => d.to_string(),
                Ob::Size(s) => s.to_string(),
            })
            .collect();
        format!("[{}]", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// computable modules

/// A per-coordinate strict idempotent comonad on a target instance: keep
/// the coordinate, or collapse it to the zero object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordComonad {
    Identity,
    Zero,
}

impl CoordComonad {
    pub fn apply_ob(&self, t: Target, o: &Ob) -> Ob {
        match self {
            CoordComonad::Identity => o.clone(),
            CoordComonad::Zero => t.zero_ob(),
        }
    }

    pub fn apply_mor(&self, t: Target, f: &Mor) -> Mor {
        match self {
            CoordComonad::Identity => f.clone(),
            CoordComonad::Zero => t.id(&t.zero_ob()),
        }
    }

    pub fn counit_at(&self, t: Target, o: &Ob) -> Mor {
        match self {
            CoordComonad::Identity => t.id(o),
            CoordComonad::Zero => t.from_initial(o),
        }
    }
}

#[derive(Clone, Debug)]
pub enum ModuleKind {
    /// θ(a, U) = a for every U.
    Trivial,
    /// One comonad per coordinate, applied at the coordinates outside U.
    Coreflective(Vec<CoordComonad>),
    /// Restriction of a P(n)-module along a strict monoidal g : P(m) → P(n).
    Restricted(Box<CModule>, TableFunctor),
}

/// A P(n)-module over a computable base.
#[derive(Clone, Debug)]
pub struct CModule {
    pub base: CCat,
    pub n: usize,
    pub kind: ModuleKind,
    pub token: String,
}

impl CModule {
    pub fn trivial(base: CCat, n: usize) -> CModule {
        CModule { base, n, kind: ModuleKind::Trivial, token: format!("trivial^{n}") }
    }

    /// The coordinate-zeroing module on a width-n base.
    pub fn theta_n(base: CCat) -> CModule {
        let n = base.width;
        CModule {
            base,
            n,
            kind: ModuleKind::Coreflective(vec![CoordComonad::Zero; n]),
            token: format!("theta^{n}"),
        }
    }

    pub fn coreflective(base: CCat, coords: Vec<CoordComonad>) -> CModule {
        assert_eq!(base.width, coords.len(), "one comonad per coordinate");
        let tag: String = coords
            .iter()
            .map(|c| match c {
                CoordComonad::Identity => 'i',
                CoordComonad::Zero => 'z',
            })
            .collect();
        let n = coords.len();
        CModule { base, n, kind: ModuleKind::Coreflective(coords), token: format!("crf[{tag}]") }
    }

    /// Restrict along a strict monoidal poset map g : P(m) → P(n).
    pub fn restricted(inner: CModule, g: &TableFunctor) -> CModule {
        let m = g.source.n_objects().trailing_zeros() as usize;
        let n = inner.n;
        assert_eq!(g.source.n_objects(), 1 << m);
        assert_eq!(g.target.n_objects(), 1 << n, "g must land in the inner module's poset");
        assert!(is_strict_monoidal(g, m, n), "restriction requires a strict monoidal map");
        let token = format!("res[{}<-{}]", inner.token, m);
        CModule { base: inner.base, n: m, kind: ModuleKind::Restricted(Box::new(inner), g.clone()), token }
    }

    pub fn theta_ob(&self, a: &BaseOb, u: usize) -> BaseOb {
        match &self.kind {
            ModuleKind::Trivial => a.clone(),
            ModuleKind::Coreflective(cs) => a
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    if u & (1 << i) != 0 {
                        o.clone()
                    } else {
                        cs[i].apply_ob(self.base.target, o)
                    }
                })
                .collect(),
            ModuleKind::Restricted(inner, g) => inner.theta_ob(a, g.ob_map[u]),
        }
    }

    pub fn theta_mor(&self, f: &BaseMor, u: usize) -> BaseMor {
        match &self.kind {
            ModuleKind::Trivial => f.clone(),
            ModuleKind::Coreflective(cs) => f
                .iter()
                .enumerate()
                .map(|(i, fi)| {
                    if u & (1 << i) != 0 {
                        fi.clone()
                    } else {
                        cs[i].apply_mor(self.base.target, fi)
                    }
                })
                .collect(),
            ModuleKind::Restricted(inner, g) => inner.theta_mor(f, g.ob_map[u]),
        }
    }

    /// Connector θ(id_a, U ⊆ V) : θ(a,U) → θ(a,V).
    pub fn theta_connect(&self, a: &BaseOb, u: usize, v: usize) -> BaseMor {
        assert_eq!(u & v, u, "connector needs U ⊆ V");
        match &self.kind {
            ModuleKind::Trivial => self.base.id(a),
            ModuleKind::Coreflective(cs) => {
                let t = self.base.target;
                a.iter()
                    .enumerate()
                    .map(|(i, o)| {
                        let bit = 1 << i;
                        if u & bit != 0 {
                            t.id(o)
                        } else if v & bit != 0 {
                            cs[i].counit_at(t, o)
                        } else {
                            t.id(&cs[i].apply_ob(t, o))
                        }
                    })
                    .collect()
            }
            ModuleKind::Restricted(inner, g) => {
                inner.theta_connect(a, g.ob_map[u], g.ob_map[v])
            }
        }
    }

    /// θ on a generating pair (f, U ⊆ V), as the connector-after-action
    /// composite.
    pub fn theta_pair(&self, f: &BaseMor, u: usize, v: usize) -> BaseMor {
        let conn = self.theta_connect(&self.base.cod(f), u, v);
        self.base.compose(&conn, &self.theta_mor(f, u))
    }

    /// Law check on supplied samples: unit at the full set, naturality of
    /// connectors, and strict associativity against intersection, on
    /// objects and morphisms for every pair of subsets.
    pub fn validate_on(&self, samples: &[BaseMor]) -> Vec<String> {
        let mut out = Vec::new();
        let full = (1usize << self.n) - 1;
        let t = self.base;
        for (k, f) in samples.iter().enumerate() {
            let (a, b) = (t.dom(f), t.cod(f));
            if self.theta_ob(&a, full) != a || self.theta_mor(f, full) != *f {
                out.push(format!("unit fails on sample {k}"));
            }
            for u in 0..=full {
                if self.theta_mor(&t.id(&a), u) != t.id(&self.theta_ob(&a, u)) {
                    out.push(format!("identities not preserved at U={u} on sample {k}"));
                }
                for v in u..=full {
                    if v & u != u {
                        continue;
                    }
                    let lhs = self.base.compose(
                        &self.theta_connect(&b, u, v),
                        &self.theta_mor(f, u),
                    );
                    let rhs = self.base.compose(
                        &self.theta_mor(f, v),
                        &self.theta_connect(&a, u, v),
                    );
                    if lhs != rhs {
                        out.push(format!("connector not natural at U={u}⊆V={v} on sample {k}"));
                    }
                }
            }
            for u in 0..=full {
                for v in 0..=full {
                    if self.theta_ob(&self.theta_ob(&a, u), v) != self.theta_ob(&a, u & v) {
                        out.push(format!("object associativity fails at ({u},{v}) on sample {k}"));
                    }
                    if self.theta_mor(&self.theta_mor(f, u), v) != self.theta_mor(f, u & v) {
                        out.push(format!("morphism associativity fails at ({u},{v}) on sample {k}"));
                    }
                }
            }
            // associativity on connectors: acting by V on a U-connector
            for u in 0..=full {
                for u2 in u..=full {
                    if u2 & u != u {
                        continue;
                    }
                    for v in 0..=full {
                        let lhs = self.theta_mor(&self.theta_connect(&a, u, u2), v);
                        let rhs = self.theta_connect(&self.theta_ob(&a, v), u & v, u2 & v);
                        if lhs != rhs {
                            out.push(format!(
                                "connector associativity fails at ({u}⊆{u2}, {v}) on sample {k}"
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// comparison transformations and module morphisms over computable bases

/// A transformation of module structures on the same base, natural in the
/// object and compatible with connectors; the component at (a, U) is a
/// morphism θ_from(a,U) → θ_to(a,U), and the full-set component is the
/// identity.
pub struct ModuleTransform {
    pub from: CModule,
    pub to: CModule,
    pub component: Rc<dyn Fn(&BaseOb, usize) -> BaseMor>,
}

impl ModuleTransform {
    pub fn validate_on(&self, samples: &[BaseMor]) -> Vec<String> {
        let mut out = Vec::new();
        let full = (1usize << self.from.n) - 1;
        let t = self.from.base;
        for (k, f) in samples.iter().enumerate() {
            let (a, b) = (t.dom(f), t.cod(f));
            if (self.component)(&a, full) != t.id(&a) {
                out.push(format!("full-set component not the identity on sample {k}"));
            }
            for u in 0..=full {
                let ca = (self.component)(&a, u);
                let cb = (self.component)(&b, u);
                let lhs = t.compose(&cb, &self.from.theta_mor(f, u));
                let rhs = t.compose(&self.to.theta_mor(f, u), &ca);
                if lhs != rhs {
                    out.push(format!("not natural at U={u} on sample {k}"));
                }
                for v in 0..=full {
                    if v & u != u || v == u {
                        continue;
                    }
                    let one = t.compose(&self.to.theta_connect(&a, u, v), &ca);
                    let two = t.compose(&(self.component)(&a, v), &self.from.theta_connect(&a, u, v));
                    if one != two {
                        out.push(format!("connector square fails at {u}⊆{v} on sample {k}"));
                    }
                }
            }
        }
        out
    }
}

/// The comparison from the all-zero module into a coreflective module on
/// the same base: coordinates kept by U carry the identity, the rest carry
/// the unique map out of the zero object.
pub fn coreflective_comparison(base: CCat, coords: Vec<CoordComonad>) -> ModuleTransform {
    let from = CModule::theta_n(base);
    let to = CModule::coreflective(base, coords.clone());
    let t = base.target;
    let component = Rc::new(move |a: &BaseOb, u: usize| -> BaseMor {
        a.iter()
            .enumerate()
            .map(|(i, o)| {
                if u & (1 << i) != 0 {
                    t.id(o)
                } else {
                    t.from_initial(&coords[i].apply_ob(t, o))
                }
            })
            .collect()
    });
    ModuleTransform { from, to, component }
}

/// A morphism of modules over different bases: a functor G between the
/// bases that intertwines the two actions on the nose.
pub struct CModuleMorphism {
    pub from: CModule,
    pub to: CModule,
    pub ob: Rc<dyn Fn(&BaseOb) -> BaseOb>,
    pub mor: Rc<dyn Fn(&BaseMor) -> BaseMor>,
    pub token: String,
}

impl CModuleMorphism {
    pub fn identity(m: &CModule) -> CModuleMorphism {
        CModuleMorphism {
            from: m.clone(),
            to: m.clone(),
            ob: Rc::new(|a| a.clone()),
            mor: Rc::new(|f| f.clone()),
            token: "id".into(),
        }
    }

    pub fn validate_on(&self, samples: &[BaseMor]) -> Vec<String> {
        let mut out = Vec::new();
        assert_eq!(self.from.n, self.to.n, "module morphisms live over one subset poset");
        let full = (1usize << self.from.n) - 1;
        let t = self.from.base;
        for (k, f) in samples.iter().enumerate() {
            let a = t.dom(f);
            let ga = (self.ob)(&a);
            if (self.mor)(&t.id(&a)) != self.to.base.id(&ga) {
                out.push(format!("does not preserve identities on sample {k}"));
            }
            for u in 0..=full {
                if (self.ob)(&self.from.theta_ob(&a, u)) != self.to.theta_ob(&ga, u) {
                    out.push(format!("object square fails at U={u} on sample {k}"));
                }
                if (self.mor)(&self.from.theta_mor(f, u)) != self.to.theta_mor(&(self.mor)(f), u) {
                    out.push(format!("morphism square fails at U={u} on sample {k}"));
                }
                for v in 0..=full {
                    if v & u != u {
                        continue;
                    }
                    let lhs = (self.mor)(&self.from.theta_connect(&a, u, v));
                    let rhs = self.to.theta_connect(&ga, u, v);
                    if lhs != rhs {
                        out.push(format!("connector image fails at {u}⊆{v} on sample {k}"));
                    }
                }
            }
        }
        out
    }
}

/// The diagonal-along-a-surjection morphism: for s : {1..n} ↠ {1..m}, the
/// functor A^m → A^n repeating coordinate s(i) at position i is a module
/// morphism from the all-zero module on A^m to the restriction along the
/// preimage map of the all-zero module on A^n.
pub fn diagonal_for_surjection(s: &crate::cubes::Surjection, target: Target) -> CModuleMorphism {
    let m = s.m;
    let n = s.n;
    let from = CModule::theta_n(CCat::new(target, m));
    let to = CModule::restricted(CModule::theta_n(CCat::new(target, n)), &s.poset_functor());
    let map = s.map.clone();
    let map2 = s.map.clone();
    CModuleMorphism {
        from,
        to,
        ob: Rc::new(move |a: &BaseOb| map.iter().map(|&j| a[j].clone()).collect()),
        mor: Rc::new(move |f: &BaseMor| map2.iter().map(|&j| f[j].clone()).collect()),
        token: format!("diag[{:?}]", s.map),
    }
}
