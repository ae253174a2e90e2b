//! Fully tabulated finite categories, functors, and natural transformations.
//!
//! Objects and morphisms are opaque interned tokens; equality is token
//! equality and composition is a stored table. Everything is small enough
//! to enumerate, so all laws (closure, associativity, identities,
//! functoriality, naturality) are checked by brute force and reported as
//! structured violations rather than panics.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;
use std::sync::OnceLock;

#[derive(Clone, Debug)]
pub struct MorInfo {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

/// A finite category given by explicit tables.
#[derive(Debug)]
pub struct TableCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub mors: Vec<MorInfo>,
    pub ids: Vec<usize>,                     // object ix -> identity morphism ix
    pub comp: HashMap<(usize, usize), usize>, // (g, f) -> g∘f when cod f = dom g
    ob_index: HashMap<String, usize>,
    mor_index: HashMap<String, usize>,
    generators: OnceLock<Vec<usize>>,
}

/// One law violation found by `validate_category` and friends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: String,
}

impl Violation {
    pub(crate) fn new(law: &str, witness: String) -> Violation {
        Violation { law: law.to_string(), witness }
    }
}

pub struct CatBuilder {
    name: String,
    objects: Vec<String>,
    mors: Vec<MorInfo>,
    ids: HashMap<usize, usize>,
    comp: HashMap<(usize, usize), usize>,
}

impl CatBuilder {
    pub fn new(name: &str) -> CatBuilder {
        CatBuilder {
            name: name.to_string(),
            objects: Vec::new(),
            mors: Vec::new(),
            ids: HashMap::new(),
            comp: HashMap::new(),
        }
    }

    pub fn object(&mut self, token: &str) -> usize {
        self.objects.push(token.to_string());
        self.objects.len() - 1
    }

    pub fn morphism(&mut self, token: &str, dom: usize, cod: usize) -> usize {
        self.mors.push(MorInfo { name: token.to_string(), dom, cod });
        self.mors.len() - 1
    }

    pub fn identity(&mut self, ob: usize, mor: usize) {
        self.ids.insert(ob, mor);
    }

    pub fn compose(&mut self, g: usize, f: usize, gf: usize) {
        self.comp.insert((g, f), gf);
    }

    pub fn build(self) -> TableCategory {
        let mut ids = vec![usize::MAX; self.objects.len()];
        for (ob, m) in self.ids {
            ids[ob] = m;
        }
        assert!(ids.iter().all(|&m| m != usize::MAX), "every object needs an identity");
        TableCategory::assemble(self.name, self.objects, self.mors, ids, self.comp)
    }
}

impl TableCategory {
    fn assemble(
        name: String,
        objects: Vec<String>,
        mors: Vec<MorInfo>,
        ids: Vec<usize>,
        comp: HashMap<(usize, usize), usize>,
    ) -> TableCategory {
        let ob_index = objects.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mor_index = mors.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
        TableCategory { name, objects, mors, ids, comp, ob_index, mor_index, generators: OnceLock::new() }
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_mors(&self) -> usize {
        self.mors.len()
    }

    pub fn ob_ix(&self, token: &str) -> Option<usize> {
        self.ob_index.get(token).copied()
    }

    pub fn mor_ix(&self, token: &str) -> Option<usize> {
        self.mor_index.get(token).copied()
    }

    pub fn dom(&self, m: usize) -> usize {
        self.mors[m].dom
    }

    pub fn cod(&self, m: usize) -> usize {
        self.mors[m].cod
    }

    pub fn id_of(&self, ob: usize) -> usize {
        self.ids[ob]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.ids[self.mors[m].dom] == m
    }

    /// g∘f, or None if not composable / missing from the table.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        self.comp.get(&(g, f)).copied()
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.mors.len()).filter(|&m| self.dom(m) == a && self.cod(m) == b).collect()
    }

    /// Exhaustive law check; empty result means the table is a category.
    pub fn validate_category(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (ob, &idm) in self.ids.iter().enumerate() {
            if self.dom(idm) != ob || self.cod(idm) != ob {
                out.push(Violation::new(
                    "identity-endpoints",
                    format!("id of {} is {} with wrong endpoints", self.objects[ob], self.mors[idm].name),
                ));
            }
        }
        for f in 0..self.mors.len() {
            // identity laws
            let idc = self.ids[self.cod(f)];
            let idd = self.ids[self.dom(f)];
            if self.compose(idc, f) != Some(f) {
                out.push(Violation::new("left-identity", format!("id∘{} ≠ {}", self.mors[f].name, self.mors[f].name)));
            }
            if self.compose(f, idd) != Some(f) {
                out.push(Violation::new("right-identity", format!("{}∘id ≠ {}", self.mors[f].name, self.mors[f].name)));
            }
        }
        // closure: every composable pair must appear with correct endpoints
        for g in 0..self.mors.len() {
            for f in 0..self.mors.len() {
                if self.cod(f) != self.dom(g) {
                    continue;
                }
                match self.comp.get(&(g, f)) {
                    None => out.push(Violation::new(
                        "closure",
                        format!("compose({}, {}) undefined", self.mors[g].name, self.mors[f].name),
                    )),
                    Some(&gf) => {
                        if self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) {
                            out.push(Violation::new(
                                "composite-endpoints",
                                format!("{}∘{} = {} has wrong endpoints", self.mors[g].name, self.mors[f].name, self.mors[gf].name),
                            ));
                        }
                    }
                }
            }
        }
        // associativity on all composable triples
        for f in 0..self.mors.len() {
            for g in 0..self.mors.len() {
                if self.cod(f) != self.dom(g) {
                    continue;
                }
                for h in 0..self.mors.len() {
                    if self.cod(g) != self.dom(h) {
                        continue;
                    }
                    let left = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                    let right = self.compose(g, f).and_then(|gf| self.compose(h, gf));
                    if left != right || left.is_none() {
                        out.push(Violation::new(
                            "associativity",
                            format!("({}∘{})∘{} ≠ {}∘({}∘{})", self.mors[h].name, self.mors[g].name, self.mors[f].name, self.mors[h].name, self.mors[g].name, self.mors[f].name),
                        ));
                    }
                }
            }
        }
        out
    }

    /// A generating set of morphisms: every morphism is a composite of
    /// generators and identities. Starts from the indecomposables and adds
    /// the lowest-index missing morphism until the composition closure
    /// covers the whole table (this handles idempotents, which factor only
    /// through themselves).
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let non_id: Vec<usize> = (0..self.mors.len()).filter(|&m| !self.is_identity(m)).collect();
            let decomposable: HashSet<usize> = non_id
                .iter()
                .copied()
                .filter(|&m| {
                    non_id.iter().any(|&g| {
                        non_id.iter().any(|&f| g != m && f != m && self.compose(g, f) == Some(m))
                    })
                })
                .collect();
            let mut gens: Vec<usize> = non_id.iter().copied().filter(|m| !decomposable.contains(m)).collect();
            loop {
                let closure = self.closure_of(&gens);
                match non_id.iter().find(|m| !closure.contains(m)) {
                    None => break,
                    Some(&missing) => gens.push(missing),
                }
            }
            gens.sort_unstable();
            gens
        })
    }

    fn closure_of(&self, gens: &[usize]) -> HashSet<usize> {
        let mut closure: HashSet<usize> = gens.iter().copied().collect();
        loop {
            let mut added = false;
            let current: Vec<usize> = closure.iter().copied().collect();
            for &g in &current {
                for &f in &current {
                    if let Some(gf) = self.compose(g, f) {
                        if !self.is_identity(gf) && closure.insert(gf) {
                            added = true;
                        }
                    }
                }
            }
            if !added {
                return closure;
            }
        }
    }

    /// The one-object, one-morphism category.
    pub fn point(name: &str) -> TableCategory {
        let mut b = CatBuilder::new(name);
        let o = b.object("*");
        let i = b.morphism("id*", o, o);
        b.identity(o, i);
        b.compose(i, i, i);
        b.build()
    }

    /// Build a poset category from tokens and a reflexive order predicate.
    /// There is exactly one morphism x -> y when leq(x, y).
    pub fn poset(name: &str, tokens: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> TableCategory {
        let n = tokens.len();
        let mut b = CatBuilder::new(name);
        for t in &tokens {
            b.object(t);
        }
        let mut mor_of = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    let token = if x == y {
                        format!("id<{}>", tokens[x])
                    } else {
                        format!("{}>{}", tokens[x], tokens[y])
                    };
                    let m = b.morphism(&token, x, y);
                    mor_of.insert((x, y), m);
                    if x == y {
                        b.identity(x, m);
                    }
                }
            }
        }
        for (&(x, y), &f) in &mor_of {
            for (&(y2, z), &g) in &mor_of {
                if y == y2 {
                    let gf = mor_of[&(x, z)];
                    b.compose(g, f, gf);
                }
            }
        }
        b.build()
    }
}

/// Product category: objects are pairs, morphisms compose componentwise.
/// Object (i, j) gets index i * |D| + j.
pub fn product_category(c: &Arc<TableCategory>, d: &Arc<TableCategory>) -> TableCategory {
    let name = format!("({}x{})", c.name, d.name);
    let mut objects = Vec::with_capacity(c.n_objects() * d.n_objects());
    for co in &c.objects {
        for do_ in &d.objects {
            objects.push(format!("({}|{})", co, do_));
        }
    }
    let mut mors = Vec::with_capacity(c.n_mors() * d.n_mors());
    for (ci, cm) in c.mors.iter().enumerate() {
        for (di, dm) in d.mors.iter().enumerate() {
            let _ = (ci, di);
            mors.push(MorInfo {
                name: format!("({}|{})", cm.name, dm.name),
                dom: cm.dom * d.n_objects() + dm.dom,
                cod: cm.cod * d.n_objects() + dm.cod,
            });
        }
    }
    let ids: Vec<usize> = (0..objects.len())
        .map(|ob| {
            let (i, j) = (ob / d.n_objects(), ob % d.n_objects());
            c.ids[i] * d.n_mors() + d.ids[j]
        })
        .collect();
    let mut comp = HashMap::new();
    for (&(g1, f1), &gf1) in &c.comp {
        for (&(g2, f2), &gf2) in &d.comp {
            comp.insert((g1 * d.n_mors() + g2, f1 * d.n_mors() + f2), gf1 * d.n_mors() + gf2);
        }
    }
    TableCategory::assemble(name, objects, mors, ids, comp)
}

/// Pair index helpers for product categories built by `product_category`.
pub fn prod_ob_ix(d_size: usize, i: usize, j: usize) -> usize {
    i * d_size + j
}

pub fn prod_mor_ix(d_mors: usize, i: usize, j: usize) -> usize {
    i * d_mors + j
}

pub fn opposite_category(c: &TableCategory) -> TableCategory {
    let mors = c
        .mors
        .iter()
        .map(|m| MorInfo { name: m.name.clone(), dom: m.cod, cod: m.dom })
        .collect();
    let comp = c.comp.iter().map(|(&(g, f), &gf)| ((f, g), gf)).collect();
    TableCategory::assemble(format!("{}^op", c.name), c.objects.clone(), mors, c.ids.clone(), comp)
}

/// A functor between table categories, stored as index maps.
#[derive(Clone, Debug)]
pub struct TableFunctor {
    pub source: Arc<TableCategory>,
    pub target: Arc<TableCategory>,
    pub ob_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

impl TableFunctor {
    pub fn identity(c: &Arc<TableCategory>) -> TableFunctor {
        TableFunctor {
            source: c.clone(),
            target: c.clone(),
            ob_map: (0..c.n_objects()).collect(),
            mor_map: (0..c.n_mors()).collect(),
        }
    }

    pub fn ob(&self, o: usize) -> usize {
        self.ob_map[o]
    }

    pub fn mor(&self, m: usize) -> usize {
        self.mor_map[m]
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (s, t) = (&self.source, &self.target);
        for m in 0..s.n_mors() {
            let fm = self.mor_map[m];
            if t.dom(fm) != self.ob_map[s.dom(m)] || t.cod(fm) != self.ob_map[s.cod(m)] {
                out.push(Violation::new("functor-endpoints", format!("F({}) has wrong endpoints", s.mors[m].name)));
            }
        }
        for (ob, &idm) in s.ids.iter().enumerate() {
            if self.mor_map[idm] != t.ids[self.ob_map[ob]] {
                out.push(Violation::new("functor-identities", format!("F(id {}) is not an identity", s.objects[ob])));
            }
        }
        for (&(g, f), &gf) in &s.comp {
            let lhs = t.compose(self.mor_map[g], self.mor_map[f]);
            if lhs != Some(self.mor_map[gf]) {
                out.push(Violation::new(
                    "functor-composition",
                    format!("F({}∘{}) ≠ F({})∘F({})", s.mors[g].name, s.mors[f].name, s.mors[g].name, s.mors[f].name),
                ));
            }
        }
        out
    }

    pub fn compose(&self, inner: &TableFunctor) -> TableFunctor {
        // self ∘ inner
        assert!(Arc::ptr_eq(&inner.target, &self.source) || inner.target.name == self.source.name,
            "non-composable functors");
        TableFunctor {
            source: inner.source.clone(),
            target: self.target.clone(),
            ob_map: inner.ob_map.iter().map(|&o| self.ob_map[o]).collect(),
            mor_map: inner.mor_map.iter().map(|&m| self.mor_map[m]).collect(),
        }
    }

    /// γ×β : I×J -> A×B on the product tables.
    pub fn product(
        &self,
        other: &TableFunctor,
        src_prod: &Arc<TableCategory>,
        dst_prod: &Arc<TableCategory>,
    ) -> TableFunctor {
        let (jn, bn) = (other.source.n_objects(), other.target.n_objects());
        let (jm, bm) = (other.source.n_mors(), other.target.n_mors());
        let ob_map = (0..src_prod.n_objects())
            .map(|o| {
                let (i, j) = (o / jn, o % jn);
                self.ob_map[i] * bn + other.ob_map[j]
            })
            .collect();
        let mor_map = (0..src_prod.n_mors())
            .map(|m| {
                let (i, j) = (m / jm, m % jm);
                self.mor_map[i] * bm + other.mor_map[j]
            })
            .collect();
        TableFunctor { source: src_prod.clone(), target: dst_prod.clone(), ob_map, mor_map }
    }

    /// Is the functor injective on objects?
    pub fn injective_on_objects(&self) -> bool {
        let mut seen = HashSet::new();
        self.ob_map.iter().all(|&o| seen.insert(o))
    }

    /// Fully faithful: each hom-set maps bijectively onto the target hom-set.
    pub fn fully_faithful(&self) -> bool {
        let s = &self.source;
        let t = &self.target;
        for a in 0..s.n_objects() {
            for b in 0..s.n_objects() {
                let hom_s = s.hom(a, b);
                let hom_t = t.hom(self.ob_map[a], self.ob_map[b]);
                let image: HashSet<usize> = hom_s.iter().map(|&m| self.mor_map[m]).collect();
                if image.len() != hom_s.len() || image.len() != hom_t.len() {
                    return false;
                }
            }
        }
        true
    }

    /// No morphisms into the image from outside it (the hypothesis that
    /// collapses right Kan extensions along embeddings to a closed form).
    pub fn no_incoming_from_outside(&self) -> bool {
        let image: HashSet<usize> = self.ob_map.iter().copied().collect();
        let t = &self.target;
        for m in 0..t.n_mors() {
            if image.contains(&t.cod(m)) && !image.contains(&t.dom(m)) {
                return false;
            }
        }
        true
    }
}

/// Natural transformation between parallel table functors.
#[derive(Clone, Debug)]
pub struct TableNatTransform {
    pub source: TableFunctor,
    pub target: TableFunctor,
    /// component at object i of the common source category
    pub components: Vec<usize>,
}

impl TableNatTransform {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let s = &self.source.source;
        let t = &self.source.target;
        if self.components.len() != s.n_objects() {
            out.push(Violation::new("component-count", "wrong number of components".into()));
            return out;
        }
        for (a, &c) in self.components.iter().enumerate() {
            if t.dom(c) != self.source.ob_map[a] || t.cod(c) != self.target.ob_map[a] {
                out.push(Violation::new("component-endpoints", format!("component at {} mistyped", s.objects[a])));
            }
        }
        for m in 0..s.n_mors() {
            let (a, b) = (s.dom(m), s.cod(m));
            let lhs = t.compose(self.components[b], self.source.mor_map[m]);
            let rhs = t.compose(self.target.mor_map[m], self.components[a]);
            if lhs != rhs || lhs.is_none() {
                out.push(Violation::new("naturality", format!("square at {} fails", s.mors[m].name)));
            }
        }
        out
    }

    /// Whiskering K * α * H: component at a is K(α at H(a)).
    pub fn whisker(&self, pre: &TableFunctor, post: &TableFunctor) -> TableNatTransform {
        let components = (0..pre.source.n_objects())
            .map(|a| post.mor_map[self.components[pre.ob_map[a]]])
            .collect();
        TableNatTransform {
            source: post.compose(&self.source.compose(pre)),
            target: post.compose(&self.target.compose(pre)),
            components,
        }
    }

    pub fn vcompose(&self, first: &TableNatTransform) -> TableNatTransform {
        // self ∘ first (vertical)
        let t = &self.source.target;
        let components = (0..self.components.len())
            .map(|a| t.compose(self.components[a], first.components[a]).expect("vertical composite"))
            .collect();
        TableNatTransform { source: first.source.clone(), target: self.target.clone(), components }
    }
}

/// Comma category (a ↓ γ) for an object `a` of γ's target: objects are
/// pairs (i, f : a -> γ(i)), morphisms are morphisms m : i -> i' with
/// γ(m)∘f = f'. Objects are ordered by (i, f) index, so when the comma
/// category is an upset with a least element that element comes first.
/// Returns the table along with the projection functor to γ's source.
pub fn comma_category(a: usize, gamma: &TableFunctor) -> (Arc<TableCategory>, TableFunctor, Vec<(usize, usize)>) {
    let i_cat = &gamma.source;
    let t_cat = &gamma.target;
    let mut objs: Vec<(usize, usize)> = Vec::new(); // (i, f)
    for i in 0..i_cat.n_objects() {
        for f in t_cat.hom(a, gamma.ob_map[i]) {
            objs.push((i, f));
        }
    }
    let pos: HashMap<(usize, usize), usize> = objs.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut b = CatBuilder::new(&format!("({}↓{})", t_cat.objects[a], i_cat.name));
    for &(i, f) in &objs {
        b.object(&format!("({};{})", i_cat.objects[i], t_cat.mors[f].name));
    }
    let mut mor_entries: Vec<(usize, usize, usize)> = Vec::new(); // (src obj, dst obj, underlying m)
    for (src_ix, &(i, f)) in objs.iter().enumerate() {
        for m in 0..i_cat.n_mors() {
            if i_cat.dom(m) != i {
                continue;
            }
            let f2 = t_cat.compose(gamma.mor_map[m], f).expect("composable by construction");
            let dst_ix = pos[&(i_cat.cod(m), f2)];
            mor_entries.push((src_ix, dst_ix, m));
        }
    }
    let mut mor_ix_of: HashMap<(usize, usize), usize> = HashMap::new(); // (src obj, m) -> comma mor ix
    for (k, &(src, dst, m)) in mor_entries.iter().enumerate() {
        let token = format!("[{}:{}]", k, i_cat.mors[m].name);
        let mi = b.morphism(&token, src, dst);
        debug_assert_eq!(mi, k);
        mor_ix_of.insert((src, m), k);
        if i_cat.is_identity(m) {
            b.identity(src, k);
        }
    }
    for (k, &(src, _dst, m)) in mor_entries.iter().enumerate() {
        for (k2, &(src2, dst2, m2)) in mor_entries.iter().enumerate() {
            if dst2 != src {
                continue;
            }
            let mm = i_cat.compose(m, m2).expect("composable");
            let target = mor_ix_of[&(src2, mm)];
            b.compose(k, k2, target);
        }
    }
    let cat = Arc::new(b.build());
    let proj = TableFunctor {
        source: cat.clone(),
        target: i_cat.clone(),
        ob_map: objs.iter().map(|&(i, _)| i).collect(),
        mor_map: mor_entries.iter().map(|&(_, _, m)| m).collect(),
    };
    (cat, proj, objs)
}
