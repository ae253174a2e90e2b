//! Computable target categories: finite-dimensional vector spaces over a
//! prime field and finite pointed sets, together with exact finite limits
//! and colimits of table-indexed diagrams.
//!
//! Everything is canonical: objects are dimensions / underlying sizes,
//! morphisms are matrices / basepoint-preserving maps on `{0..n-1}` with
//! basepoint `0`, and limit/colimit vertices come with a fixed choice of
//! basis (or element numbering) so that repeated constructions yield
//! byte-identical results. Mediating maps are computed and then re-checked
//! against the defining equations, so a violated universal property is an
//! error, never a silent wrong answer.

use crate::fincat::{TableCategory, TableFunctor};
use crate::gf::Matrix;
use crate::pset::{self, PFun};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Finite-dimensional vector spaces over GF(p).
    VectGF { p: u64 },
    /// Finite pointed sets; the basepoint of `{0..n-1}` is `0`.
    PSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ob {
    Dim(usize),
    Size(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Mor {
    Mat(Matrix),
    Fun(PFun),
}

impl Ob {
    pub fn dim(&self) -> usize {
        match self {
            Ob::Dim(d) => *d,
            Ob::Size(_) => panic!("expected a vector-space object"),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Ob::Size(s) => *s,
            Ob::Dim(_) => panic!("expected a pointed-set object"),
        }
    }
}

impl Mor {
    pub fn mat(&self) -> &Matrix {
        match self {
            Mor::Mat(m) => m,
            Mor::Fun(_) => panic!("expected a matrix morphism"),
        }
    }

    pub fn fun(&self) -> &PFun {
        match self {
            Mor::Fun(f) => f,
            Mor::Mat(_) => panic!("expected a pointed-map morphism"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatError {
    #[error("cocone does not commute past morphism {0}")]
    NonCommutingCocone(String),
    #[error("cone does not commute past morphism {0}")]
    NonCommutingCone(String),
    #[error("diagram is not functorial: {0}")]
    BadDiagram(String),
    #[error("universal property violated: {0}")]
    Universal(String),
}

impl Target {
    pub fn zero_ob(&self) -> Ob {
        match self {
            Target::VectGF { .. } => Ob::Dim(0),
            Target::PSet => Ob::Size(1),
        }
    }

    pub fn is_zero_ob(&self, ob: &Ob) -> bool {
        *ob == self.zero_ob()
    }

    /// Both targets have a zero object, so terminal = initial.
    pub fn terminal(&self) -> Ob {
        self.zero_ob()
    }

    pub fn initial(&self) -> Ob {
        self.zero_ob()
    }

    pub fn id(&self, ob: &Ob) -> Mor {
        match (self, ob) {
            (Target::VectGF { p }, Ob::Dim(d)) => Mor::Mat(Matrix::identity(*p, *d)),
            (Target::PSet, Ob::Size(s)) => Mor::Fun(PFun::identity(*s)),
            _ => panic!("object does not belong to this target"),
        }
    }

    pub fn dom(&self, m: &Mor) -> Ob {
        match m {
            Mor::Mat(a) => Ob::Dim(a.cols),
            Mor::Fun(f) => Ob::Size(f.dom),
        }
    }

    pub fn cod(&self, m: &Mor) -> Ob {
        match m {
            Mor::Mat(a) => Ob::Dim(a.rows),
            Mor::Fun(f) => Ob::Size(f.cod),
        }
    }

    /// g∘f.
    pub fn compose(&self, g: &Mor, f: &Mor) -> Mor {
        match (g, f) {
            (Mor::Mat(g), Mor::Mat(f)) => Mor::Mat(g.mul(f)),
            (Mor::Fun(g), Mor::Fun(f)) => Mor::Fun(g.compose(f)),
            _ => panic!("cannot compose across targets"),
        }
    }

    pub fn is_iso(&self, m: &Mor) -> bool {
        match m {
            Mor::Mat(a) => a.is_invertible(),
            Mor::Fun(f) => f.is_bijective(),
        }
    }

    pub fn inverse(&self, m: &Mor) -> Option<Mor> {
        match m {
            Mor::Mat(a) => a.inverse().map(Mor::Mat),
            Mor::Fun(f) => f.inverse().map(Mor::Fun),
        }
    }

    pub fn zero_mor(&self, a: &Ob, b: &Ob) -> Mor {
        match self {
            Target::VectGF { p } => Mor::Mat(Matrix::zeros(*p, b.dim(), a.dim())),
            Target::PSet => Mor::Fun(PFun::zero(a.size(), b.size())),
        }
    }

    /// The unique map into the terminal object.
    pub fn to_terminal(&self, a: &Ob) -> Mor {
        self.zero_mor(a, &self.terminal())
    }

    /// The unique map out of the initial object.
    pub fn from_initial(&self, b: &Ob) -> Mor {
        self.zero_mor(&self.initial(), b)
    }

    /// Underlying size used for cost accounting: dimension or cardinality.
    pub fn ob_weight(&self, ob: &Ob) -> usize {
        match ob {
            Ob::Dim(d) => *d,
            Ob::Size(s) => *s,
        }
    }

    /// Finite product with canonical projections. For vector spaces this
    /// is the direct sum with block coordinates in argument order; for
    /// pointed sets the cartesian product numbered with the first factor
    /// most significant. Both choices are strictly associative and have
    /// the zero object as a strict unit.
    pub fn product(&self, obs: &[Ob]) -> (Ob, Vec<Mor>) {
        match self {
            Target::VectGF { p } => {
                let dims: Vec<usize> = obs.iter().map(|o| o.dim()).collect();
                let total: usize = dims.iter().sum();
                let mut projections = Vec::with_capacity(obs.len());
                let mut offset = 0;
                for &d in &dims {
                    let mut proj = Matrix::zeros(*p, d, total);
                    for r in 0..d {
                        proj[(r, offset + r)] = 1;
                    }
                    projections.push(Mor::Mat(proj));
                    offset += d;
                }
                (Ob::Dim(total), projections)
            }
            Target::PSet => {
                let sizes: Vec<usize> = obs.iter().map(|o| o.size()).collect();
                let total = pset::prod_size(&sizes);
                let projections =
                    (0..obs.len()).map(|i| Mor::Fun(pset::proj_map(&sizes, i))).collect();
                (Ob::Size(total), projections)
            }
        }
    }

    /// Mediating map into a product from legs sharing a common domain.
    pub fn tuple(&self, legs: &[Mor]) -> Mor {
        assert!(!legs.is_empty() || matches!(self, Target::VectGF { .. } | Target::PSet));
        match self {
            Target::VectGF { p } => {
                if legs.is_empty() {
                    return Mor::Mat(Matrix::zeros(*p, 0, 0));
                }
                let cols = legs[0].mat().cols;
                let parts: Vec<&Matrix> = legs.iter().map(|l| l.mat()).collect();
                Mor::Mat(Matrix::vstack_all(*p, cols, &parts))
            }
            Target::PSet => {
                if legs.is_empty() {
                    return Mor::Fun(PFun::zero(1, 1));
                }
                let parts: Vec<&PFun> = legs.iter().map(|l| l.fun()).collect();
                Mor::Fun(pset::tuple_map(&parts))
            }
        }
    }

    /// Product of morphisms: ∏fᵢ : ∏domᵢ → ∏codᵢ in the canonical numbering.
    pub fn product_mor(&self, ms: &[Mor]) -> Mor {
        match self {
            Target::VectGF { p } => {
                let mut acc = Matrix::zeros(*p, 0, 0);
                for m in ms {
                    acc = acc.direct_sum(m.mat());
                }
                Mor::Mat(acc)
            }
            Target::PSet => {
                let parts: Vec<&PFun> = ms.iter().map(|m| m.fun()).collect();
                Mor::Fun(pset::prod_map(&parts))
            }
        }
    }
}

/// A diagram: a functor from a table category into a computable target.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub index: Arc<TableCategory>,
    pub target: Target,
    pub obs: Vec<Ob>,
    pub mors: Vec<Mor>,
}

impl Diagram {
    pub fn ob(&self, i: usize) -> &Ob {
        &self.obs[i]
    }

    pub fn mor(&self, m: usize) -> &Mor {
        &self.mors[m]
    }

    /// Exact functoriality check over the whole composition table.
    pub fn validate(&self) -> Result<(), CatError> {
        let idx = &self.index;
        if self.obs.len() != idx.n_objects() || self.mors.len() != idx.n_mors() {
            return Err(CatError::BadDiagram("object/morphism count mismatch".into()));
        }
        for m in 0..idx.n_mors() {
            if self.target.dom(&self.mors[m]) != self.obs[idx.dom(m)]
                || self.target.cod(&self.mors[m]) != self.obs[idx.cod(m)]
            {
                return Err(CatError::BadDiagram(format!(
                    "image of {} has wrong endpoints",
                    idx.mors[m].name
                )));
            }
        }
        for (ob, &idm) in idx.ids.iter().enumerate() {
            if self.mors[idm] != self.target.id(&self.obs[ob]) {
                return Err(CatError::BadDiagram(format!(
                    "identity of {} is not sent to an identity",
                    idx.objects[ob]
                )));
            }
        }
        for (&(g, f), &gf) in &idx.comp {
            if self.target.compose(&self.mors[g], &self.mors[f]) != self.mors[gf] {
                return Err(CatError::BadDiagram(format!(
                    "composition fails on {}∘{}",
                    idx.mors[g].name, idx.mors[f].name
                )));
            }
        }
        Ok(())
    }

    /// Precompose with a functor into the index category (reindexing).
    pub fn precompose(&self, gamma: &TableFunctor) -> Diagram {
        assert_eq!(gamma.target.name, self.index.name, "reindexing functor must land in the diagram's index");
        Diagram {
            index: gamma.source.clone(),
            target: self.target,
            obs: gamma.ob_map.iter().map(|&o| self.obs[o].clone()).collect(),
            mors: gamma.mor_map.iter().map(|&m| self.mors[m].clone()).collect(),
        }
    }

    /// The constant diagram at an object.
    pub fn constant(index: &Arc<TableCategory>, target: Target, at: &Ob) -> Diagram {
        Diagram {
            index: index.clone(),
            target,
            obs: vec![at.clone(); index.n_objects()],
            mors: vec![target.id(at); index.n_mors()],
        }
    }
}

/// A natural transformation between diagrams on the same index category.
#[derive(Clone, Debug)]
pub struct DiagMap {
    pub components: Vec<Mor>,
}

impl DiagMap {
    pub fn validate(&self, src: &Diagram, dst: &Diagram) -> Result<(), CatError> {
        let idx = &src.index;
        assert_eq!(idx.name, dst.index.name, "diagram map needs a common index");
        for m in 0..idx.n_mors() {
            let (a, b) = (idx.dom(m), idx.cod(m));
            let lhs = src.target.compose(&self.components[b], &src.mors[m]);
            let rhs = src.target.compose(&dst.mors[m], &self.components[a]);
            if lhs != rhs {
                return Err(CatError::BadDiagram(format!(
                    "naturality fails at {}",
                    idx.mors[m].name
                )));
            }
        }
        Ok(())
    }
}

/// Internal data remembered by a colimit so mediating maps can be solved.
#[derive(Clone, Debug)]
enum ColimCore {
    Vect {
        /// projection ⊕ᵢD(i) → vertex and a section of it
        proj: Matrix,
        section: Matrix,
    },
    PSet {
        /// one (object, element) representative per vertex element
        reps: Vec<(usize, usize)>,
    },
}

#[derive(Clone, Debug)]
pub struct ColimResult {
    pub vertex: Ob,
    pub legs: Vec<Mor>,
    core: ColimCore,
}

#[derive(Clone, Debug)]
enum LimCore {
    Vect {
        /// columns form a basis of the solution space inside ∏ᵢD(i)
        basis: Matrix,
    },
    PSet {
        lookup: HashMap<Vec<usize>, usize>,
    },
}

#[derive(Clone, Debug)]
pub struct LimResult {
    pub vertex: Ob,
    pub legs: Vec<Mor>,
    core: LimCore,
}

/// Colimit of a diagram, computed from its generating morphisms.
pub fn colim(d: &Diagram) -> ColimResult {
    match d.target {
        Target::VectGF { p } => colim_vect(d, p),
        Target::PSet => colim_pset(d),
    }
}

fn block_offsets(dims: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    for &d in dims {
        offsets.push(acc);
        acc += d;
    }
    offsets.push(acc);
    offsets
}

fn colim_vect(d: &Diagram, p: u64) -> ColimResult {
    let idx = &d.index;
    let dims: Vec<usize> = d.obs.iter().map(|o| o.dim()).collect();
    let offsets = block_offsets(&dims);
    let total = offsets[idx.n_objects()];
    // relation columns: inj_cod ∘ D(m) − inj_dom for each generator m
    let gens = idx.generators();
    let rel_cols: usize = gens.iter().map(|&m| dims[idx.dom(m)]).sum();
    let mut rel = Matrix::zeros(p, total, rel_cols);
    let mut col = 0;
    for &m in gens {
        let (a, b) = (idx.dom(m), idx.cod(m));
        let dm = d.mors[m].mat();
        for c in 0..dims[a] {
            for r in 0..dims[b] {
                rel[(offsets[b] + r, col + c)] = dm[(r, c)];
            }
            let v = rel[(offsets[a] + c, col + c)];
            rel[(offsets[a] + c, col + c)] = (v + p - 1) % p;
        }
        col += dims[a];
    }
    let (proj, section) = rel.cokernel();
    let legs = (0..idx.n_objects())
        .map(|i| {
            let mut inj = Matrix::zeros(p, total, dims[i]);
            for r in 0..dims[i] {
                inj[(offsets[i] + r, r)] = 1;
            }
            Mor::Mat(proj.mul(&inj))
        })
        .collect();
    ColimResult {
        vertex: Ob::Dim(proj.rows),
        legs,
        core: ColimCore::Vect { proj, section },
    }
}

fn colim_pset(d: &Diagram) -> ColimResult {
    let idx = &d.index;
    let sizes: Vec<usize> = d.obs.iter().map(|o| o.size()).collect();
    let offsets = block_offsets(&sizes);
    let total = offsets[idx.n_objects()];
    // union-find over the disjoint union; wedge the basepoints, then impose
    // x ~ D(m)(x) for generators m
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let unite = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            // keep the least flat index as the root so numbering is canonical
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    };
    for i in 1..idx.n_objects() {
        unite(&mut parent, offsets[0], offsets[i]);
    }
    for &m in idx.generators() {
        let (a, b) = (idx.dom(m), idx.cod(m));
        let f = d.mors[m].fun();
        for x in 0..sizes[a] {
            unite(&mut parent, offsets[a] + x, offsets[b] + f.map[x]);
        }
    }
    // classes ordered by least member; with at least one object the wedge
    // class contains flat index 0 and therefore lands at vertex element 0
    let mut roots: Vec<usize> = Vec::new();
    let mut class_of = vec![usize::MAX; total];
    for x in 0..total {
        let r = find(&mut parent, x);
        if r == x {
            roots.push(x);
        }
    }
    for x in 0..total {
        let r = find(&mut parent, x);
        class_of[x] = roots.binary_search(&r).expect("root is listed");
    }
    let n_classes = if total == 0 { 1 } else { roots.len() };
    let reps: Vec<(usize, usize)> = if total == 0 {
        vec![(usize::MAX, 0)]
    } else {
        roots
            .iter()
            .map(|&r| {
                let i = (0..idx.n_objects()).rfind(|&i| offsets[i] <= r).unwrap();
                (i, r - offsets[i])
            })
            .collect()
    };
    let legs = (0..idx.n_objects())
        .map(|i| {
            Mor::Fun(PFun::new(
                sizes[i],
                n_classes,
                (0..sizes[i]).map(|x| class_of[offsets[i] + x]).collect(),
            ))
        })
        .collect();
    ColimResult { vertex: Ob::Size(n_classes), legs, core: ColimCore::PSet { reps } }
}

impl ColimResult {
    /// Check a cocone against the diagram's generating morphisms.
    pub fn check_cocone(d: &Diagram, legs: &[Mor]) -> Result<(), CatError> {
        for &m in d.index.generators() {
            let (a, b) = (d.index.dom(m), d.index.cod(m));
            if d.target.compose(&legs[b], &d.mors[m]) != legs[a] {
                return Err(CatError::NonCommutingCocone(d.index.mors[m].name.clone()));
            }
        }
        Ok(())
    }

    /// The unique morphism out of the colimit through a commuting cocone.
    pub fn mediate_out(&self, d: &Diagram, cocone: &[Mor]) -> Result<Mor, CatError> {
        Self::check_cocone(d, cocone)?;
        match (&self.core, d.target) {
            (ColimCore::Vect { proj, section }, Target::VectGF { p }) => {
                let parts: Vec<&Matrix> = cocone.iter().map(|c| c.mat()).collect();
                let rows = parts.first().map_or(0, |m| m.rows);
                let flat = Matrix::hstack_all(p, rows, &parts);
                let u = flat.mul(section);
                if u.mul(proj) != flat {
                    return Err(CatError::Universal(
                        "mediating map does not restrict to the cocone".into(),
                    ));
                }
                Ok(Mor::Mat(u))
            }
            (ColimCore::PSet { reps }, Target::PSet) => {
                let cod = match cocone.first() {
                    Some(c) => c.fun().cod,
                    None => 1,
                };
                let map: Vec<usize> = reps
                    .iter()
                    .map(|&(i, x)| if i == usize::MAX { 0 } else { cocone[i].fun().map[x] })
                    .collect();
                let u = PFun::new(self.vertex.size(), cod, map);
                for (i, leg) in self.legs.iter().enumerate() {
                    if u.compose(leg.fun()) != *cocone[i].fun() {
                        return Err(CatError::Universal(format!(
                            "mediating map disagrees with the cocone at object {}",
                            d.index.objects[i]
                        )));
                    }
                }
                Ok(Mor::Fun(u))
            }
            _ => panic!("colimit core does not match the target"),
        }
    }
}

/// Limit of a diagram, computed from its generating morphisms.
pub fn lim(d: &Diagram) -> LimResult {
    match d.target {
        Target::VectGF { p } => lim_vect(d, p),
        Target::PSet => lim_pset(d),
    }
}

fn lim_vect(d: &Diagram, p: u64) -> LimResult {
    let idx = &d.index;
    let dims: Vec<usize> = d.obs.iter().map(|o| o.dim()).collect();
    let offsets = block_offsets(&dims);
    let total = offsets[idx.n_objects()];
    let gens = idx.generators();
    let rel_rows: usize = gens.iter().map(|&m| dims[idx.cod(m)]).sum();
    // rows D(m)∘π_dom − π_cod; kernel = compatible families
    let mut rel = Matrix::zeros(p, rel_rows, total);
    let mut row = 0;
    for &m in gens {
        let (a, b) = (idx.dom(m), idx.cod(m));
        let dm = d.mors[m].mat();
        for r in 0..dims[b] {
            for c in 0..dims[a] {
                rel[(row + r, offsets[a] + c)] = dm[(r, c)];
            }
            let v = rel[(row + r, offsets[b] + r)];
            rel[(row + r, offsets[b] + r)] = (v + p - 1) % p;
        }
        row += dims[b];
    }
    let basis = rel.kernel_basis();
    let legs = (0..idx.n_objects())
        .map(|i| Mor::Mat(basis.row_slice(offsets[i], offsets[i + 1])))
        .collect();
    LimResult { vertex: Ob::Dim(basis.cols), legs, core: LimCore::Vect { basis } }
}

fn lim_pset(d: &Diagram) -> LimResult {
    let idx = &d.index;
    let sizes: Vec<usize> = d.obs.iter().map(|o| o.size()).collect();
    let n = idx.n_objects();
    if n == 0 {
        let lookup = HashMap::from([(Vec::new(), 0)]);
        return LimResult {
            vertex: Ob::Size(1),
            legs: Vec::new(),
            core: LimCore::PSet { lookup },
        };
    }
    let gens = idx.generators();
    // Constraints bucketed by the later of the two objects they touch, so a
    // depth-first scan in object order checks every assignment as soon as it
    // is complete — and an arrow from an assigned object forces the value of
    // its target outright, which collapses the search to a single branch on
    // indexes whose least object comes first (comma categories do this).
    let mut incoming: Vec<Vec<(usize, &[usize])>> = vec![Vec::new(); n];
    let mut outgoing: Vec<Vec<(usize, &[usize])>> = vec![Vec::new(); n];
    let mut loops: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for &m in gens {
        let (a, b) = (idx.dom(m), idx.cod(m));
        let map = d.mors[m].fun().map.as_slice();
        if a == b {
            loops[a].push(map);
        } else if a < b {
            incoming[b].push((a, map));
        } else {
            outgoing[a].push((b, map));
        }
    }
    fn extend(
        j: usize,
        sizes: &[usize],
        incoming: &[Vec<(usize, &[usize])>],
        outgoing: &[Vec<(usize, &[usize])>],
        loops: &[Vec<&[usize]>],
        partial: &mut Vec<usize>,
        tuples: &mut Vec<Vec<usize>>,
        visited: &mut usize,
    ) {
        if j == sizes.len() {
            tuples.push(partial.clone());
            return;
        }
        *visited += 1;
        assert!(
            *visited <= 50_000_000,
            "pointed-set limit search exceeded the node budget"
        );
        let consistent = |x: usize, partial: &[usize]| {
            incoming[j].iter().all(|&(a, map)| map[partial[a]] == x)
                && outgoing[j].iter().all(|&(b, map)| map[x] == partial[b])
                && loops[j].iter().all(|map| map[x] == x)
        };
        let forced = incoming[j].first().map(|&(a, map)| map[partial[a]]);
        let candidates = forced.map_or(0..sizes[j], |x| x..x + 1);
        for x in candidates {
            if consistent(x, partial) {
                partial.push(x);
                extend(j + 1, sizes, incoming, outgoing, loops, partial, tuples, visited);
                partial.pop();
            }
        }
    }
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut partial: Vec<usize> = Vec::new();
    let mut visited = 0usize;
    extend(0, &sizes, &incoming, &outgoing, &loops, &mut partial, &mut tuples, &mut visited);
    let lookup: HashMap<Vec<usize>, usize> =
        tuples.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
    let legs = (0..n)
        .map(|i| {
            Mor::Fun(PFun::new(
                tuples.len(),
                sizes[i],
                tuples.iter().map(|t| t[i]).collect(),
            ))
        })
        .collect();
    LimResult { vertex: Ob::Size(tuples.len()), legs, core: LimCore::PSet { lookup } }
}

impl LimResult {
    pub fn check_cone(d: &Diagram, legs: &[Mor]) -> Result<(), CatError> {
        for &m in d.index.generators() {
            let (a, b) = (d.index.dom(m), d.index.cod(m));
            if d.target.compose(&d.mors[m], &legs[a]) != legs[b] {
                return Err(CatError::NonCommutingCone(d.index.mors[m].name.clone()));
            }
        }
        Ok(())
    }

    /// The unique morphism into the limit through a commuting cone.
    pub fn mediate_in(&self, d: &Diagram, cone: &[Mor]) -> Result<Mor, CatError> {
        Self::check_cone(d, cone)?;
        match (&self.core, d.target) {
            (LimCore::Vect { basis }, Target::VectGF { p }) => {
                let parts: Vec<&Matrix> = cone.iter().map(|c| c.mat()).collect();
                let cols = parts.first().map_or(0, |m| m.cols);
                let flat = Matrix::vstack_all(p, cols, &parts);
                match basis.solve_unique(&flat) {
                    Some(v) => Ok(Mor::Mat(v)),
                    None => Err(CatError::Universal(
                        "cone does not factor uniquely through the limit".into(),
                    )),
                }
            }
            (LimCore::PSet { lookup }, Target::PSet) => {
                let dom = match cone.first() {
                    Some(c) => c.fun().dom,
                    None => {
                        // empty diagram: the unique map to the one-point limit
                        return Ok(Mor::Fun(PFun::zero(1, 1)));
                    }
                };
                let mut map = Vec::with_capacity(dom);
                for x in 0..dom {
                    let tuple: Vec<usize> = cone.iter().map(|c| c.fun().map[x]).collect();
                    match lookup.get(&tuple) {
                        Some(&k) => map.push(k),
                        None => {
                            return Err(CatError::Universal(
                                "cone lands outside the limit subobject".into(),
                            ))
                        }
                    }
                }
                Ok(Mor::Fun(PFun::new(dom, self.vertex.size(), map)))
            }
            _ => panic!("limit core does not match the target"),
        }
    }
}

/// The map between colimits induced by a natural transformation of diagrams.
pub fn colim_map(
    src: &Diagram,
    dst: &Diagram,
    map: &DiagMap,
    src_colim: &ColimResult,
    dst_colim: &ColimResult,
) -> Result<Mor, CatError> {
    let cocone: Vec<Mor> = (0..src.index.n_objects())
        .map(|i| src.target.compose(&dst_colim.legs[i], &map.components[i]))
        .collect();
    let _ = dst;
    src_colim.mediate_out(src, &cocone)
}
