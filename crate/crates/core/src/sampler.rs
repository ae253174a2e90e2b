//! Seeded generators for reproducible test data: objects, morphisms,
//! isomorphisms, subset cubes, and diagrams over arbitrary finite index
//! categories. A single ChaCha8 stream drives every draw, so one seed pins
//! an entire run byte for byte.
//!
//! Random diagrams are built to be exactly functorial by construction:
//! combine elementary pieces that commute on the nose (module cubes,
//! representables, constants), then conjugate every arrow by independent
//! random isomorphisms at each vertex. The twist scrambles the matrices and
//! maps without disturbing commutativity, which is what an identity-testing
//! corpus needs.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cubes::pn;
use crate::fincat::TableCategory;
use crate::gf::Matrix;
use crate::monadgen::{precompose_product, registry, ModuleMonad};
use crate::pnmod::{CCat, CModule};
use crate::pset::PFun;
use crate::targetcat::{Diagram, Mor, Ob, Target};

/// Weight ceiling for any single vertex of a sampled diagram, keeping the
/// exact linear algebra and pointed-set enumerations fast.
fn vertex_cap(t: Target) -> usize {
    match t {
        Target::VectGF { .. } => 24,
        Target::PSet => 40,
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform draw from lo..=hi.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// A random object of weight at most `max`: dimension for vector
    /// spaces, non-basepoint count for pointed sets.
    pub fn ob(&mut self, t: Target, max: usize) -> Ob {
        match t {
            Target::VectGF { .. } => Ob::Dim(self.range(0, max)),
            Target::PSet => Ob::Size(1 + self.range(0, max)),
        }
    }

    /// A uniformly random morphism a → b.
    pub fn mor(&mut self, t: Target, a: &Ob, b: &Ob) -> Mor {
        match t {
            Target::VectGF { p } => {
                let (rows, cols) = (b.dim(), a.dim());
                let data = (0..rows * cols).map(|_| self.rng.gen_range(0..p)).collect();
                Mor::Mat(Matrix::new(p, rows, cols, data))
            }
            Target::PSet => {
                let (sa, sb) = (a.size(), b.size());
                let mut map = vec![0usize];
                map.extend((1..sa).map(|_| self.range(0, sb - 1)));
                Mor::Fun(PFun::new(sa, sb, map))
            }
        }
    }

    /// A random isomorphism a → a: an invertible matrix found by rejection
    /// (the invertible fraction over GF(p) is bounded away from zero) or a
    /// basepoint-fixing permutation.
    pub fn iso(&mut self, t: Target, a: &Ob) -> Mor {
        match t {
            Target::VectGF { .. } => {
                if a.dim() == 0 {
                    return t.id(a);
                }
                loop {
                    let cand = self.mor(t, a, a);
                    if t.is_iso(&cand) {
                        return cand;
                    }
                }
            }
            Target::PSet => {
                let s = a.size();
                let mut perm: Vec<usize> = (0..s).collect();
                for i in (2..s).rev() {
                    let j = self.range(1, i);
                    perm.swap(i, j);
                }
                Mor::Fun(PFun::new(s, s, perm))
            }
        }
    }

    /// A random subset cube over P(n): a twisted combination of module
    /// cubes, representables, and constants.
    pub fn cube(&mut self, t: Target, n: usize, max: usize) -> Diagram {
        let index = pn(n);
        let count = self.range(1, 3);
        let mut pieces: Vec<Diagram> = Vec::new();
        for _ in 0..count {
            let piece = match self.range(0, 2) {
                0 => self.module_cube(t, n, max),
                1 => {
                    let w = self.range(0, index.n_objects() - 1);
                    let fiber = self.ob(t, max);
                    self.representable(&index, t, w, &fiber)
                }
                _ => Diagram::constant(&index, t, &self.ob(t, max)),
            };
            if fits(&pieces, &piece) {
                pieces.push(piece);
            }
        }
        if pieces.is_empty() {
            pieces.push(Diagram::constant(&index, t, &t.zero_ob()));
        }
        let combined = combine(t, &pieces);
        self.twist(&combined)
    }

    /// A random diagram over an arbitrary index with a complete composition
    /// table: a twisted combination of representables and constants.
    pub fn diagram(&mut self, index: &Arc<TableCategory>, t: Target, max: usize) -> Diagram {
        let count = self.range(1, 3);
        let mut pieces: Vec<Diagram> = Vec::new();
        for _ in 0..count {
            let piece = if self.range(0, 1) == 0 {
                let x = self.range(0, index.n_objects() - 1);
                let fiber = self.ob(t, max);
                self.representable(index, t, x, &fiber)
            } else {
                Diagram::constant(index, t, &self.ob(t, max))
            };
            if fits(&pieces, &piece) {
                pieces.push(piece);
            }
        }
        if pieces.is_empty() {
            pieces.push(Diagram::constant(index, t, &t.zero_ob()));
        }
        let combined = combine(t, &pieces);
        self.twist(&combined)
    }

    /// The cube of a registry functor on an n-tuple of random objects. The
    /// tensor square is skipped when its corner would blow past the vertex
    /// cap.
    fn module_cube(&mut self, t: Target, n: usize, max: usize) -> Diagram {
        let base = CCat::new(t, n);
        let monad = ModuleMonad::new(CModule::theta_n(base), t);
        let a: Vec<Ob> = (0..n).map(|_| self.ob(t, max)).collect();
        let regs = registry(t);
        let pick = self.range(0, regs.len() - 1);
        let mut f = precompose_product(&regs[pick], base);
        if t.ob_weight(&f.ob(&a)) > vertex_cap(t) {
            f = precompose_product(&regs[0], base);
        }
        monad.cube_diagram(&f, &a)
    }

    /// The representable at x with a fiber object: y ↦ a hom(x,y)-indexed
    /// sum (vector spaces) or wedge (pointed sets) of fiber copies, with
    /// arrows acting by composition on the indexing.
    fn representable(
        &mut self,
        index: &Arc<TableCategory>,
        t: Target,
        x: usize,
        fiber: &Ob,
    ) -> Diagram {
        let homs: Vec<Vec<usize>> = (0..index.n_objects()).map(|y| index.hom(x, y)).collect();
        let obs: Vec<Ob> = homs
            .iter()
            .map(|h| match (t, fiber) {
                (Target::VectGF { .. }, Ob::Dim(d)) => Ob::Dim(h.len() * d),
                (Target::PSet, Ob::Size(s)) => Ob::Size(h.len() * (s - 1) + 1),
                _ => unreachable!("fiber must live in the target"),
            })
            .collect();
        let mors: Vec<Mor> = (0..index.n_mors())
            .map(|g| {
                let (y, z) = (index.dom(g), index.cod(g));
                let slot = |k: usize| {
                    let gf = index
                        .compose(g, homs[y][k])
                        .expect("index must carry a complete composition table");
                    homs[z].iter().position(|&f2| f2 == gf).expect("composite lands in hom(x, cod)")
                };
                match (t, fiber) {
                    (Target::VectGF { p }, Ob::Dim(d)) => {
                        let (rows, cols) = (homs[z].len() * d, homs[y].len() * d);
                        let mut data = vec![0u64; rows * cols];
                        for k in 0..homs[y].len() {
                            let k2 = slot(k);
                            for e in 0..*d {
                                data[(k2 * d + e) * cols + (k * d + e)] = 1;
                            }
                        }
                        Mor::Mat(Matrix::new(p, rows, cols, data))
                    }
                    (Target::PSet, Ob::Size(s)) => {
                        let w = s - 1;
                        let mut map = vec![0usize; homs[y].len() * w + 1];
                        for k in 0..homs[y].len() {
                            let k2 = slot(k);
                            for e in 0..w {
                                map[1 + k * w + e] = 1 + k2 * w + e;
                            }
                        }
                        Mor::Fun(PFun::new(homs[y].len() * w + 1, homs[z].len() * w + 1, map))
                    }
                    _ => unreachable!("fiber must live in the target"),
                }
            })
            .collect();
        Diagram { index: index.clone(), target: t, obs, mors }
    }

    /// Conjugate every arrow by fresh isomorphisms at each vertex.
    fn twist(&mut self, d: &Diagram) -> Diagram {
        let t = d.target;
        let isos: Vec<Mor> = d.obs.iter().map(|o| self.iso(t, o)).collect();
        let invs: Vec<Mor> =
            isos.iter().map(|g| t.inverse(g).expect("twisting isos invert")).collect();
        let mors = (0..d.index.n_mors())
            .map(|m| {
                let (y, z) = (d.index.dom(m), d.index.cod(m));
                t.compose(&isos[z], &t.compose(&d.mors[m], &invs[y]))
            })
            .collect();
        Diagram { index: d.index.clone(), target: t, obs: d.obs.clone(), mors }
    }
}

/// Would adding the piece keep every vertex under the cap? Weights add for
/// vector spaces and multiply for pointed sets.
fn fits(pieces: &[Diagram], piece: &Diagram) -> bool {
    let t = piece.target;
    (0..piece.obs.len()).all(|i| {
        let existing = pieces.iter().map(|d| t.ob_weight(&d.obs[i]));
        let w = t.ob_weight(&piece.obs[i]);
        let total = match t {
            Target::VectGF { .. } => existing.sum::<usize>() + w,
            Target::PSet => existing.product::<usize>() * w,
        };
        total <= vertex_cap(t)
    })
}

/// Vertex-wise product of parallel diagrams: direct sums of matrices over a
/// field, cartesian products of pointed sets.
fn combine(t: Target, pieces: &[Diagram]) -> Diagram {
    assert!(!pieces.is_empty(), "combine needs at least one piece");
    let index = pieces[0].index.clone();
    let obs: Vec<Ob> = (0..index.n_objects())
        .map(|i| t.product(&pieces.iter().map(|d| d.obs[i].clone()).collect::<Vec<_>>()).0)
        .collect();
    let mors: Vec<Mor> = (0..index.n_mors())
        .map(|m| t.product_mor(&pieces.iter().map(|d| d.mors[m].clone()).collect::<Vec<_>>()))
        .collect();
    Diagram { index, target: t, obs, mors }
}
