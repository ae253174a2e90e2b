//! Cube-shaped index categories: the poset of subsets of {1..n}, the
//! three-letter extension Λ = {ℓ ← 0 → 1}, finite powers Λ^×n, and the
//! structure maps between them (the corner embedding, the letterwise
//! monoidal product, extensions of monoidal poset maps, and the functors
//! induced by surjections of coordinate sets).
//!
//! Words over Λ are encoded as base-3 digit strings with the first
//! coordinate most significant, letters printed as `0`, `1`, `L`.

use crate::fincat::{product_category, TableCategory, TableFunctor};
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

/// Letters of Λ as digits: 0, 1, and ℓ (printed `L`).
pub const D0: u8 = 0;
pub const D1: u8 = 1;
pub const DL: u8 = 2;

static CUBE_CAP: AtomicUsize = AtomicUsize::new(4);

/// Largest cube dimension the builders accept. Raising it is possible but
/// table sizes grow as 5^n, so treat anything above the default with care.
pub fn cube_cap() -> usize {
    CUBE_CAP.load(Ordering::Relaxed)
}

pub fn set_cube_cap(n: usize) {
    CUBE_CAP.store(n, Ordering::Relaxed);
}

fn pn_cache() -> &'static Mutex<HashMap<usize, Arc<TableCategory>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TableCategory>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn lambda_cache() -> &'static Mutex<HashMap<usize, Arc<TableCategory>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TableCategory>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn subset_token(mask: usize) -> String {
    let elems: Vec<String> =
        (0..usize::BITS as usize).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

/// The poset of subsets of {1..n} ordered by inclusion; object index is the
/// bitmask (bit i−1 encodes membership of i), so ∅ is object 0.
pub fn pn(n: usize) -> Arc<TableCategory> {
    assert!(n <= cube_cap(), "cube dimension {n} exceeds the configured cap {}", cube_cap());
    pn_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| {
            let tokens: Vec<String> = (0..1usize << n).map(subset_token).collect();
            Arc::new(TableCategory::poset(&format!("P({n})"), tokens, |u, v| u & !v == 0))
        })
        .clone()
}

pub fn word_digits(ix: usize, n: usize) -> Vec<u8> {
    let mut digits = vec![0u8; n];
    let mut rest = ix;
    for i in (0..n).rev() {
        digits[i] = (rest % 3) as u8;
        rest /= 3;
    }
    digits
}

pub fn word_ix(digits: &[u8]) -> usize {
    digits.iter().fold(0usize, |acc, &d| acc * 3 + d as usize)
}

pub fn word_token(digits: &[u8]) -> String {
    digits.iter().map(|&d| match d {
        D0 => '0',
        D1 => '1',
        _ => 'L',
    }).collect()
}

fn letter_leq(a: u8, b: u8) -> bool {
    a == b || a == D0
}

/// The n-fold power of Λ as a poset: words over {0,1,ℓ} ordered letterwise
/// with 0 below both 1 and ℓ. Object index is the base-3 value of the word.
pub fn lambda_n(n: usize) -> Arc<TableCategory> {
    assert!(n <= cube_cap(), "cube dimension {n} exceeds the configured cap {}", cube_cap());
    lambda_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| {
            let count = 3usize.pow(n as u32);
            let tokens: Vec<String> = (0..count).map(|ix| word_token(&word_digits(ix, n))).collect();
            Arc::new(TableCategory::poset(&format!("Lambda^{n}"), tokens, |x, y| {
                let (dx, dy) = (word_digits(x, n), word_digits(y, n));
                dx.iter().zip(&dy).all(|(&a, &b)| letter_leq(a, b))
            }))
        })
        .clone()
}

/// Object index of a subset under the corner embedding into Λ^×n.
pub fn phi_ob(mask: usize, n: usize) -> usize {
    let digits: Vec<u8> = (0..n).map(|i| if mask >> i & 1 == 1 { D1 } else { D0 }).collect();
    word_ix(&digits)
}

/// The embedding of the subset poset into Λ^×n: a subset becomes the word
/// with letter 1 at its members and 0 elsewhere. Fully faithful, injective
/// on objects, and nothing outside its image maps into it.
pub fn phi_n(n: usize) -> TableFunctor {
    let p = pn(n);
    let l = lambda_n(n);
    functor_between_posets(&p, &l, |mask| phi_ob(mask, n))
}

/// Build a functor between poset categories from its object assignment,
/// mapping each morphism to the unique morphism between the image objects.
pub fn functor_between_posets(
    src: &Arc<TableCategory>,
    dst: &Arc<TableCategory>,
    ob: impl Fn(usize) -> usize,
) -> TableFunctor {
    let ob_map: Vec<usize> = (0..src.n_objects()).map(&ob).collect();
    let mor_map = (0..src.n_mors())
        .map(|m| {
            let hom = dst.hom(ob_map[src.dom(m)], ob_map[src.cod(m)]);
            assert_eq!(hom.len(), 1, "object assignment is not monotone");
            hom[0]
        })
        .collect();
    TableFunctor { source: src.clone(), target: dst.clone(), ob_map, mor_map }
}

/// Index of the all-ones corner word of Λ^×n, the unit of the monoidal
/// product and the target of the unit cocone leg.
pub fn corner_ix(n: usize) -> usize {
    (3usize.pow(n as u32) - 1) / 2
}

fn letter_diamond(a: u8, b: u8) -> u8 {
    if a == DL || b == DL {
        DL
    } else if a == D1 {
        b
    } else if b == D1 {
        a
    } else {
        D0
    }
}

pub fn diamond_ob(x: usize, y: usize, n: usize) -> usize {
    let (dx, dy) = (word_digits(x, n), word_digits(y, n));
    word_ix(&(0..n).map(|i| letter_diamond(dx[i], dy[i])).collect::<Vec<_>>())
}

/// The letterwise monoidal product ⋄ : Λ^×n × Λ^×n → Λ^×n, with the corner
/// word as unit and ℓ absorbing in every coordinate.
pub fn diamond_functor(n: usize, square: &Arc<TableCategory>) -> TableFunctor {
    let l = lambda_n(n);
    let l_obs = l.n_objects();
    functor_between_posets(square, &l, |pair| diamond_ob(pair / l_obs, pair % l_obs, n))
}

/// Intersection as a functor P(n) × P(n) → P(n).
pub fn intersection_functor(n: usize, square: &Arc<TableCategory>) -> TableFunctor {
    let p = pn(n);
    let p_obs = p.n_objects();
    functor_between_posets(square, &p, |pair| (pair / p_obs) & (pair % p_obs))
}

/// The product Λ^×n × Λ^×n as a table category (for the double-cube
/// constructions at small n).
pub fn lambda_square(n: usize) -> Arc<TableCategory> {
    let l = lambda_n(n);
    Arc::new(product_category(&l, &l))
}

pub fn pn_square(n: usize) -> Arc<TableCategory> {
    let p = pn(n);
    Arc::new(product_category(&p, &p))
}

/// A surjection {1..n} ↠ {1..m}, stored 0-based: `map[i]` is the image of
/// coordinate i+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjection {
    pub n: usize,
    pub m: usize,
    pub map: Vec<usize>,
}

impl Surjection {
    pub fn new(n: usize, m: usize, map: Vec<usize>) -> Surjection {
        assert_eq!(map.len(), n, "surjection needs one value per source coordinate");
        assert!(map.iter().all(|&v| v < m), "surjection value out of range");
        for j in 0..m {
            assert!(map.contains(&j), "coordinate {} has empty preimage", j + 1);
        }
        Surjection { n, m, map }
    }

    pub fn identity(n: usize) -> Surjection {
        Surjection::new(n, n, (0..n).collect())
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Surjection) -> Surjection {
        assert_eq!(other.m, self.n, "surjections not composable");
        Surjection::new(other.n, self.m, other.map.iter().map(|&v| self.map[v]).collect())
    }

    pub fn preimage_mask(&self, mask: usize) -> usize {
        (0..self.n).filter(|&i| mask >> self.map[i] & 1 == 1).fold(0, |acc, i| acc | 1 << i)
    }

    /// The induced functor P(m) → P(n) taking a subset to its preimage.
    pub fn poset_functor(&self) -> TableFunctor {
        let src = pn(self.m);
        let dst = pn(self.n);
        functor_between_posets(&src, &dst, |mask| self.preimage_mask(mask))
    }
}

/// Check that a poset functor g : P(m) → P(n) preserves intersections and
/// the full set (the monoidal unit).
pub fn is_strict_monoidal(g: &TableFunctor, m: usize, n: usize) -> bool {
    let full_m = (1usize << m) - 1;
    let full_n = (1usize << n) - 1;
    if g.ob_map[full_m] != full_n {
        return false;
    }
    for u in 0..1usize << m {
        for v in 0..1usize << m {
            if g.ob_map[u & v] != g.ob_map[u] & g.ob_map[v] {
                return false;
            }
        }
    }
    true
}

/// Extend a strict monoidal poset map g : P(m) → P(n) to a functor
/// ĝ : Λ^×m → Λ^×n with ĝ∘φ_m = φ_n∘g.
///
/// Writing K_j = g({1..m}∖{j}), the letter of ĝ(w) at target coordinate i
/// is the ⋄-product of the letters w_j over all j with i ∉ K_j (an empty
/// product is 1). The extension also has to carry every word containing ℓ
/// to a word containing ℓ — otherwise restricting a corner-extended
/// diagram along ĝ would disagree with extending the restricted cube — and
/// that holds exactly when every source coordinate j has K_j ≠ {1..n}.
/// Maps with such dead coordinates are rejected.
pub fn lambda_extension(g: &TableFunctor, m: usize, n: usize) -> Result<TableFunctor, String> {
    if !is_strict_monoidal(g, m, n) {
        return Err("poset map does not preserve intersections and the full set".to_string());
    }
    let full_m = (1usize << m) - 1;
    let full_n = (1usize << n) - 1;
    // deps[i] = set of source coordinates the i-th target letter multiplies
    let deps: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..m).filter(|&j| g.ob_map[full_m & !(1 << j)] >> i & 1 == 0).collect())
        .collect();
    if let Some(j) = (0..m).find(|&j| g.ob_map[full_m & !(1 << j)] == full_n) {
        return Err(format!(
            "coordinate {} is dead: the extension would drop its ℓ-words",
            j + 1
        ));
    }
    let src = lambda_n(m);
    let dst = lambda_n(n);
    Ok(functor_between_posets(&src, &dst, |w| {
        let digits = word_digits(w, m);
        let image: Vec<u8> = deps
            .iter()
            .map(|dep| dep.iter().fold(D1, |acc, &j| letter_diamond(acc, digits[j])))
            .collect();
        word_ix(&image)
    }))
}
