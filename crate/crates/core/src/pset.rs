//! Pointed finite sets in canonical form.
//!
//! A pointed set of size n is always {0, 1, .., n-1} with 0 as the
//! basepoint; a morphism is a function table fixing 0. Products are
//! flattened lexicographically (first factor most significant), which makes
//! n-fold products strictly associative on canonical indices.

/// Basepoint-preserving function between canonical pointed sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PFun {
    pub dom: usize,
    pub cod: usize,
    pub map: Vec<usize>,
}

impl PFun {
    pub fn new(dom: usize, cod: usize, map: Vec<usize>) -> PFun {
        assert!(dom >= 1 && cod >= 1, "pointed sets are nonempty");
        assert_eq!(map.len(), dom);
        assert_eq!(map[0], 0, "must preserve the basepoint");
        assert!(map.iter().all(|&v| v < cod), "value out of range");
        PFun { dom, cod, map }
    }

    pub fn identity(n: usize) -> PFun {
        PFun::new(n, n, (0..n).collect())
    }

    /// Constant-basepoint map (the zero morphism of pointed sets).
    pub fn zero(dom: usize, cod: usize) -> PFun {
        PFun::new(dom, cod, vec![0; dom])
    }

    /// Composition self ∘ rhs.
    pub fn compose(&self, rhs: &PFun) -> PFun {
        assert_eq!(rhs.cod, self.dom, "non-composable pointed maps");
        PFun::new(rhs.dom, self.cod, rhs.map.iter().map(|&x| self.map[x]).collect())
    }

    pub fn is_bijective(&self) -> bool {
        if self.dom != self.cod {
            return false;
        }
        let mut seen = vec![false; self.cod];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<PFun> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.dom];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Some(PFun::new(self.cod, self.dom, inv))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

/// Size of the flattened product of pointed sets of the given sizes.
pub fn prod_size(sizes: &[usize]) -> usize {
    sizes.iter().product::<usize>().max(1)
}

/// Flatten a tuple index: first coordinate most significant.
pub fn tuple_to_index(tuple: &[usize], sizes: &[usize]) -> usize {
    assert_eq!(tuple.len(), sizes.len());
    let mut ix = 0;
    for (t, s) in tuple.iter().zip(sizes.iter()) {
        debug_assert!(t < s);
        ix = ix * s + t;
    }
    ix
}

pub fn index_to_tuple(mut ix: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        out[i] = ix % sizes[i];
        ix /= sizes[i];
    }
    debug_assert_eq!(ix, 0);
    out
}

/// Product of maps acting on flattened products.
pub fn prod_map(fs: &[&PFun]) -> PFun {
    let dsizes: Vec<usize> = fs.iter().map(|f| f.dom).collect();
    let csizes: Vec<usize> = fs.iter().map(|f| f.cod).collect();
    let d = prod_size(&dsizes);
    let c = prod_size(&csizes);
    let mut map = Vec::with_capacity(d);
    for ix in 0..d {
        let t = index_to_tuple(ix, &dsizes);
        let img: Vec<usize> = t.iter().zip(fs.iter()).map(|(&x, f)| f.map[x]).collect();
        map.push(tuple_to_index(&img, &csizes));
    }
    PFun::new(d, c, map)
}

/// Projection from a flattened product onto one coordinate.
pub fn proj_map(sizes: &[usize], coord: usize) -> PFun {
    let d = prod_size(sizes);
    let mut map = Vec::with_capacity(d);
    for ix in 0..d {
        map.push(index_to_tuple(ix, sizes)[coord]);
    }
    PFun::new(d, sizes[coord], map)
}

/// Pairing: given legs Z -> X_i, the induced map into the flattened product.
pub fn tuple_map(legs: &[&PFun]) -> PFun {
    assert!(!legs.is_empty() || true);
    let dom = legs.first().map(|f| f.dom).unwrap_or(1);
    for f in legs {
        assert_eq!(f.dom, dom, "tuple legs must share a domain");
    }
    let sizes: Vec<usize> = legs.iter().map(|f| f.cod).collect();
    let c = prod_size(&sizes);
    let mut map = Vec::with_capacity(dom);
    for x in 0..dom {
        let t: Vec<usize> = legs.iter().map(|f| f.map[x]).collect();
        map.push(tuple_to_index(&t, &sizes));
    }
    PFun::new(dom, c, map)
}

/// Smash square data: X∧X with the canonical numbering
/// (pairs (i,j), i,j >= 1 mapped to (i-1)*(n-1)+(j-1)+1; everything else
/// collapses to the basepoint).
pub fn smash_square_size(n: usize) -> usize {
    (n - 1) * (n - 1) + 1
}

pub fn smash_square_map(f: &PFun) -> PFun {
    let (n, m) = (f.dom, f.cod);
    let sz_d = smash_square_size(n);
    let sz_c = smash_square_size(m);
    let mut map = vec![0; sz_d];
    for i in 1..n {
        for j in 1..n {
            let src = (i - 1) * (n - 1) + (j - 1) + 1;
            let (fi, fj) = (f.map[i], f.map[j]);
            map[src] = if fi == 0 || fj == 0 { 0 } else { (fi - 1) * (m - 1) + (fj - 1) + 1 };
        }
    }
    PFun::new(sz_d, sz_c, map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_identity() {
        let f = PFun::new(3, 2, vec![0, 1, 1]);
        let g = PFun::new(2, 3, vec![0, 2]);
        assert_eq!(g.compose(&f), PFun::new(3, 3, vec![0, 2, 2]));
        assert_eq!(f.compose(&PFun::identity(3)), f);
        assert_eq!(PFun::identity(2).compose(&f), f);
    }

    #[test]
    fn product_flattening_is_associative() {
        // (X×Y)×Z and X×(Y×Z) agree on flattened indices
        let sizes = [2usize, 3, 2];
        let d = prod_size(&sizes);
        for ix in 0..d {
            let t = index_to_tuple(ix, &sizes);
            let left = tuple_to_index(&[tuple_to_index(&t[..2], &sizes[..2]), t[2]], &[6, 2]);
            let right = tuple_to_index(&[t[0], tuple_to_index(&t[1..], &sizes[1..])], &[2, 6]);
            assert_eq!(left, ix);
            assert_eq!(right, ix);
        }
    }

    #[test]
    fn projections_and_tupling() {
        let sizes = [2usize, 3];
        let p0 = proj_map(&sizes, 0);
        let p1 = proj_map(&sizes, 1);
        // tuple of the projections is the identity on the product
        let t = tuple_map(&[&p0, &p1]);
        assert_eq!(t, PFun::identity(6));
    }

    #[test]
    fn smash_square_frozen() {
        // |X| = 3: smash square has (3-1)^2 + 1 = 5 points
        assert_eq!(smash_square_size(3), 5);
        // collapse x2 -> basepoint kills the pairs involving it
        let f = PFun::new(3, 3, vec![0, 1, 0]);
        let sf = smash_square_map(&f);
        // (1,1) survives as (1,1); (1,2),(2,1),(2,2) die
        assert_eq!(sf, PFun::new(5, 5, vec![0, 1, 0, 0, 0]));
    }
}
