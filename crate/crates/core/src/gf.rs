//! Exact dense matrices over the prime fields GF(p).
//!
//! Everything downstream (limits, colimits, Kan extensions, monad laws)
//! reduces to exact rank computations here, so this module fixes the
//! canonicalization conventions once and for all:
//!
//! * entries are stored reduced to `0..p` in row-major order;
//! * row reduction uses the leftmost-pivot rule and normalizes pivots to 1;
//! * kernel bases are computed with the *free variables leftmost*
//!   convention (pivots are chosen from the rightmost columns), which makes
//!   the kernel of a block system `[D | -I]` come out parametrized by the
//!   leading block — the property that lets comma-category limits agree
//!   on the nose with closed-form Kan extensions;
//! * cokernels are presented on the non-pivot coordinates of the
//!   leftmost-pivot column echelon form.

use std::fmt;

/// Multiplicative inverse in GF(p), p prime, via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "zero has no inverse");
    // fast exponentiation a^(p-2) mod p
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A rows×cols matrix over GF(p). `data[r*cols + c]` is the entry (r, c).
///
/// A matrix doubles as a linear map `k^cols -> k^rows`, so `rows == cols`
/// is not required and 0×n / n×0 matrices are meaningful (maps to and from
/// the zero space).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}/GF({})[", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn new(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Matrix {
        assert!(is_prime(p), "GF(p) needs p prime, got {p}");
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        let data = data.into_iter().map(|x| x % p).collect();
        Matrix { p, rows, cols, data }
    }

    pub fn zeros(p: u64, rows: usize, cols: usize) -> Matrix {
        Matrix::new(p, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(p: u64, n: usize) -> Matrix {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_fn(p: u64, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u64) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % p);
            }
        }
        Matrix { p, rows, cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product `self * rhs` (composition: self after rhs).
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.p, rhs.p, "field mismatch");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul: {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let p = self.p;
        let mut out = Matrix::zeros(p, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out[(r, c)] + a * rhs[(k, c)];
                    out[(r, c)] = v % p;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        assert_eq!(self.p, rhs.p);
        Matrix::from_fn(self.p, self.rows, self.cols, |r, c| self[(r, c)] + rhs[(r, c)])
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        assert_eq!(self.p, rhs.p);
        Matrix::from_fn(self.p, self.rows, self.cols, |r, c| {
            (self[(r, c)] + self.p - rhs[(r, c)]) % self.p
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.p, self.rows, self.cols, |r, c| (self.p - self[(r, c)]) % self.p)
    }

    pub fn scale(&self, s: u64) -> Matrix {
        Matrix::from_fn(self.p, self.rows, self.cols, |r, c| self[(r, c)] * (s % self.p))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.p, self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Horizontal concatenation [self | rhs].
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        assert_eq!(self.p, rhs.p);
        Matrix::from_fn(self.p, self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self[(r, c)]
            } else {
                rhs[(r, c - self.cols)]
            }
        })
    }

    /// Vertical concatenation [self; rhs].
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols);
        assert_eq!(self.p, rhs.p);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix { p: self.p, rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn hstack_all(p: u64, rows: usize, parts: &[&Matrix]) -> Matrix {
        let mut out = Matrix::zeros(p, rows, 0);
        for m in parts {
            out = out.hstack(m);
        }
        out
    }

    pub fn vstack_all(p: u64, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut out = Matrix::zeros(p, 0, cols);
        for m in parts {
            out = out.vstack(m);
        }
        out
    }

    /// Direct sum: block-diagonal matrix.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.p, rhs.p);
        Matrix::from_fn(self.p, self.rows + rhs.rows, self.cols + rhs.cols, |r, c| {
            if r < self.rows && c < self.cols {
                self[(r, c)]
            } else if r >= self.rows && c >= self.cols {
                rhs[(r - self.rows, c - self.cols)]
            } else {
                0
            }
        })
    }

    /// Kronecker product (used for the tensor-square functor V ↦ V⊗V).
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.p, rhs.p);
        Matrix::from_fn(self.p, self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (r1, r2) = (r / rhs.rows, r % rhs.rows);
            let (c1, c2) = (c / rhs.cols, c % rhs.cols);
            self[(r1, c1)] * rhs[(r2, c2)]
        })
    }

    /// Rows [lo, hi) as a new matrix.
    pub fn row_slice(&self, lo: usize, hi: usize) -> Matrix {
        Matrix::from_fn(self.p, hi - lo, self.cols, |r, c| self[(r + lo, c)])
    }

    /// Columns [lo, hi) as a new matrix.
    pub fn col_slice(&self, lo: usize, hi: usize) -> Matrix {
        Matrix::from_fn(self.p, self.rows, hi - lo, |r, c| self[(r, c + lo)])
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.p, self.rows, idx.len(), |r, c| self[(r, idx[c])])
    }

    /// Reduced row echelon form with the leftmost-pivot rule.
    /// Returns (rref, pivot column indices in increasing order).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // find the first row at or below `row` with a nonzero entry in `col`
            let mut sel = None;
            for r in row..m.rows {
                if m[(r, col)] != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            m.swap_rows(row, sel);
            let inv = inv_mod(m[(row, col)], p);
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)] * inv % p;
            }
            for r in 0..m.rows {
                if r != row && m[(r, col)] != 0 {
                    let f = m[(r, col)];
                    for c in col..m.cols {
                        let v = m[(r, c)] + (p - f) * m[(row, c)] % p;
                        m[(r, c)] = v % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as the columns of the returned matrix.
    ///
    /// Pivots are chosen from the *rightmost* columns, so the free variables
    /// are the leftmost ones, and each basis vector carries the identity
    /// pattern on the free coordinates (basis vector j has a 1 in the j-th
    /// free coordinate and 0 in the others). Basis vectors are ordered by
    /// their free coordinate, ascending.
    pub fn kernel_basis(&self) -> Matrix {
        let p = self.p;
        let n = self.cols;
        // reverse the column order, reduce, then map back
        let rev = Matrix::from_fn(p, self.rows, n, |r, c| self[(r, n - 1 - c)]);
        let (rr, piv) = rev.rref();
        let pivset: std::collections::HashSet<usize> = piv.iter().copied().collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivset.contains(c)).collect();
        // kernel basis in the reversed coordinates
        let mut basis: Vec<Vec<u64>> = Vec::new();
        for &fc in &free {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (ri, &pc) in piv.iter().enumerate() {
                // row ri: x_pc + sum over free columns rr[ri,fc']*x_fc' = 0
                let coeff = rr[(ri, fc)];
                if coeff != 0 {
                    v[pc] = (p - coeff) % p;
                }
            }
            basis.push(v);
        }
        // map back to original coordinates and sort by original free index
        let mut cols_out: Vec<(usize, Vec<u64>)> = basis
            .into_iter()
            .zip(free.iter())
            .map(|(v, &fc)| {
                let orig: Vec<u64> = (0..n).map(|i| v[n - 1 - i]).collect();
                (n - 1 - fc, orig)
            })
            .collect();
        cols_out.sort_by_key(|(orig_free, _)| *orig_free);
        let k = cols_out.len();
        Matrix::from_fn(p, n, k, |r, c| cols_out[c].1[r])
    }

    /// Canonical cokernel presentation of `self : k^cols -> k^rows`.
    ///
    /// Returns (proj, section): `proj : k^rows -> k^q` is the quotient by the
    /// column space, `section : k^q -> k^rows` embeds the canonical
    /// representatives (the non-pivot coordinates of the column echelon
    /// form, leftmost-pivot rule), and `proj * section = id`.
    pub fn cokernel(&self) -> (Matrix, Matrix) {
        let p = self.p;
        let n = self.rows;
        // canonical basis of the column space: nonzero rows of rref(self^T)
        let (rr, piv) = self.transpose().rref();
        let r = piv.len();
        let pivset: std::collections::HashSet<usize> = piv.iter().copied().collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivset.contains(c)).collect();
        let q = free.len();
        // proj(e_i): reduce e_i modulo the echelon rows, keep free coordinates.
        // Reducing e_i: subtract rr_row_j * e_i[pivot_j] once per echelon row,
        // top to bottom (echelon rows have identity pattern on pivot columns,
        // so a single pass is exact).
        let mut proj = Matrix::zeros(p, q, n);
        for i in 0..n {
            let mut v = vec![0u64; n];
            v[i] = 1;
            for j in 0..r {
                let c = v[piv[j]];
                if c != 0 {
                    for t in 0..n {
                        v[t] = (v[t] + (p - c) * rr[(j, t)] % p) % p;
                    }
                }
            }
            for (qi, &fi) in free.iter().enumerate() {
                proj[(qi, i)] = v[fi];
            }
        }
        let mut section = Matrix::zeros(p, n, q);
        for (qi, &fi) in free.iter().enumerate() {
            section[(fi, qi)] = 1;
        }
        (proj, section)
    }

    /// Unique solution X of `self * X = rhs`, if it exists and is unique
    /// (i.e. self has full column rank and the system is consistent).
    /// Solved twice with different row orders as a guard against any
    /// pivoting accident; both solves must agree.
    pub fn solve_unique(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let a = self.solve_once(rhs)?;
        // second solve: reverse the row order of the whole system
        let rev_self = Matrix::from_fn(self.p, self.rows, self.cols, |r, c| self[(self.rows - 1 - r, c)]);
        let rev_rhs = Matrix::from_fn(self.p, rhs.rows, rhs.cols, |r, c| rhs[(rhs.rows - 1 - r, c)]);
        let b = rev_self.solve_once(&rev_rhs)?;
        if a != b {
            return None;
        }
        Some(a)
    }

    fn solve_once(&self, rhs: &Matrix) -> Option<Matrix> {
        let aug = self.hstack(rhs);
        let (rr, piv) = aug.rref();
        // pivots inside the rhs block mean inconsistency
        if piv.iter().any(|&c| c >= self.cols) {
            return None;
        }
        // uniqueness requires every self-column to be a pivot
        if piv.len() != self.cols {
            return None;
        }
        let mut x = Matrix::zeros(self.p, self.cols, rhs.cols);
        for (ri, &pc) in piv.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(pc, c)] = rr[(ri, self.cols + c)];
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve_unique(&Matrix::identity(self.p, self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Permutation matrix: maps basis vector e_j to e_{perm[j]}.
    pub fn permutation(p: u64, perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(p, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_inverses() {
        for p in [2u64, 3, 5, 7] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1, "inv of {a} mod {p}");
            }
        }
    }

    #[test]
    fn mul_frozen_gf5() {
        // hand-checked: [[1,2],[3,4]] * [[0,1],[2,3]] mod 5 = [[4,2],[3,0]]
        let a = Matrix::new(5, 2, 2, vec![1, 2, 3, 4]);
        let b = Matrix::new(5, 2, 2, vec![0, 1, 2, 3]);
        assert_eq!(a.mul(&b), Matrix::new(5, 2, 2, vec![4, 2, 3, 0]));
    }

    #[test]
    fn rref_frozen_gf2() {
        // [[1,1,0],[1,0,1]] over GF(2) -> [[1,0,1],[0,1,1]], pivots {0,1}
        let m = Matrix::new(2, 2, 3, vec![1, 1, 0, 1, 0, 1]);
        let (rr, piv) = m.rref();
        assert_eq!(rr, Matrix::new(2, 2, 3, vec![1, 0, 1, 0, 1, 1]));
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_pivot_normalization_gf5() {
        // single row [2, 4] over GF(5): pivot normalized to 1 -> [1, 2]
        let m = Matrix::new(5, 1, 2, vec![2, 4]);
        let (rr, piv) = m.rref();
        assert_eq!(rr, Matrix::new(5, 1, 2, vec![1, 2]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn kernel_free_variables_leftmost() {
        // constraint 2x + 4y = 0 over GF(5); the free-leftmost convention
        // parametrizes by x: basis vector (1, 2) since y = -x/2 = 2x.
        let m = Matrix::new(5, 1, 2, vec![2, 4]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::new(5, 2, 1, vec![1, 2]));
    }

    #[test]
    fn kernel_block_system_parametrized_by_leading_block() {
        // rows [D | -I] with D = [[2,1],[0,3]] over GF(5): kernel must come out
        // as columns [I; D] (x free, y = Dx).
        let p = 5;
        let d = Matrix::new(p, 2, 2, vec![2, 1, 0, 3]);
        let m = d.hstack(&Matrix::identity(p, 2).neg());
        let k = m.kernel_basis();
        let expect = Matrix::identity(p, 2).vstack(&d);
        assert_eq!(k, expect);
    }

    #[test]
    fn kernel_members_annihilate() {
        let m = Matrix::new(3, 3, 5, vec![1, 2, 0, 1, 2, 2, 1, 0, 1, 1, 2, 1, 0, 0, 2]);
        let k = m.kernel_basis();
        assert!(m.mul(&k).is_zero());
        assert_eq!(m.rank() + k.cols, m.cols);
    }

    #[test]
    fn cokernel_frozen() {
        // f = [[1,1],[0,0]] over GF(2): image = span{(1,0)}, pivot coord 0,
        // cokernel = coordinate 1. proj = [0 1], section = [0;1].
        let f = Matrix::new(2, 2, 2, vec![1, 1, 0, 0]);
        let (proj, sect) = f.cokernel();
        assert_eq!(proj, Matrix::new(2, 1, 2, vec![0, 1]));
        assert_eq!(sect, Matrix::new(2, 2, 1, vec![0, 1]));
        assert!(proj.mul(&f).is_zero());
        assert_eq!(proj.mul(&sect), Matrix::identity(2, 1));
    }

    #[test]
    fn cokernel_of_empty_relations_is_identity() {
        // no relations: proj and section are identities
        let f = Matrix::zeros(3, 2, 0);
        let (proj, sect) = f.cokernel();
        assert_eq!(proj, Matrix::identity(3, 2));
        assert_eq!(sect, Matrix::identity(3, 2));
    }

    #[test]
    fn solve_unique_and_inverse() {
        let a = Matrix::new(7, 2, 2, vec![1, 2, 3, 4]);
        let inv = a.inverse().expect("invertible");
        assert_eq!(a.mul(&inv), Matrix::identity(7, 2));
        assert_eq!(inv.mul(&a), Matrix::identity(7, 2));
        // inconsistent system has no solution
        let b = Matrix::new(7, 2, 1, vec![1, 0]);
        let sing = Matrix::new(7, 2, 1, vec![1, 1]);
        assert!(sing.solve_unique(&b).is_none());
    }

    #[test]
    fn kron_shapes_and_values() {
        let a = Matrix::new(3, 1, 2, vec![1, 2]);
        let b = Matrix::identity(3, 2);
        let k = a.kron(&b);
        assert_eq!((k.rows, k.cols), (2, 4));
        assert_eq!(k, Matrix::new(3, 2, 4, vec![1, 0, 2, 0, 0, 1, 0, 2]));
    }

    #[test]
    fn equalizer_dimension_identity_vs_shear() {
        // dim ker(f - g) for f = id, g = [[1,1],[0,1]] over GF(2) is 1
        let f = Matrix::identity(2, 2);
        let g = Matrix::new(2, 2, 2, vec![1, 1, 0, 1]);
        assert_eq!(f.sub(&g).kernel_basis().cols, 1);
    }
}
