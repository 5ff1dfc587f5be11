//! Exact rational matrices: arbitrary-precision rational entries,
//! Gauss–Jordan elimination, kernels, canonical solutions. All
//! downstream isomorphism checks reduce to exact equality here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// Row-major matrix of exact rationals. `rows` is the codomain
/// dimension and `cols` the domain dimension when the matrix is read
/// as a linear map.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> RatMat {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMat {
        let mut m = RatMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> RatMat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> RatMat {
        RatMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[Rat] {
        &self.data
    }

    pub fn transpose(&self) -> RatMat {
        RatMat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).clone();
                    out.set(r, c, cur + a * b);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    /// Kronecker product with the pairing convention
    /// `(a, b) ↦ a · dim(right) + b` on both axes.
    pub fn kron(&self, other: &RatMat) -> RatMat {
        let mut out = RatMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.at(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.at(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    /// Stack side by side: `[self | other]`.
    pub fn hstack(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.rows, other.rows);
        RatMat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    /// Stack on top of each other.
    pub fn vstack(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.cols);
        RatMat::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        })
    }

    /// Reduced row echelon form with pivot column list.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // find a nonzero pivot in this column at or below `row`
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.at(row, col).recip();
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.row_sub_scaled(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Exact inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<RatMat> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hstack(&RatMat::identity(self.rows));
        let r = aug.rref();
        if r.pivots.len() != self.rows || r.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        Some(RatMat::from_fn(self.rows, self.cols, |i, j| {
            r.mat.at(i, self.cols + j).clone()
        }))
    }

    /// Canonical kernel basis from the reduced echelon form: one basis
    /// vector per free column (ascending), with a 1 in the free slot.
    /// Returned as a matrix whose columns are the basis vectors.
    pub fn kernel(&self) -> RatMat {
        let r = self.rref();
        let pivot_set: Vec<usize> = r.pivots.clone();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut out = RatMat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, Rat::one());
            for (row, &pc) in pivot_set.iter().enumerate() {
                let v = r.mat.at(row, fc);
                if !v.is_zero() {
                    out.set(pc, k, -v.clone());
                }
            }
        }
        out
    }

    /// Exact solution `X` of `self · X = rhs` with free variables set to
    /// zero (canonical), or `None` when inconsistent.
    pub fn solve(&self, rhs: &RatMat) -> Option<RatMat> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let aug = self.hstack(rhs);
        let r = aug.rref();
        if r.pivots.iter().any(|&p| p >= self.cols) {
            return None; // a pivot in the rhs block means inconsistency
        }
        let mut x = RatMat::zeros(self.cols, rhs.cols);
        for (row, &pc) in r.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.mat.at(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// A right inverse (section), when the map is surjective.
    pub fn right_inverse(&self) -> Option<RatMat> {
        let sec = self.solve(&RatMat::identity(self.rows))?;
        if self.mul(&sec) == RatMat::identity(self.rows) {
            Some(sec)
        } else {
            None
        }
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn abs_max_num(&self) -> BigInt {
        self.data
            .iter()
            .map(|x| x.numer().abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rat) {
        for c in 0..self.cols {
            if !self.at(r, c).is_zero() {
                let v = self.at(r, c) * factor;
                self.set(r, c, v);
            }
        }
    }

    fn row_sub_scaled(&mut self, target: usize, source: usize, factor: &Rat) {
        for c in 0..self.cols {
            let s = self.at(source, c);
            if s.is_zero() {
                continue;
            }
            let v = self.at(target, c) - factor * s;
            self.set(target, c, v);
        }
    }
}

pub struct Rref {
    pub mat: RatMat,
    pub pivots: Vec<usize>,
}

/// Online row-echelon accumulator for sparse constraint systems: rows
/// are inserted one at a time and reduced against the pivots seen so
/// far, so huge but shallow systems (many redundant rows) stay cheap.
pub struct SparseEchelon {
    cols: usize,
    /// pivot column → normalized sparse row (sorted by column, leading
    /// coefficient 1)
    rows: std::collections::BTreeMap<usize, Vec<(usize, Rat)>>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> SparseEchelon {
        SparseEchelon {
            cols,
            rows: std::collections::BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a constraint row given as sparse `(column, coefficient)`
    /// terms (any order, duplicates allowed).
    pub fn insert(&mut self, terms: &[(usize, Rat)]) {
        let mut row: Vec<(usize, Rat)> = Vec::with_capacity(terms.len());
        for (c, v) in terms {
            if !v.is_zero() {
                row.push((*c, v.clone()));
            }
        }
        row.sort_by_key(|(c, _)| *c);
        row = merge_terms(row);
        let mut scratch: Vec<(usize, Rat)> = Vec::new();
        loop {
            let Some(&(lead_col, ref lead_val)) = row.first() else {
                return; // reduced to zero: redundant row
            };
            match self.rows.get(&lead_col) {
                Some(existing) => {
                    let factor = lead_val.clone();
                    scratch.clear();
                    sparse_sub_scaled_into(&row, existing, &factor, &mut scratch);
                    std::mem::swap(&mut row, &mut scratch);
                }
                None => {
                    let inv = lead_val.recip();
                    for (_, v) in row.iter_mut() {
                        *v = &*v * &inv;
                    }
                    self.rows.insert(lead_col, row);
                    return;
                }
            }
        }
    }

    /// Canonical kernel basis (one column per free variable, ascending)
    /// by back-substitution over the echelon rows.
    pub fn kernel(&self) -> RatMat {
        let pivot_cols: Vec<usize> = self.rows.keys().copied().collect();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !pivot_cols.contains(c))
            .collect();
        let mut out = RatMat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            let mut v = vec![Rat::zero(); self.cols];
            v[fc] = Rat::one();
            // pivots in descending order: each row determines its pivot
            for (&p, row) in self.rows.iter().rev() {
                let mut acc = Rat::zero();
                for (c, coeff) in row {
                    if *c > p && !v[*c].is_zero() {
                        acc += coeff * &v[*c];
                    }
                }
                v[p] = -acc;
            }
            for (r, val) in v.into_iter().enumerate() {
                if !val.is_zero() {
                    out.set(r, k, val);
                }
            }
        }
        out
    }
}

fn merge_terms(row: Vec<(usize, Rat)>) -> Vec<(usize, Rat)> {
    let mut out: Vec<(usize, Rat)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => {
                *lv += v;
            }
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `row − factor · other` into `out`, all sorted sparse rows.
fn sparse_sub_scaled_into(
    row: &[(usize, Rat)],
    other: &[(usize, Rat)],
    factor: &Rat,
    out: &mut Vec<(usize, Rat)>,
) {
    out.reserve(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        if j == other.len() || (i < row.len() && row[i].0 < other[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || other[j].0 < row[i].0 {
            out.push((other[j].0, -(factor * &other[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - factor * &other[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
}

/// Cokernel of `m`: a canonical surjection `q` out of the codomain with
/// `q ∘ m = 0`, universal among such. The quotient basis is indexed by
/// the codomain coordinates not hit by a pivot of the column space.
pub fn cokernel(m: &RatMat) -> RatMat {
    // Row-reduce the transpose: its pivot columns index a basis of the
    // column space of `m` in "echelon position".
    let r = m.transpose().rref();
    let pivot_coords: Vec<usize> = r.pivots.clone();
    let free: Vec<usize> = (0..m.rows()).filter(|c| !pivot_coords.contains(c)).collect();
    let mut q = RatMat::zeros(free.len(), m.rows());
    for (row, &j) in free.iter().enumerate() {
        q.set(row, j, Rat::one());
        // e_{p_k} ≡ −Σ_{j free} R[k, j] e_j modulo the column space
        for (k, &pk) in pivot_coords.iter().enumerate() {
            let v = r.mat.at(k, j);
            if !v.is_zero() {
                q.set(row, pk, -v.clone());
            }
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_and_rank() {
        let m = RatMat::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let id = RatMat::identity(3);
        assert_eq!(id.rank(), 3);
        assert_eq!(RatMat::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMat::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMat::identity(2));
        assert_eq!(inv.mul(&m), RatMat::identity(2));
        let sing = RatMat::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn kernel_is_exact() {
        let m = RatMat::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero_matrix());
        // kernel columns are linearly independent
        assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn cokernel_kills_image_and_is_surjective() {
        let m = RatMat::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        let q = cokernel(&m);
        assert_eq!(q.rows(), 1); // dim 3 − rank 2
        assert!(q.mul(&m).is_zero_matrix());
        assert!(q.is_surjective());
    }

    #[test]
    fn solve_canonical() {
        let m = RatMat::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let rhs = RatMat::from_i64_rows(&[&[5], &[6]]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul(&x), rhs);
        // inconsistent system
        let m2 = RatMat::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let rhs2 = RatMat::from_i64_rows(&[&[0], &[1]]);
        assert!(m2.solve(&rhs2).is_none());
    }

    #[test]
    fn zero_dimension_edge_cases() {
        let empty = RatMat::zeros(0, 3);
        assert_eq!(empty.rank(), 0);
        assert!(empty.is_surjective());
        assert_eq!(empty.kernel().cols(), 3);
        let tall = RatMat::zeros(3, 0);
        assert!(tall.is_injective());
        assert_eq!(cokernel(&tall).rows(), 3);
        assert_eq!(RatMat::identity(0).inverse().unwrap().rows(), 0);
    }

    fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = RatMat> {
        proptest::collection::vec(-4i64..=4, rows * cols).prop_map(move |v| {
            RatMat::from_fn(rows, cols, |r, c| rat_int(v[r * cols + c]))
        })
    }

    proptest! {
        #[test]
        fn kernel_plus_rank_is_cols(m in small_mat(3, 4)) {
            prop_assert_eq!(m.rank() + m.kernel().cols(), m.cols());
        }

        #[test]
        fn solve_agrees_with_mul(m in small_mat(3, 3), v in proptest::collection::vec(-4i64..=4, 3)) {
            let x = RatMat::from_fn(3, 1, |r, _| rat_int(v[r]));
            let rhs = m.mul(&x);
            let sol = m.solve(&rhs).expect("consistent by construction");
            prop_assert_eq!(m.mul(&sol), rhs);
        }

        #[test]
        fn cokernel_dimension(m in small_mat(4, 2)) {
            let q = cokernel(&m);
            prop_assert_eq!(q.rows(), 4 - m.rank());
            prop_assert!(q.mul(&m).is_zero_matrix());
            prop_assert!(q.is_surjective());
        }

        #[test]
        fn kron_of_identities(n in 1usize..4, k in 1usize..4) {
            let a = RatMat::identity(n);
            let b = RatMat::identity(k);
            prop_assert_eq!(a.kron(&b), RatMat::identity(n * k));
        }

        #[test]
        fn sparse_echelon_kernel_matches_dense(entries in proptest::collection::vec(-3i64..=3, 20)) {
            let m = RatMat::from_fn(4, 5, |r, c| rat_int(entries[r * 5 + c]));
            let mut ech = SparseEchelon::new(5);
            for r in 0..4 {
                let terms: Vec<(usize, Rat)> = (0..5).map(|c| (c, m.at(r, c).clone())).collect();
                ech.insert(&terms);
            }
            prop_assert_eq!(ech.rank(), m.rank());
            let k = ech.kernel();
            prop_assert_eq!(k.cols(), 5 - m.rank());
            prop_assert!(m.mul(&k).is_zero_matrix());
            prop_assert_eq!(k.rank(), k.cols());
        }
    }
}
