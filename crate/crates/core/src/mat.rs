//! Dense matrices over a finite field.
//!
//! Linear maps use the column convention: a map `V → W` is a
//! `dim W × dim V` matrix acting on column vectors, so composition is the
//! ordinary matrix product. Subspaces are stored as matrices whose rows are
//! basis vectors.

use std::fmt;

use crate::field::{Fe, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Fe>) -> Mat {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        assert!(data.iter().all(|&x| (x as usize) < field.order()), "unreduced entry");
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Fe>]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Mat::from_vec(field, rows.len(), cols, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(field: &Field, rows: usize, cols: &[Vec<Fe>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x;
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[Fe] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn row_mut(&mut self, r: usize) -> &mut [Fe] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn col(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
    pub fn row_vecs(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn push_row(&mut self, r: &[Fe]) {
        assert_eq!(r.len(), self.cols);
        self.data.extend_from_slice(r);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(&self.field, self.rows, other.cols);
        let n = other.cols;
        for i in 0..self.rows {
            let (head, _) = out.data.split_at_mut((i + 1) * n);
            let dst = &mut head[i * n..];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    self.field.axpy(dst, a, &other.data[k * n..(k + 1) * n]);
                }
            }
        }
        out
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| self.field.dot(self.row(r), v)).collect()
    }

    /// `vᵀ · self`, i.e. a linear combination of rows.
    pub fn vec_mul(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![0; self.cols];
        for (r, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(r));
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        self.field.axpy(&mut out.data, 1, &other.data);
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        let mut out = self.clone();
        out.add_scaled(self.field.neg(1), other);
        out
    }

    pub fn add_scaled(&mut self, c: Fe, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        f.axpy(&mut self.data, c, &other.data);
    }

    pub fn scaled(&self, c: Fe) -> Mat {
        let mut out = self.clone();
        let f = self.field.clone();
        f.scale(&mut out.data, c);
        out
    }

    pub fn pow(&self, n: u32) -> Mat {
        let mut r = Mat::identity(&self.field, self.rows);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows * other.rows, self.cols * other.cols);
        let oc = self.cols * other.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    let r = i * other.rows + k;
                    let dst = &mut out.data[r * oc + j * other.cols..r * oc + (j + 1) * other.cols];
                    f.axpy(dst, a, other.row(k));
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
        }
        for r in 0..other.rows {
            out.row_mut(self.rows + r)[self.cols..].copy_from_slice(other.row(r));
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let rows: Vec<Vec<Fe>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Mat::from_rows(&self.field, self.cols, &rows)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            out.row_mut(r)[self.cols..].copy_from_slice(other.row(r));
        }
        out
    }

    /// Reduced row echelon form, in place. Returns pivot columns.
    /// Only the first `limit` columns are used for pivots.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut buf = vec![0; cols];
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            f.scale(&mut self.data[r * cols + c..(r + 1) * cols], inv);
            buf[c..].copy_from_slice(&self.data[r * cols + c..(r + 1) * cols]);
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let a = self.data[i * cols + c];
                if a != 0 {
                    f.axpy(&mut self.data[i * cols + c..(i + 1) * cols], f.neg(a), &buf[c..]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        Rref { rank: pivots.len(), pivots, mat: m }
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Basis (as rows) of `{v : self · v = 0}`.
    pub fn kernel_basis(&self) -> Mat {
        let r = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        let mut out = Mat::zeros(f, 0, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = f.neg(r.mat.get(i, free));
            }
            out.push_row(&v);
        }
        out
    }

    /// Basis (as rows, reduced echelon) of the row space.
    pub fn row_space(&self) -> Mat {
        let r = self.rref();
        let mut m = r.mat;
        m.rows = r.rank;
        m.data.truncate(r.rank * m.cols);
        m
    }

    /// Basis (as rows) of the image of the map `self`, i.e. its column space.
    pub fn image_basis(&self) -> Mat {
        self.transpose().row_space()
    }

    pub fn det(&self) -> Fe {
        assert!(self.is_square());
        let f = self.field.clone();
        let mut m = self.clone();
        let n = self.rows;
        let mut det: Fe = 1;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                for k in 0..n {
                    m.data.swap(pr * n + k, c * n + k);
                }
                det = f.neg(det);
            }
            let piv = m.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv);
            let prow: Vec<Fe> = m.row(c).to_vec();
            for i in c + 1..n {
                let a = m.get(i, c);
                if a != 0 {
                    f.axpy(m.row_mut(i), f.neg(f.mul(a, inv)), &prow);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(&self.field, n));
        let piv = aug.rref_in_place(n);
        if piv.len() < n {
            return None;
        }
        Some(aug.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Characteristic polynomial `det(xI - self)`, low-to-high, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(&self) -> Vec<Fe> {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for k in 0..n.saturating_sub(2) {
            let Some(r) = (k + 1..n).find(|&i| h.get(i, k) != 0) else {
                continue;
            };
            if r != k + 1 {
                for c in 0..n {
                    h.data.swap(r * n + c, (k + 1) * n + c);
                }
                for i in 0..n {
                    h.data.swap(i * n + r, i * n + k + 1);
                }
            }
            let inv = f.inv(h.get(k + 1, k));
            for i in k + 2..n {
                let u = f.mul(h.get(i, k), inv);
                if u == 0 {
                    continue;
                }
                // row_i -= u row_{k+1}
                let src: Vec<Fe> = h.row(k + 1).to_vec();
                f.axpy(h.row_mut(i), f.neg(u), &src);
                // col_{k+1} += u col_i
                for j in 0..n {
                    let v = f.add(h.get(j, k + 1), f.mul(u, h.get(j, i)));
                    h.set(j, k + 1, v);
                }
            }
        }
        // p[m] = charpoly of leading m×m block
        let mut p: Vec<Vec<Fe>> = vec![vec![1]];
        for m in 1..=n {
            let mm = m - 1;
            // (x - h[mm][mm]) p[m-1]
            let prev = &p[m - 1];
            let mut cur = vec![0; m + 1];
            for (i, &c) in prev.iter().enumerate() {
                cur[i + 1] = f.add(cur[i + 1], c);
                cur[i] = f.sub(cur[i], f.mul(h.get(mm, mm), c));
            }
            let mut t: Fe = 1;
            for i in 1..m {
                // t = prod_{j = mm-i+1}^{mm} h[j][j-1]
                t = f.mul(t, h.get(mm - i + 1, mm - i));
                let coef = f.mul(t, h.get(mm - i, mm));
                if coef == 0 {
                    continue;
                }
                for (d, &c) in p[m - 1 - i].iter().enumerate() {
                    cur[d] = f.sub(cur[d], f.mul(coef, c));
                }
            }
            p.push(cur);
        }
        p.pop().unwrap()
    }

    /// Evaluates a polynomial (low-to-high) at this square matrix.
    pub fn eval_poly(&self, poly: &[Fe]) -> Mat {
        let n = self.rows;
        let mut acc = Mat::zeros(&self.field, n, n);
        for &c in poly.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }
}

/// Solves `A x = y` repeatedly for a fixed `A`.
#[derive(Clone, Debug)]
pub struct Solver {
    /// Row operations `E` with `E A = R` (R reduced echelon).
    ops: Mat,
    pivots: Vec<usize>,
    cols: usize,
}

impl Solver {
    pub fn new(a: &Mat) -> Solver {
        let m = a.rows();
        let mut aug = a.hstack(&Mat::identity(a.field(), m));
        let pivots = aug.rref_in_place(a.cols());
        let ops = aug.select_cols(&(a.cols()..a.cols() + m).collect::<Vec<_>>());
        Solver { ops, pivots, cols: a.cols() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Some `x` with `A x = y`, or `None` if `y` is not in the image.
    pub fn solve(&self, y: &[Fe]) -> Option<Vec<Fe>> {
        let z = self.ops.mul_vec(y);
        if z[self.pivots.len()..].iter().any(|&v| v != 0) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            x[p] = z[i];
        }
        Some(x)
    }
}

/// A subspace held as a fully reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    len: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: &Field, len: usize) -> Subspace {
        Subspace { field: field.clone(), len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(m: &Mat) -> Subspace {
        let mut s = Subspace::new(m.field(), m.cols());
        for r in 0..m.rows() {
            s.insert(m.row(r));
        }
        s
    }

    pub fn full(field: &Field, len: usize) -> Subspace {
        Subspace::from_rows(&Mat::identity(field, len))
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn ambient(&self) -> usize {
        self.len
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_rows(&self.field, self.len, &self.rows)
    }

    /// Reduces `v` modulo the subspace, in place.
    pub fn reduce(&self, v: &mut [Fe]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                self.field.axpy(v, self.field.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns true if the dimension grew.
    pub fn insert(&mut self, v: &[Fe]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[p]);
        self.field.scale(&mut w, inv);
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                self.field.axpy(row, self.field.neg(c), &w);
            }
        }
        // keep pivots sorted
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the basis.
    pub fn coords(&self, v: &[Fe]) -> Vec<Fe> {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_space(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // v = Σ a_i s_i = Σ b_j t_j  ⇔ [S; -T]ᵀ (a, b) = 0
        let f = &self.field;
        let mut out = Subspace::new(f, self.len);
        if self.dim() == 0 || other.dim() == 0 {
            return out;
        }
        let mut stacked = self.to_mat();
        let neg_t = other.to_mat().scaled(f.neg(1));
        stacked = stacked.vstack(&neg_t);
        let ker = stacked.transpose().kernel_basis();
        let s = self.to_mat();
        for r in 0..ker.rows() {
            let a = &ker.row(r)[..self.dim()];
            out.insert(&s.vec_mul(a));
        }
        out
    }

    /// Basis vectors completing the subspace to the whole space: the
    /// standard basis vectors at non-pivot positions.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.len];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.len).filter(|&i| !is_p[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f2 = f(2);
        let m = Mat::from_rows(&f2, 2, &[vec![1, 1], vec![1, 1]]);
        let r = m.rref();
        assert_eq!((r.rank, r.pivots.clone()), (1, vec![0]));
        assert_eq!(Mat::zeros(&f2, 2, 2).rref().rank, 0);
        let f3 = f(3);
        let id = Mat::identity(&f3, 3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.mat, id);
    }

    #[test]
    fn kernel_examples() {
        let f2 = f(2);
        assert_eq!(Mat::zeros(&f2, 2, 2).kernel_basis().rows(), 2);
        assert_eq!(Mat::identity(&f2, 3).kernel_basis().rows(), 0);
        let k = Mat::from_rows(&f2, 2, &[vec![1, 1]]).kernel_basis();
        assert_eq!(k.row_vecs(), vec![vec![1, 1]]);
    }

    #[test]
    fn kron_examples() {
        let f5 = f(5);
        let a = Mat::from_rows(&f5, 2, &[vec![1, 2], vec![3, 4]]);
        let b = Mat::from_rows(&f5, 3, &[vec![1, 0, 0], vec![0, 2, 0], vec![1, 1, 4]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(b.rank(), 3);
        assert_eq!(a.kron(&b).rank(), 6);
        assert_eq!(a.kron(&Mat::identity(&f5, 1)), a);
        let c = Mat::from_rows(&f5, 1, &[vec![3]]);
        assert_eq!(c.kron(&b), b.scaled(3));
    }

    #[test]
    fn charpoly_matches_determinants() {
        let f7 = f(7);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 1..6 {
            let data: Vec<Fe> = (0..n * n).map(|_| rng.gen_range(0..7)).collect();
            let a = Mat::from_vec(&f7, n, n, data);
            let cp = a.charpoly();
            assert_eq!(cp.len(), n + 1);
            for lam in 0..7 {
                let m = Mat::identity(&f7, n).scaled(lam).sub(&a);
                let mut val = 0;
                for &c in cp.iter().rev() {
                    val = f7.add(f7.mul(val, lam), c);
                }
                assert_eq!(val, m.det());
            }
            assert!(a.eval_poly(&cp).is_zero(), "Cayley-Hamilton");
        }
    }

    #[test]
    fn solver_and_subspaces() {
        let f3 = f(3);
        let a = Mat::from_rows(&f3, 3, &[vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let s = Solver::new(&a);
        let y = vec![1, 2, 0];
        let x = s.solve(&y).unwrap();
        assert_eq!(a.mul_vec(&x), y);
        let mut sp = Subspace::new(&f3, 3);
        assert!(sp.insert(&[1, 1, 0]));
        assert!(!sp.insert(&[2, 2, 0]));
        let t = Subspace::from_rows(&Mat::from_rows(&f3, 3, &[vec![0, 1, 0], vec![1, 0, 0]]));
        assert_eq!(sp.intersect(&t).dim(), 1);
        assert_eq!(sp.sum(&t).dim(), 2);
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_rank_nullity(seed in 0u64..500, rows in 1usize..7, cols in 1usize..7, pi in 0usize..3) {
            let p = [2, 3, 5][pi];
            let fld = f(p);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let data: Vec<Fe> = (0..rows * cols).map(|_| rng.gen_range(0..p as Fe)).collect();
            let m = Mat::from_vec(&fld, rows, cols, data);
            let r = m.rref();
            prop_assert_eq!(r.mat.rref().mat, r.mat.clone());
            let k = m.kernel_basis();
            prop_assert_eq!(r.rank + k.rows(), cols);
            for i in 0..k.rows() {
                prop_assert!(m.mul_vec(k.row(i)).iter().all(|&x| x == 0));
            }
            prop_assert_eq!(k.rank(), k.rows());
        }
    }
}
