//! Finite-dimensional associative unital algebras given by structure
//! constants.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::mat::{Mat, Subspace};
use crate::upoly::Poly;

/// Sparse coordinate vector used for products of basis elements.
pub type Sparse = Vec<(u32, Fe)>;

#[derive(Clone)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// `table[i * dim + j]` holds the coordinates of `b_i b_j`.
    table: Arc<Vec<Sparse>>,
    unit: Vec<Fe>,
    labels: Vec<String>,
    left: Arc<OnceLock<Vec<Mat>>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {} over {:?})", self.dim, self.field)
    }
}

pub fn to_sparse(v: &[Fe]) -> Sparse {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i as u32, c)).collect()
}

pub fn basis_vec(dim: usize, i: usize) -> Vec<Fe> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

impl Algebra {
    /// Builds an algebra from dense products `prod(i, j) = b_i b_j`.
    pub fn from_fn(
        field: &Field,
        labels: Vec<String>,
        unit: Vec<Fe>,
        mut prod: impl FnMut(usize, usize) -> Vec<Fe>,
    ) -> Algebra {
        let dim = labels.len();
        assert_eq!(unit.len(), dim);
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = prod(i, j);
                assert_eq!(v.len(), dim);
                table.push(to_sparse(&v));
            }
        }
        Algebra {
            field: field.clone(),
            dim,
            table: Arc::new(table),
            unit,
            labels,
            left: Arc::new(OnceLock::new()),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[Fe] {
        &self.unit
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn zero(&self) -> Vec<Fe> {
        vec![0; self.dim]
    }
    pub fn basis(&self, i: usize) -> Vec<Fe> {
        basis_vec(self.dim, i)
    }

    /// Coordinates of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim + j]
    }

    pub fn product_dense(&self, i: usize, j: usize) -> Vec<Fe> {
        let mut v = self.zero();
        for &(k, c) in self.product(i, j) {
            v[k as usize] = c;
        }
        v
    }

    pub fn mul(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(x, y);
                for &(k, s) in self.product(i, j) {
                    out[k as usize] = f.add(out[k as usize], f.mul(c, s));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Fe], n: usize) -> Vec<Fe> {
        let mut r = self.unit.clone();
        for _ in 0..n {
            r = self.mul(&r, a);
        }
        r
    }

    pub fn add(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let mut r = a.to_vec();
        self.field.axpy(&mut r, 1, b);
        r
    }

    pub fn sub(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let mut r = a.to_vec();
        self.field.axpy(&mut r, self.field.neg(1), b);
        r
    }

    /// Matrix of `x ↦ a x` (column `j` is `a b_j`).
    pub fn left_mat(&self, a: &[Fe]) -> Mat {
        let mut m = Mat::zeros(&self.field, self.dim, self.dim);
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                m.add_scaled(x, &self.left_basis()[i]);
            }
        }
        m
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mat(&self, a: &[Fe]) -> Mat {
        let f = &self.field;
        let mut m = Mat::zeros(f, self.dim, self.dim);
        for j in 0..self.dim {
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for &(k, c) in self.product(j, i) {
                    let v = f.add(m.get(k as usize, j), f.mul(x, c));
                    m.set(k as usize, j, v);
                }
            }
        }
        m
    }

    /// Left multiplication matrices of all basis elements (the regular
    /// representation), computed once.
    pub fn left_basis(&self) -> &[Mat] {
        self.left.get_or_init(|| {
            (0..self.dim)
                .map(|i| {
                    let mut m = Mat::zeros(&self.field, self.dim, self.dim);
                    for j in 0..self.dim {
                        for &(k, c) in self.product(i, j) {
                            m.set(k as usize, j, c);
                        }
                    }
                    m
                })
                .collect()
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// First basis triple violating associativity.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product_dense(i, j);
                for k in 0..self.dim {
                    let jk = self.product_dense(j, k);
                    let lhs = self.mul(&ij, &self.basis(k));
                    let rhs = self.mul(&self.basis(i), &jk);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis element for which the unit law fails.
    pub fn unit_failure(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let b = self.basis(i);
            self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
        })
    }

    /// Basis (rows) of the center, as the kernel of all commutators with
    /// basis elements.
    pub fn center(&self) -> Mat {
        let n = self.dim;
        let f = &self.field;
        // unknown z: for each basis b_j, z b_j - b_j z = 0
        let mut eqs = Mat::zeros(f, n * n, n);
        for j in 0..n {
            for i in 0..n {
                // contribution of z_i: b_i b_j - b_j b_i
                for &(k, c) in self.product(i, j) {
                    let r = j * n + k as usize;
                    eqs.set(r, i, f.add(eqs.get(r, i), c));
                }
                for &(k, c) in self.product(j, i) {
                    let r = j * n + k as usize;
                    eqs.set(r, i, f.sub(eqs.get(r, i), c));
                }
            }
        }
        eqs.kernel_basis().row_space()
    }

    pub fn opposite(&self) -> Algebra {
        let labels = self.labels.clone();
        Algebra::from_fn(&self.field, labels, self.unit.clone(), |i, j| self.product_dense(j, i))
    }

    /// Tensor product algebra with basis `(i, j) ↦ i * dim(other) + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::Invalid("tensor product of algebras over different fields".into()));
        }
        let (n, m) = (self.dim, other.dim);
        let f = &self.field;
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let unit = Mat::from_rows(f, n, std::slice::from_ref(&self.unit))
            .kron(&Mat::from_rows(f, m, std::slice::from_ref(&other.unit)))
            .row(0)
            .to_vec();
        Ok(Algebra::from_fn(f, labels, unit, |x, y| {
            let (i, j) = (x / m, x % m);
            let (k, l) = (y / m, y % m);
            let mut v = vec![0; n * m];
            for &(a, c) in self.product(i, k) {
                for &(b, d) in other.product(j, l) {
                    let idx = a as usize * m + b as usize;
                    v[idx] = f.add(v[idx], f.mul(c, d));
                }
            }
            v
        }))
    }

    /// The algebra structure on a subspace closed under multiplication,
    /// with its own unit (for corners `eAe` and blocks `Ae`).
    pub fn restrict_to(&self, space: &Subspace, unit: &[Fe], prefix: &str) -> Result<Algebra> {
        let basis = space.basis().to_vec();
        let d = basis.len();
        let mut err = None;
        let unit_c = if space.contains(unit) {
            space.coords(unit)
        } else {
            return Err(Error::Internal("unit outside subspace".into()));
        };
        let labels = (0..d).map(|i| format!("{prefix}{i}")).collect();
        let alg = Algebra::from_fn(&self.field, labels, unit_c, |i, j| {
            let p = self.mul(&basis[i], &basis[j]);
            if !space.contains(&p) {
                err = Some(Error::Internal("subspace not closed under multiplication".into()));
                return vec![0; d];
            }
            space.coords(&p)
        });
        match err {
            Some(e) => Err(e),
            None => Ok(alg),
        }
    }

    /// Greedy algebra generators among basis elements: a basis index is
    /// added when it is not in the subalgebra generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Subspace::new(&self.field, self.dim);
        span.insert(&self.unit);
        for i in 0..self.dim {
            if span.contains(&self.basis(i)) {
                continue;
            }
            gens.push(i);
            span = self.generated_subalgebra(&gens);
            if span.dim() == self.dim {
                break;
            }
        }
        gens
    }

    /// Subalgebra generated by the given basis elements (and the unit).
    pub fn generated_subalgebra(&self, gens: &[usize]) -> Subspace {
        let mut span = Subspace::new(&self.field, self.dim);
        span.insert(&self.unit);
        let mut frontier = vec![self.unit.clone()];
        while let Some(v) = frontier.pop() {
            for &g in gens {
                let w = self.mul(&v, &self.basis(g));
                if span.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        span
    }

    /// Subalgebra generated by arbitrary elements.
    pub fn generated_by(&self, elems: &[Vec<Fe>]) -> Subspace {
        let mut span = Subspace::new(&self.field, self.dim);
        span.insert(&self.unit);
        let mut frontier = vec![self.unit.clone()];
        while let Some(v) = frontier.pop() {
            for g in elems {
                let w = self.mul(&v, g);
                if span.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        span
    }

    /// Minimal polynomial of an element (monic, low-to-high).
    pub fn min_poly(&self, a: &[Fe]) -> Poly {
        let f = &self.field;
        // Krylov: find first power that depends on earlier ones
        let mut powers: Vec<Vec<Fe>> = vec![self.unit.clone()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            let k = powers.len();
            let m = Mat::from_cols(f, self.dim, &powers);
            let s = crate::mat::Solver::new(&m);
            if let Some(x) = s.solve(&next) {
                let mut poly: Poly = x.iter().map(|&c| f.neg(c)).collect();
                poly.push(1);
                debug_assert_eq!(poly.len(), k + 1);
                return poly;
            }
            powers.push(next);
        }
    }

    pub fn is_nilpotent(&self, a: &[Fe]) -> bool {
        let mut x = a.to_vec();
        for _ in 0..self.dim + 1 {
            if x.iter().all(|&c| c == 0) {
                return true;
            }
            x = self.mul(&x, a);
        }
        x.iter().all(|&c| c == 0)
    }

    /// Evaluates a polynomial at an element.
    pub fn eval_poly(&self, poly: &[Fe], a: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let mut acc = self.zero();
        for &c in poly.iter().rev() {
            acc = self.mul(&acc, a);
            f.axpy(&mut acc, c, &self.unit.clone());
        }
        acc
    }

    /// Two-sided ideal product `I · K` of subspaces.
    pub fn ideal_product(&self, i: &Subspace, k: &Subspace) -> Subspace {
        let mut out = Subspace::new(&self.field, self.dim);
        for a in i.basis() {
            for b in k.basis() {
                out.insert(&self.mul(a, b));
            }
        }
        out
    }

    /// Human-readable element, e.g. `g1 + 2*g3`.
    pub fn format_element(&self, v: &[Fe]) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.labels[i].clone()
                } else {
                    format!("({})*{}", self.field.format(c), self.labels[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Extends scalars along a field embedding.
    pub fn extend_scalars(&self, ext: &crate::field::Extension) -> Algebra {
        let labels = self.labels.clone();
        let unit = ext.embed_slice(&self.unit);
        Algebra::from_fn(&ext.field, labels, unit, |i, j| ext.embed_slice(&self.product_dense(i, j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// k[t]/(t^n) with basis 1, t, ..., t^{n-1}.
    fn truncated(f: &Field, n: usize) -> Algebra {
        let labels = (0..n).map(|i| format!("t{i}")).collect();
        Algebra::from_fn(f, labels, basis_vec(n, 0), |i, j| {
            let mut v = vec![0; n];
            if i + j < n {
                v[i + j] = 1;
            }
            v
        })
    }

    /// 2x2 matrices with basis E11, E12, E21, E22.
    fn mat2(f: &Field) -> Algebra {
        let labels = ["E11", "E12", "E21", "E22"].iter().map(|s| s.to_string()).collect();
        Algebra::from_fn(f, labels, vec![1, 0, 0, 1], |x, y| {
            let (a, b) = (x / 2, x % 2);
            let (c, d) = (y / 2, y % 2);
            let mut v = vec![0; 4];
            if b == c {
                v[a * 2 + d] = 1;
            }
            v
        })
    }

    #[test]
    fn truncated_polynomials() {
        let f = Field::prime(3).unwrap();
        let a = truncated(&f, 3);
        assert!(a.is_commutative());
        assert_eq!(a.associativity_failure(), None);
        assert_eq!(a.center().rows(), 3);
        assert_eq!(a.min_poly(&a.basis(1)), vec![0, 0, 0, 1]);
        assert!(a.is_nilpotent(&a.basis(1)));
        assert_eq!(a.generators(), vec![1]);
    }

    #[test]
    fn matrix_algebra_center_and_opposite() {
        let f = Field::prime(2).unwrap();
        let a = mat2(&f);
        assert_eq!(a.associativity_failure(), None);
        assert_eq!(a.unit_failure(), None);
        assert_eq!(a.center().rows(), 1);
        assert!(!a.is_commutative());
        let op = a.opposite();
        assert_eq!(op.associativity_failure(), None);
        let t = a.tensor(&truncated(&f, 2)).unwrap();
        assert_eq!(t.dim(), 8);
        assert_eq!(t.associativity_failure(), None);
        assert_eq!(t.center().rows(), 2);
    }

    #[test]
    fn left_and_right_matrices() {
        let f = Field::prime(5).unwrap();
        let a = mat2(&f);
        let x = vec![1, 2, 3, 4];
        let y = vec![0, 1, 4, 2];
        assert_eq!(a.left_mat(&x).mul_vec(&y), a.mul(&x, &y));
        assert_eq!(a.right_mat(&y).mul_vec(&x), a.mul(&x, &y));
    }
}
