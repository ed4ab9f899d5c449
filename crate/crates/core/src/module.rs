//! Finite-dimensional left modules given by one action matrix per algebra
//! basis element.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Extension, Fe, Field};
use crate::hopf::HopfAlgebra;
use crate::mat::{Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    field: Field,
    dim: usize,
    action: Vec<Mat>,
}

impl ModuleRep {
    pub fn new(field: &Field, dim: usize, action: Vec<Mat>) -> ModuleRep {
        for m in &action {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "action matrix has wrong shape");
        }
        ModuleRep { field: field.clone(), dim, action }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn actions(&self) -> &[Mat] {
        &self.action
    }
    pub fn basis_action(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, a: &[Fe]) -> Mat {
        let mut m = Mat::zeros(&self.field, self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &self.action[i]);
            }
        }
        m
    }

    /// `a · v` without forming the action matrix.
    pub fn act_vec(&self, a: &[Fe], v: &[Fe]) -> Vec<Fe> {
        let mut out = vec![0; self.dim];
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                self.field.axpy(&mut out, c, &self.action[i].mul_vec(v));
            }
        }
        out
    }

    pub fn regular(alg: &Algebra) -> ModuleRep {
        ModuleRep::new(alg.field(), alg.dim(), alg.left_basis().to_vec())
    }

    pub fn trivial(h: &HopfAlgebra) -> ModuleRep {
        let f = h.field();
        let action = h.counit().iter().map(|&c| Mat::from_vec(f, 1, 1, vec![c])).collect();
        ModuleRep::new(f, 1, action)
    }

    pub fn zero(field: &Field, alg_dim: usize) -> ModuleRep {
        ModuleRep::new(field, 0, vec![Mat::zeros(field, 0, 0); alg_dim])
    }

    /// Checks that the action respects the multiplication and unit.
    pub fn is_module_over(&self, alg: &Algebra) -> bool {
        if self.action.len() != alg.dim() {
            return false;
        }
        if self.act(alg.unit()) != Mat::identity(&self.field, self.dim) {
            return false;
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                if lhs != self.act(&alg.product_dense(i, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// Submodule generated by vectors: for a module over a unital algebra
    /// with every basis action available, `A·v` is the span of `b_i v`.
    pub fn generated(&self, vecs: &[Vec<Fe>]) -> Subspace {
        let mut s = Subspace::new(&self.field, self.dim);
        for v in vecs {
            for m in &self.action {
                s.insert(&m.mul_vec(v));
            }
        }
        s
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| self.action.iter().all(|m| s.contains(&m.mul_vec(v))))
    }

    /// The module structure on an invariant subspace, in its echelon basis.
    pub fn submodule(&self, s: &Subspace) -> ModuleRep {
        let d = s.dim();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<Fe>> = s.basis().iter().map(|v| s.coords(&m.mul_vec(v))).collect();
                Mat::from_cols(&self.field, d, &cols)
            })
            .collect();
        ModuleRep::new(&self.field, d, action)
    }

    /// The quotient by an invariant subspace; the basis is the standard
    /// basis vectors at non-pivot positions of `s`.
    pub fn quotient(&self, s: &Subspace) -> ModuleRep {
        let idx = s.complement_indices();
        let d = idx.len();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<Fe>> = idx
                    .iter()
                    .map(|&j| {
                        let mut w = m.col(j);
                        s.reduce(&mut w);
                        idx.iter().map(|&i| w[i]).collect()
                    })
                    .collect();
                Mat::from_cols(&self.field, d, &cols)
            })
            .collect();
        ModuleRep::new(&self.field, d, action)
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> ModuleRep {
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        ModuleRep::new(&self.field, self.dim + other.dim, action)
    }

    /// `M ⊗ N` with `x` acting by `Σ x₁ ⊗ x₂`; basis `m_i ⊗ n_j` at
    /// `i * dim N + j`.
    pub fn tensor_diagonal(h: &HopfAlgebra, m: &ModuleRep, n: &ModuleRep) -> ModuleRep {
        let f = h.field();
        let d = m.dim * n.dim;
        let action = (0..h.dim())
            .map(|x| {
                let mut out = Mat::zeros(f, d, d);
                for &(i, j, c) in h.comult_terms(x) {
                    out.add_scaled(c, &m.action[i as usize].kron(&n.action[j as usize]));
                }
                out
            })
            .collect();
        ModuleRep::new(f, d, action)
    }

    /// `Hom_k(M, N)` with `(x·F) = Σ x₁ F s(x₂)`; a map `F` (a `dim N × dim M`
    /// matrix) is stored row-major.
    pub fn hom_module(h: &HopfAlgebra, m: &ModuleRep, n: &ModuleRep) -> ModuleRep {
        let f = h.field();
        let d = m.dim * n.dim;
        // ρ_M(s(b_j)) for each basis element
        let s_actions: Vec<Mat> = (0..h.dim()).map(|j| m.act(&h.antipode().col(j))).collect();
        let action = (0..h.dim())
            .map(|x| {
                let mut out = Mat::zeros(f, d, d);
                for &(i, j, c) in h.comult_terms(x) {
                    // vec(A F B) = (A ⊗ Bᵀ) vec(F) for row-major vec
                    out.add_scaled(c, &n.action[i as usize].kron(&s_actions[j as usize].transpose()));
                }
                out
            })
            .collect();
        ModuleRep::new(f, d, action)
    }

    /// Pullback along an algebra map given as a `dim A × dim A'` matrix
    /// (column `j` holds the image of the `j`-th basis element of `A'`).
    pub fn restrict(&self, phi: &Mat, source: &Algebra, target: &Algebra) -> Result<ModuleRep> {
        if phi.rows() != target.dim() || phi.cols() != source.dim() {
            return Err(Error::Invalid("restriction map has wrong shape".into()));
        }
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = phi.mul_vec(&source.product_dense(i, j));
                let rhs = target.mul(&phi.col(i), &phi.col(j));
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "restriction map is not multiplicative at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        if phi.mul_vec(source.unit()) != target.unit() {
            return Err(Error::Precondition("restriction map does not preserve the unit".into()));
        }
        let action = (0..source.dim()).map(|j| self.act(&phi.col(j))).collect();
        Ok(ModuleRep::new(&self.field, self.dim, action))
    }

    /// Basis of `Hom_A(M, N)` as `dim N × dim M` matrices, using only the
    /// given algebra generators (which must generate `A`).
    pub fn hom_space(m: &ModuleRep, n: &ModuleRep, gens: &[usize]) -> Vec<Mat> {
        let f = &m.field;
        let (dm, dn) = (m.dim, n.dim);
        if dm == 0 || dn == 0 {
            return Vec::new();
        }
        let im = Mat::identity(f, dm);
        let idn = Mat::identity(f, dn);
        let mut eqs = Mat::zeros(f, 0, dm * dn);
        for &g in gens {
            // ρ_N(g) X - X ρ_M(g) = 0
            let lhs = n.action[g].kron(&im);
            let rhs = idn.kron(&m.action[g].transpose());
            eqs = eqs.vstack(&lhs.sub(&rhs));
        }
        let ker = eqs.kernel_basis();
        (0..ker.rows()).map(|r| Mat::from_vec(f, dn, dm, ker.row(r).to_vec())).collect()
    }

    pub fn extend_scalars(&self, ext: &Extension) -> ModuleRep {
        let action = self
            .action
            .iter()
            .map(|m| Mat::from_vec(&ext.field, m.rows(), m.cols(), ext.embed_slice(m.data())))
            .collect();
        ModuleRep::new(&ext.field, self.dim, action)
    }

    /// Basis-independent invariant: characteristic polynomials of the
    /// basis actions. Used to order isomorphism classes canonically.
    pub fn invariant_key(&self) -> Vec<Vec<Fe>> {
        self.action.iter().map(|m| m.charpoly()).collect()
    }

    /// Whether `x` acts as `ε(x)` on every vector (the trivial action).
    pub fn is_trivial(&self, h: &HopfAlgebra) -> bool {
        self.action
            .iter()
            .zip(h.counit())
            .all(|(m, &c)| *m == Mat::identity(&self.field, self.dim).scaled(c))
    }

    /// Fixed points `{v : x·v = ε(x) v}`.
    pub fn fixed_points(&self, h: &HopfAlgebra) -> Subspace {
        let f = &self.field;
        let mut eqs = Mat::zeros(f, 0, self.dim);
        for (m, &c) in self.action.iter().zip(h.counit()) {
            eqs = eqs.vstack(&m.sub(&Mat::identity(f, self.dim).scaled(c)));
        }
        Subspace::from_rows(&eqs.kernel_basis())
    }
}

/// Jordan type of a nilpotent matrix: block sizes, largest first.
pub fn jordan_type(m: &Mat) -> Vec<usize> {
    let n = m.rows();
    let mut ranks = vec![n];
    let mut pw = Mat::identity(m.field(), n);
    while *ranks.last().unwrap() > 0 {
        pw = pw.mul(m);
        let r = pw.rank();
        if r == *ranks.last().unwrap() {
            // not nilpotent; stop to avoid looping
            break;
        }
        ranks.push(r);
    }
    // number of blocks of size ≥ k is ranks[k-1] - ranks[k]
    let mut at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    at_least.push(0);
    let mut sizes = Vec::new();
    for k in (1..at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least[k];
        for _ in 0..exactly {
            sizes.push(k);
        }
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    #[test]
    fn trivial_and_regular_are_modules() {
        for name in ["kS3@p2", "kZ3@p3", "usl2@p3"] {
            let h = builtin(name).unwrap();
            assert!(ModuleRep::trivial(&h).is_module_over(h.algebra()));
            assert!(ModuleRep::regular(h.algebra()).is_module_over(h.algebra()));
        }
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        let h = builtin("kS3@p3").unwrap();
        let r = ModuleRep::regular(h.algebra());
        let k = ModuleRep::trivial(&h);
        assert_eq!(ModuleRep::tensor_diagonal(&h, &k, &r), r);
        assert_eq!(ModuleRep::tensor_diagonal(&h, &r, &k), r);
        let t = ModuleRep::tensor_diagonal(&h, &r, &r);
        assert_eq!(t.dim(), 36);
        assert!(t.is_module_over(h.algebra()));
    }

    #[test]
    fn hom_module_is_a_module_with_homs_as_fixed_points() {
        let h = builtin("kS3@p2").unwrap();
        let r = ModuleRep::regular(h.algebra());
        let k = ModuleRep::trivial(&h);
        let hm = ModuleRep::hom_module(&h, &r, &r);
        assert!(hm.is_module_over(h.algebra()));
        let gens = h.algebra().generators();
        assert_eq!(hm.fixed_points(&h).dim(), ModuleRep::hom_space(&r, &r, &gens).len());
        assert_eq!(ModuleRep::hom_space(&r, &k, &gens).len(), 1);
    }

    #[test]
    fn jordan_types() {
        let f = Field::prime(2).unwrap();
        let mut n = Mat::zeros(&f, 4, 4);
        n.set(0, 1, 1);
        n.set(2, 3, 1);
        assert_eq!(jordan_type(&n), vec![2, 2]);
        assert_eq!(jordan_type(&Mat::zeros(&f, 3, 3)), vec![1, 1, 1]);
        let mut j = Mat::zeros(&f, 3, 3);
        j.set(0, 1, 1);
        j.set(1, 2, 1);
        assert_eq!(jordan_type(&j), vec![3]);
    }

    #[test]
    fn submodule_and_quotient_dimensions() {
        let h = builtin("kZ2@p2").unwrap();
        let r = ModuleRep::regular(h.algebra());
        let s = r.generated(&[vec![1, 1]]);
        assert_eq!(s.dim(), 1);
        assert!(r.is_submodule(&s));
        assert_eq!(r.submodule(&s).dim(), 1);
        assert_eq!(r.quotient(&s).dim(), 1);
        assert!(r.quotient(&s).is_trivial(&h));
    }
}
