//! Hochschild cohomology through minimal bimodule resolutions, and the
//! embedding `δ = (Id ⊗ s)∘Δ` of a Hopf algebra into its enveloping algebra.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::mat::{Mat, Subspace};
use crate::module::ModuleRep;
use crate::pims::PimData;
use crate::resolution::{ExtData, Resolution};
use crate::structure::Structure;

/// `A` as a left module over `A ⊗ A^op`: `(a ⊗ b)·v = a v b`.
pub fn bimodule(alg: &Algebra) -> ModuleRep {
    let n = alg.dim();
    let left = alg.left_basis();
    let rights: Vec<Mat> = (0..n).map(|j| alg.right_mat(&alg.basis(j))).collect();
    let mut actions = Vec::with_capacity(n * n);
    for l in left.iter() {
        for r in &rights {
            actions.push(l.mul(r));
        }
    }
    ModuleRep::new(alg.field(), n, actions)
}

/// The basic algebra `f A f` with `f` a sum of one primitive idempotent
/// per simple type; Morita equivalent to `A`.
pub fn basic_algebra(alg: &Algebra, st: &Structure) -> Result<Algebra> {
    let mut f = alg.zero();
    for e in &st.idempotents {
        f = alg.add(&f, e);
    }
    let mut space = Subspace::new(alg.field(), alg.dim());
    for i in 0..alg.dim() {
        space.insert(&alg.mul(&alg.mul(&f, &alg.basis(i)), &f));
    }
    alg.restrict_to(&space, &f, "c")
}

#[derive(Clone, Debug, Serialize)]
pub struct HochschildDims {
    pub dims: Vec<usize>,
    /// Dimension of the algebra the bimodule resolution was built over.
    pub resolved_dim: usize,
}

/// `dim HH^n(A)` for `n ≤ cap`, computed over the basic algebra of `A`.
pub fn hochschild_dims(alg: &Algebra, cap: usize, seed: u64) -> Result<HochschildDims> {
    let st = Structure::compute(alg, seed)?;
    let basic = basic_algebra(alg, &st)?;
    let sb = Structure::compute(&basic, seed)?;
    let op = basic.opposite();
    let sop = Structure::compute(&op, seed)?;
    let pims = Arc::new(PimData::tensor(&basic, &sb, &op, &sop));
    let m = bimodule(&basic);
    let mut res = Resolution::new(pims, m.clone());
    let ext = ExtData::compute(&mut res, &m, cap)?;
    Ok(HochschildDims { dims: ext.dims, resolved_dim: basic.dim() })
}

/// `δ(x) = Σ x₁ ⊗ s(x₂)` as a `dim² × dim` matrix into `A ⊗ A^op`.
pub fn delta_map(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let f = h.field();
    let s = h.antipode();
    let mut m = Mat::zeros(f, n * n, n);
    for x in 0..n {
        for &(i, j, c) in h.comult_terms(x) {
            for (k, &sv) in s.col(j as usize).iter().enumerate() {
                if sv != 0 {
                    let r = i as usize * n + k;
                    m.set(r, x, f.add(m.get(r, x), f.mul(c, sv)));
                }
            }
        }
    }
    m
}

#[derive(Clone, Debug, Serialize)]
pub struct EnvelopingReport {
    pub delta_injective: bool,
    pub delta_multiplicative: bool,
    /// Free rank of `A ⊗ A^op` over `δ(A)` when it is free.
    pub free_rank: Option<usize>,
}

impl EnvelopingReport {
    pub fn passed(&self) -> bool {
        self.delta_injective && self.delta_multiplicative && self.free_rank.is_some()
    }
}

/// Checks that `δ` is an injective algebra map and that the enveloping
/// algebra is projective (here: free) over its image.
pub fn enveloping_setup(h: &HopfAlgebra, seed: u64) -> Result<EnvelopingReport> {
    let alg = h.algebra();
    let n = alg.dim();
    let env = alg.tensor(&alg.opposite())?;
    let d = delta_map(h);
    let delta_injective = d.rank() == n;
    let mut delta_multiplicative = d.mul_vec(alg.unit()) == env.unit();
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = d.mul_vec(&alg.product_dense(i, j));
            let rhs = env.mul(&d.col(i), &d.col(j));
            if lhs != rhs {
                delta_multiplicative = false;
                break 'outer;
            }
        }
    }
    // env as a left A-module through δ
    let env_left = env.left_basis();
    let actions: Vec<Mat> = (0..n)
        .map(|x| {
            let mut m = Mat::zeros(h.field(), n * n, n * n);
            for (k, &c) in d.col(x).iter().enumerate() {
                if c != 0 {
                    m.add_scaled(c, &env_left[k]);
                }
            }
            m
        })
        .collect();
    let module = ModuleRep::new(h.field(), n * n, actions);
    let st = Structure::compute(alg, seed)?;
    let free_rank = if st.is_projective(&module) {
        let top = st.top_multiplicities(&module);
        // free iff top multiplicities are proportional to simple dims
        let r = top[0] / st.simples[0].dim().max(1);
        let free = top.iter().zip(&st.simples).all(|(&m, s)| m == r * s.dim());
        free.then_some(r)
    } else {
        None
    };
    Ok(EnvelopingReport { delta_injective, delta_multiplicative, free_rank })
}

/// Degreewise sum of dimension lists.
pub fn sum_dims(parts: &[Vec<usize>]) -> Vec<usize> {
    let len = parts.iter().map(|p| p.len()).max().unwrap_or(0);
    (0..len).map(|i| parts.iter().map(|p| p.get(i).copied().unwrap_or(0)).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    #[test]
    fn hochschild_of_small_algebras() {
        let h = builtin("kZ2@p2").unwrap();
        assert_eq!(hochschild_dims(h.algebra(), 6, 0).unwrap().dims, vec![2; 7]);
        let h = builtin("kS3@p3").unwrap();
        assert_eq!(hochschild_dims(h.algebra(), 5, 0).unwrap().dims, vec![3, 1, 1, 2, 2, 1]);
    }

    #[test]
    fn enveloping_is_free_over_delta() {
        let h = builtin("kZ2@p2").unwrap();
        let r = enveloping_setup(&h, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.free_rank, Some(2));
    }
}
