//! Blocks as modules under the left-adjoint action `x.b = Σ x₁ b s(x₂)`,
//! their fixed points and indecomposable summands.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::blocks::BlockDecomposition;
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::hopf::HopfAlgebra;
use crate::mat::{Mat, Solver, Subspace};
use crate::module::ModuleRep;
use crate::structure::Structure;

/// Adjoint action matrices on the whole algebra.
pub fn adjoint_matrices(h: &HopfAlgebra) -> Vec<Mat> {
    let alg = h.algebra();
    let f = h.field();
    let n = alg.dim();
    let left = alg.left_basis();
    let s = h.antipode();
    let rights: Vec<Mat> = (0..n).map(|j| alg.right_mat(&s.col(j))).collect();
    (0..n)
        .map(|x| {
            let mut m = Mat::zeros(f, n, n);
            for &(i, j, c) in h.comult_terms(x) {
                m.add_scaled(c, &left[i as usize].mul(&rights[j as usize]));
            }
            m
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct AdjointModule {
    /// Block index, or `None` for the whole algebra.
    pub block: Option<usize>,
    pub module: ModuleRep,
    /// The block inside the algebra; module coordinates are coordinates in
    /// this subspace's echelon basis.
    pub space: Subspace,
    pub idempotent: Vec<Fe>,
    pub idempotent_coords: Vec<Fe>,
}

impl AdjointModule {
    pub fn whole(h: &HopfAlgebra) -> AdjointModule {
        let alg = h.algebra();
        let space = Subspace::full(h.field(), alg.dim());
        let module = ModuleRep::new(h.field(), alg.dim(), adjoint_matrices(h));
        AdjointModule {
            block: None,
            module,
            idempotent: alg.unit().to_vec(),
            idempotent_coords: space.coords(alg.unit()),
            space,
        }
    }

    pub fn of_block(h: &HopfAlgebra, d: &BlockDecomposition, i: usize) -> AdjointModule {
        let full = ModuleRep::new(h.field(), h.dim(), adjoint_matrices(h));
        let b = &d.blocks[i];
        let module = full.submodule(&b.space);
        AdjointModule {
            block: Some(i),
            module,
            idempotent: b.idempotent.clone(),
            idempotent_coords: b.space.coords(&b.idempotent),
            space: b.space.clone(),
        }
    }

    pub fn to_ambient(&self, coords: &[Fe]) -> Vec<Fe> {
        let f = self.space.field();
        let mut v = vec![0; self.space.ambient()];
        for (c, b) in coords.iter().zip(self.space.basis()) {
            f.axpy(&mut v, *c, b);
        }
        v
    }

    /// Fixed points, in module coordinates.
    pub fn fixed_points(&self, h: &HopfAlgebra) -> Subspace {
        self.module.fixed_points(h)
    }

    /// Center of the block, in module coordinates.
    pub fn center(&self, alg: &Algebra) -> Subspace {
        let z = Subspace::from_rows(&alg.center());
        let inside = z.intersect(&self.space);
        let mut out = Subspace::new(alg.field(), self.space.dim());
        for v in inside.basis() {
            out.insert(&self.space.coords(v));
        }
        out
    }

    /// Multiplication is a module map: `x.(ab) = Σ (x₁.a)(x₂.b)`.
    pub fn is_g_algebra(&self, h: &HopfAlgebra) -> bool {
        let alg = h.algebra();
        let f = h.field();
        let basis: Vec<Vec<Fe>> = self.space.basis().to_vec();
        let full = adjoint_matrices(h);
        for x in 0..h.dim() {
            for a in &basis {
                for b in &basis {
                    let lhs = full[x].mul_vec(&alg.mul(a, b));
                    let mut rhs = vec![0; alg.dim()];
                    for &(i, j, c) in h.comult_terms(x) {
                        let pa = full[i as usize].mul_vec(a);
                        let pb = full[j as usize].mul_vec(b);
                        f.axpy(&mut rhs, c, &alg.mul(&pa, &pb));
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct Summand {
    /// The summand inside the decomposed module.
    pub space: Subspace,
    pub module: ModuleRep,
}

/// `End_A(M)` as an algebra on the given basis of matrices.
fn endomorphism_algebra(m: &ModuleRep, basis: &[Mat]) -> Result<Algebra> {
    let f = m.field();
    let cols: Vec<Vec<Fe>> = basis.iter().map(|e| e.data().to_vec()).collect();
    let stacked = Mat::from_cols(f, m.dim() * m.dim(), &cols);
    let solver = Solver::new(&stacked);
    let unit = solver
        .solve(Mat::identity(f, m.dim()).data())
        .ok_or_else(|| Error::Internal("identity is not an endomorphism".into()))?;
    let mut fail = false;
    let labels = (0..basis.len()).map(|i| format!("φ{i}")).collect();
    let alg = Algebra::from_fn(f, labels, unit, |i, j| match solver.solve(basis[i].mul(&basis[j]).data()) {
        Some(v) => v,
        None => {
            fail = true;
            vec![0; basis.len()]
        }
    });
    if fail {
        return Err(Error::Internal("endomorphisms not closed under composition".into()));
    }
    Ok(alg)
}

fn combine(basis: &[Mat], coords: &[Fe]) -> Mat {
    let f = basis[0].field();
    let mut m = Mat::zeros(f, basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coords) {
        if c != 0 {
            m.add_scaled(c, b);
        }
    }
    m
}

/// Fitting splitting with random endomorphisms; used when the
/// endomorphism algebra does not split over the current field.
fn fitting_split(m: &ModuleRep, gens: &[usize], rng: &mut ChaCha8Rng) -> Vec<Subspace> {
    let f = m.field().clone();
    let n = m.dim();
    let basis = ModuleRep::hom_space(m, m, gens);
    for _ in 0..200 {
        let coords: Vec<Fe> = (0..basis.len()).map(|_| rng.gen_range(0..f.order()) as Fe).collect();
        let phi = combine(&basis, &coords).pow(n as u32);
        let r = phi.rank();
        if r > 0 && r < n {
            let im = Subspace::from_rows(&phi.transpose().row_space());
            let ker = Subspace::from_rows(&phi.kernel_basis());
            let mut out = Vec::new();
            for part in [im, ker] {
                let sub = m.submodule(&part);
                for s in fitting_split(&sub, gens, rng) {
                    let mut lifted = Subspace::new(&f, n);
                    for v in s.basis() {
                        let mut w = vec![0; n];
                        for (c, b) in v.iter().zip(part.basis()) {
                            f.axpy(&mut w, *c, b);
                        }
                        lifted.insert(&w);
                    }
                    out.push(lifted);
                }
            }
            return out;
        }
    }
    vec![Subspace::full(&f, n)]
}

/// Indecomposable summands via primitive idempotents of `End_A(M)`.
/// `gens` must generate the acting algebra.
pub fn indecomposable_summands(m: &ModuleRep, gens: &[usize], seed: u64) -> Result<Vec<Summand>> {
    let f = m.field().clone();
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    let basis = ModuleRep::hom_space(m, m, gens);
    let end = endomorphism_algebra(m, &basis)?;
    let spaces: Vec<Subspace> = match Structure::compute(&end, seed) {
        Ok(st) => st
            .decomposition
            .iter()
            .map(|(_, e)| Subspace::from_rows(&combine(&basis, e).transpose().row_space()))
            .collect(),
        Err(Error::NeedsExtension(_)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            fitting_split(m, gens, &mut rng)
        }
        Err(e) => return Err(e),
    };
    let total: usize = spaces.iter().map(|s| s.dim()).sum();
    let mut sum = Subspace::new(&f, m.dim());
    for s in &spaces {
        sum = sum.sum(s);
    }
    if total != m.dim() || sum.dim() != m.dim() {
        return Err(Error::Internal("summands do not reassemble the module".into()));
    }
    let mut out: Vec<Summand> = spaces
        .into_iter()
        .map(|s| {
            if !m.is_submodule(&s) {
                return Err(Error::Internal("summand is not a submodule".into()));
            }
            Ok(Summand { module: m.submodule(&s), space: s })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| (a.space.dim(), a.space.basis()).cmp(&(b.space.dim(), b.space.basis())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    #[test]
    fn fixed_points_are_the_center() {
        for name in ["kD8@p2", "kS3@p2", "kS3@p3"] {
            let h = builtin(name).unwrap();
            let ad = AdjointModule::whole(&h);
            let fp = ad.fixed_points(&h);
            assert!(fp.equals(&ad.center(h.algebra())), "{name}");
            assert!(ad.is_g_algebra(&h));
        }
        let h = builtin("kD8@p2").unwrap();
        assert_eq!(AdjointModule::whole(&h).fixed_points(&h).dim(), 5);
    }

    #[test]
    fn commutative_adjoint_is_trivial() {
        let h = builtin("kZ4@p2").unwrap();
        let ad = AdjointModule::whole(&h);
        assert!(ad.module.is_trivial(&h));
        let gens = h.algebra().generators();
        let s = indecomposable_summands(&ad.module, &gens, 0).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|x| x.space.dim() == 1));
    }

    #[test]
    fn summands_reassemble() {
        let h = builtin("kS3@p2").unwrap();
        let ad = AdjointModule::whole(&h);
        let gens = h.algebra().generators();
        let s = indecomposable_summands(&ad.module, &gens, 0).unwrap();
        assert_eq!(s.iter().map(|x| x.space.dim()).sum::<usize>(), 6);
        let z4 = builtin("kZ4@p2").unwrap();
        let single = indecomposable_summands(&ModuleRep::regular(z4.algebra()), &z4.algebra().generators(), 0);
        assert_eq!(single.unwrap().len(), 1);
    }
}
