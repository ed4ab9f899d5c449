//! Minimal projective resolutions, cochain complexes and chain-map lifting.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::hopf::HopfAlgebra;
use crate::mat::{Mat, Solver, Subspace};
use crate::module::ModuleRep;
use crate::pims::PimData;

/// One term `P_n = ⊕_j P_{t_j}` of a resolution.
#[derive(Clone, Debug, Default)]
pub struct Term {
    /// Type of each generator.
    pub gens: Vec<usize>,
    /// Offset of each generator's block.
    pub offsets: Vec<usize>,
    pub dim: usize,
    /// Image of each generator `ε_{t_j}` under the differential.
    pub images: Vec<Vec<Fe>>,
}

#[derive(Debug)]
pub struct Resolution {
    pims: Arc<PimData>,
    module: ModuleRep,
    /// `ρ_M(x)` for every special element.
    module_mats: Vec<Mat>,
    terms: Vec<Term>,
    /// `diffs[0]` is the augmentation `P_0 → M`; `diffs[n]: P_n → P_{n−1}`.
    diffs: Vec<Mat>,
    solvers: Vec<OnceLock<Solver>>,
    /// Kernel of the last computed differential.
    next_kernel: Subspace,
}

impl Resolution {
    pub fn new(pims: Arc<PimData>, module: ModuleRep) -> Resolution {
        assert_eq!(module.actions().len(), pims.alg_dim(), "module over a different algebra");
        let module_mats = pims.elems.iter().map(|x| module.act(x)).collect();
        let next_kernel = Subspace::full(module.field(), module.dim());
        Resolution { pims, module, module_mats, terms: Vec::new(), diffs: Vec::new(), solvers: Vec::new(), next_kernel }
    }

    pub fn pims(&self) -> &Arc<PimData> {
        &self.pims
    }
    pub fn module(&self) -> &ModuleRep {
        &self.module
    }
    pub fn field(&self) -> &Field {
        self.pims.field()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn term(&self, n: usize) -> &Term {
        &self.terms[n]
    }
    pub fn diff(&self, n: usize) -> &Mat {
        &self.diffs[n]
    }
    pub fn augmentation(&self) -> &Mat {
        &self.diffs[0]
    }

    /// Dimension of the codomain of `diffs[n]`.
    fn target_dim(&self, n: usize) -> usize {
        if n == 0 {
            self.module.dim()
        } else {
            self.terms[n - 1].dim
        }
    }

    /// Action of special element `x` on the codomain of `diffs[n]`.
    pub fn act_target(&self, n: usize, x: usize, v: &[Fe]) -> Vec<Fe> {
        if n == 0 {
            self.module_mats[x].mul_vec(v)
        } else {
            self.act_term(n - 1, x, v)
        }
    }

    /// Action of special element `x` on `P_n`, block by block.
    pub fn act_term(&self, n: usize, x: usize, v: &[Fe]) -> Vec<Fe> {
        let t = &self.terms[n];
        let mut out = vec![0; t.dim];
        for (j, &u) in t.gens.iter().enumerate() {
            let o = t.offsets[j];
            let d = self.pims.types[u].dim;
            let r = self.pims.mat(x, u).mul_vec(&v[o..o + d]);
            out[o..o + d].copy_from_slice(&r);
        }
        out
    }

    /// Extends the resolution so that terms `0..=n` exist.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.terms.len() <= n {
            self.step()?;
        }
        Ok(())
    }

    fn step(&mut self) -> Result<()> {
        let n = self.terms.len();
        let f = self.field().clone();
        let tdim = self.target_dim(n);
        let k = std::mem::replace(&mut self.next_kernel, Subspace::new(&f, 0));
        // radical of the kernel
        let mut jk = Subspace::new(&f, tdim);
        for &r in &self.pims.rad {
            for v in k.basis() {
                jk.insert(&self.act_target(n, r, v));
            }
        }
        let mut gens = Vec::new();
        let mut images = Vec::new();
        for t in 0..self.pims.num_types() {
            let e = self.pims.idem[t];
            let mut s = Subspace::new(&f, tdim);
            for w in jk.basis() {
                s.insert(&self.act_target(n, e, w));
            }
            for v in k.basis() {
                let x = self.act_target(n, e, v);
                if s.insert(&x) {
                    gens.push(t);
                    images.push(x);
                }
            }
        }
        let mut offsets = Vec::with_capacity(gens.len());
        let mut dim = 0;
        for &t in &gens {
            offsets.push(dim);
            dim += self.pims.types[t].dim;
        }
        let mut cols = Vec::with_capacity(dim);
        for (j, &t) in gens.iter().enumerate() {
            for &b in &self.pims.pim_basis[t] {
                cols.push(self.act_target(n, b, &images[j]));
            }
        }
        let d = Mat::from_cols(&f, tdim, &cols);
        if d.rank() != k.dim() {
            return Err(Error::Internal(format!("cover at degree {n} does not reach the kernel")));
        }
        self.next_kernel = Subspace::from_rows(&d.kernel_basis());
        self.terms.push(Term { gens, offsets, dim, images });
        self.diffs.push(d);
        self.solvers.push(OnceLock::new());
        Ok(())
    }

    /// Solver for `diffs[n]`.
    pub fn solver(&self, n: usize) -> &Solver {
        self.solvers[n].get_or_init(|| Solver::new(&self.diffs[n]))
    }

    /// Number of generators of each type in `P_n`.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; self.pims.num_types()];
        for &t in &self.terms[n].gens {
            m[t] += 1;
        }
        m
    }

    /// `P_n` as a module (direct sum of PIMs) over the ambient algebra.
    pub fn term_module(&self, n: usize) -> ModuleRep {
        let full = self.pims.full_actions();
        let f = self.field();
        let mut m = ModuleRep::zero(f, self.pims.alg_dim());
        for &u in &self.terms[n].gens {
            let pu = ModuleRep::new(f, self.pims.types[u].dim, full[u].clone());
            m = m.direct_sum(&pu);
        }
        m
    }

    /// `Ω^n(M)`: `M` for `n = 0`, otherwise the kernel of `diffs[n−1]`.
    pub fn syzygy(&mut self, n: usize) -> Result<ModuleRep> {
        if n == 0 {
            return Ok(self.module.clone());
        }
        self.extend_to(n - 1)?;
        let ker = Subspace::from_rows(&self.diffs[n - 1].kernel_basis());
        Ok(self.term_module(n - 1).submodule(&ker))
    }

    /// Checks `d∘d = 0`, exactness by ranks and minimality (generator
    /// images lie in the radical of the previous term).
    pub fn check(&self) -> Result<()> {
        for n in 1..self.diffs.len() {
            if !self.diffs[n - 1].mul(&self.diffs[n]).is_zero() {
                return Err(Error::Internal(format!("d∘d ≠ 0 at degree {n}")));
            }
            let ker = self.terms[n - 1].dim - self.diffs[n - 1].rank();
            if self.diffs[n].rank() != ker {
                return Err(Error::Internal(format!("not exact at degree {}", n - 1)));
            }
            // minimality: images in J·P_{n−1}
            let f = self.field();
            let dim = self.terms[n - 1].dim;
            let mut jp = Subspace::new(f, dim);
            for c in 0..dim {
                let mut v = vec![0; dim];
                v[c] = 1;
                for &r in &self.pims.rad {
                    jp.insert(&self.act_term(n - 1, r, &v));
                }
            }
            for img in &self.terms[n].images {
                if !jp.contains(img) {
                    return Err(Error::Internal(format!("differential at degree {n} is not minimal")));
                }
            }
        }
        if !self.diffs.is_empty() && self.diffs[0].rank() != self.module.dim() {
            return Err(Error::Internal("augmentation is not surjective".into()));
        }
        Ok(())
    }

    /// Vector of `ε_{t_j}` placed in block `j` of `P_n`.
    pub fn generator_vector(&self, n: usize, j: usize) -> Vec<Fe> {
        let t = &self.terms[n];
        let mut v = vec![0; t.dim];
        let top = &self.pims.types[t.gens[j]].top;
        v[t.offsets[j]..t.offsets[j] + top.len()].copy_from_slice(top);
        v
    }
}

/// A complex of modules into which chain maps can be lifted.
pub trait LiftTarget {
    /// Dimension of term `i` (for `i` ≥ 0).
    fn term_dim(&self, i: usize) -> usize;
    /// Solves `d_i x = y`, where `d_0` is the augmentation.
    fn solve(&self, i: usize, y: &[Fe]) -> Option<Vec<Fe>>;
    /// Action of an algebra element (given as a vector) on term `i`.
    fn act(&self, i: usize, x: &[Fe], v: &[Fe]) -> Vec<Fe>;
    /// Makes sure term `i` exists.
    fn ensure(&mut self, i: usize) -> Result<()>;
}

impl LiftTarget for Resolution {
    fn term_dim(&self, i: usize) -> usize {
        self.terms[i].dim
    }
    fn solve(&self, i: usize, y: &[Fe]) -> Option<Vec<Fe>> {
        self.solver(i).solve(y)
    }
    fn act(&self, i: usize, x: &[Fe], v: &[Fe]) -> Vec<Fe> {
        let full = self.pims.full_actions();
        let f = self.field();
        let t = &self.terms[i];
        let mut out = vec![0; t.dim];
        for (j, &u) in t.gens.iter().enumerate() {
            let o = t.offsets[j];
            let d = self.pims.types[u].dim;
            for (a, &c) in x.iter().enumerate() {
                if c != 0 {
                    let r = full[u][a].mul_vec(&v[o..o + d]);
                    f.axpy(&mut out[o..o + d], c, &r);
                }
            }
        }
        out
    }
    fn ensure(&mut self, i: usize) -> Result<()> {
        self.extend_to(i)
    }
}

/// `P_• ⊗ W` with the diagonal action, resolving `k ⊗ W = W` when `P_•`
/// resolves the trivial module. Vectors are `dim P_i × dim W` row-major.
pub struct TensorTarget<'a> {
    /// Must already be extended as far as lifts will reach.
    pub res: &'a Resolution,
    pub hopf: &'a HopfAlgebra,
    pub w: ModuleRep,
}

impl TensorTarget<'_> {
    fn solve_cols(&self, i: usize, y: &[Fe]) -> Option<Vec<Fe>> {
        let dw = self.w.dim();
        let rows = if i == 0 { self.res.module().dim() } else { self.res.terms[i - 1].dim };
        let pd = self.res.terms[i].dim;
        let mut x = vec![0; pd * dw];
        for c in 0..dw {
            let col: Vec<Fe> = (0..rows).map(|r| y[r * dw + c]).collect();
            let s = self.res.solver(i).solve(&col)?;
            for r in 0..pd {
                x[r * dw + c] = s[r];
            }
        }
        Some(x)
    }
}

impl LiftTarget for TensorTarget<'_> {
    fn term_dim(&self, i: usize) -> usize {
        self.res.terms[i].dim * self.w.dim()
    }
    fn solve(&self, i: usize, y: &[Fe]) -> Option<Vec<Fe>> {
        self.solve_cols(i, y)
    }
    fn act(&self, i: usize, x: &[Fe], v: &[Fe]) -> Vec<Fe> {
        let f = self.res.field();
        let full = self.res.pims.full_actions();
        let t = &self.res.terms[i];
        let dw = self.w.dim();
        let mut out = vec![0; t.dim * dw];
        // Δ(x) = Σ c · b_a ⊗ b_b
        let mut terms: std::collections::BTreeMap<(u32, u32), Fe> = Default::default();
        for (a, &c) in x.iter().enumerate() {
            if c != 0 {
                for &(i1, i2, d) in self.hopf.comult_terms(a) {
                    let e = terms.entry((i1, i2)).or_insert(0);
                    *e = f.add(*e, f.mul(c, d));
                }
            }
        }
        let vm = Mat::from_vec(f, t.dim, dw, v.to_vec());
        for (&(i1, i2), &c) in &terms {
            if c == 0 {
                continue;
            }
            // (ρ_P(b1) ⊗ ρ_W(b2)) v  =  ρ_P(b1) V ρ_W(b2)ᵀ
            let right = vm.mul(&self.w.basis_action(i2 as usize).transpose());
            let mut left = Mat::zeros(f, t.dim, dw);
            for (j, &u) in t.gens.iter().enumerate() {
                let o = t.offsets[j];
                let d = self.res.pims.types[u].dim;
                let blk = full[u][i1 as usize].mul(&right.select_rows(&(o..o + d).collect::<Vec<_>>()));
                for r in 0..d {
                    left.row_mut(o + r).copy_from_slice(blk.row(r));
                }
            }
            f.axpy(&mut out, c, left.data());
        }
        out
    }
    fn ensure(&mut self, i: usize) -> Result<()> {
        if i < self.res.len() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("resolution not extended to degree {i}")))
        }
    }
}

/// A chain map `P_{n+i} → Q_i` lifting a cochain on `P_n` with values in
/// the module resolved by `Q`. `maps[i]` is a full matrix.
#[derive(Clone, Debug)]
pub struct ChainLift {
    pub shift: usize,
    pub maps: Vec<Mat>,
}

/// Lifts the cochain given by generator values `values[j] ∈ Q`'s module
/// (one per generator of `P_n`) to a chain map up to target degree `upto`.
pub fn lift_cochain<T: LiftTarget>(
    src: &mut Resolution,
    n: usize,
    values: &[Vec<Fe>],
    tgt: &mut T,
    upto: usize,
) -> Result<ChainLift> {
    src.extend_to(n + upto)?;
    tgt.ensure(upto)?;
    lift_cochain_in(src, n, values, tgt, upto)
}

/// As [`lift_cochain`], for resolutions already extended far enough.
pub fn lift_cochain_in<T: LiftTarget>(
    src: &Resolution,
    n: usize,
    values: &[Vec<Fe>],
    tgt: &T,
    upto: usize,
) -> Result<ChainLift> {
    let f = src.field().clone();
    let pims = src.pims().clone();
    let mut maps: Vec<Mat> = Vec::new();
    for i in 0..=upto {
        let term = src.term(n + i).clone();
        let tdim = tgt.term_dim(i);
        let mut cols = Vec::with_capacity(term.dim);
        for (j, &t) in term.gens.iter().enumerate() {
            let y = if i == 0 { values[j].clone() } else { maps[i - 1].mul_vec(&term.images[j]) };
            let x = tgt
                .solve(i, &y)
                .ok_or_else(|| Error::Internal(format!("chain map lift failed at degree {i}")))?;
            let x = tgt.act(i, &pims.elems[pims.idem[t]], &x);
            for &b in &pims.pim_basis[t] {
                cols.push(tgt.act(i, &pims.elems[b], &x));
            }
        }
        maps.push(Mat::from_cols(&f, tdim, &cols));
    }
    Ok(ChainLift { shift: n, maps })
}

/// `Hom_A(P_•, W)` in coordinates `⊕_j ε_{t_j} W`.
pub struct Cochains {
    w: ModuleRep,
    /// `ρ_W(x)` for every special element.
    w_mats: Vec<Mat>,
    /// `ε_t W` for each type.
    eps: Vec<Subspace>,
}

impl Cochains {
    pub fn new(pims: &PimData, w: &ModuleRep) -> Cochains {
        let w_mats: Vec<Mat> = pims.elems.iter().map(|x| w.act(x)).collect();
        let eps = pims
            .idem
            .iter()
            .map(|&e| Subspace::from_rows(&w_mats[e].transpose().row_space()))
            .collect();
        Cochains { w: w.clone(), w_mats, eps }
    }

    pub fn module(&self) -> &ModuleRep {
        &self.w
    }

    /// Dimension of `Hom_A(P_n, W)`.
    pub fn hom_dim(&self, res: &Resolution, n: usize) -> usize {
        res.term(n).gens.iter().map(|&t| self.eps[t].dim()).sum()
    }

    /// Converts coordinates to generator values in `W`.
    pub fn values(&self, res: &Resolution, n: usize, coords: &[Fe]) -> Vec<Vec<Fe>> {
        let f = self.w.field();
        let mut out = Vec::new();
        let mut pos = 0;
        for &t in &res.term(n).gens {
            let e = &self.eps[t];
            let mut v = vec![0; self.w.dim()];
            for (k, b) in e.basis().iter().enumerate() {
                f.axpy(&mut v, coords[pos + k], b);
            }
            pos += e.dim();
            out.push(v);
        }
        out
    }

    /// Converts generator values (each in `ε_{t_j} W`) to coordinates.
    pub fn coords(&self, res: &Resolution, n: usize, values: &[Vec<Fe>]) -> Vec<Fe> {
        let mut out = Vec::new();
        for (j, &t) in res.term(n).gens.iter().enumerate() {
            out.extend(self.eps[t].coords(&values[j]));
        }
        out
    }

    /// Coboundary `Hom(P_n, W) → Hom(P_{n+1}, W)` in coordinates.
    pub fn delta(&self, res: &Resolution, n: usize) -> Mat {
        let f = self.w.field();
        let pims = res.pims();
        let src = res.term(n);
        let dst = res.term(n + 1);
        let rows = self.hom_dim(res, n + 1);
        let cols = self.hom_dim(res, n);
        let mut m = Mat::zeros(f, rows, cols);
        let mut r0 = 0;
        for (j, &tj) in dst.gens.iter().enumerate() {
            let img = &dst.images[j];
            let ej = &self.eps[tj];
            let mut c0 = 0;
            for (i, &ti) in src.gens.iter().enumerate() {
                let ei = &self.eps[ti];
                let o = src.offsets[i];
                // ρ_W(y_ij) with y_ij the block-i component of the image
                let mut y = Mat::zeros(f, self.w.dim(), self.w.dim());
                for (b, &x) in pims.pim_basis[ti].iter().enumerate() {
                    let c = img[o + b];
                    if c != 0 {
                        y.add_scaled(c, &self.w_mats[x]);
                    }
                }
                if !y.is_zero() {
                    for (k, basis) in ei.basis().iter().enumerate() {
                        let out = ej.coords(&y.mul_vec(basis));
                        for (r, &v) in out.iter().enumerate() {
                            m.set(r0 + r, c0 + k, v);
                        }
                    }
                }
                c0 += ei.dim();
            }
            r0 += ej.dim();
        }
        m
    }

    /// Full matrix `P_n → W` of a cochain given by generator values.
    pub fn full_map(&self, res: &Resolution, n: usize, values: &[Vec<Fe>]) -> Mat {
        let pims = res.pims();
        let t = res.term(n);
        let mut cols = Vec::with_capacity(t.dim);
        for (j, &u) in t.gens.iter().enumerate() {
            for &b in &pims.pim_basis[u] {
                cols.push(self.w_mats[b].mul_vec(&values[j]));
            }
        }
        Mat::from_cols(self.w.field(), self.w.dim(), &cols)
    }
}

/// Generator values of a full `A`-linear map `P_n → W`.
pub fn values_of_map(res: &Resolution, n: usize, map: &Mat) -> Vec<Vec<Fe>> {
    (0..res.term(n).gens.len()).map(|j| map.mul_vec(&res.generator_vector(n, j))).collect()
}

/// Cohomology of `Hom(P_•, W)` up to a degree: dimensions, coboundary
/// spaces and complements of coboundaries in cocycles.
pub struct ExtData {
    pub cochains: Cochains,
    pub dims: Vec<usize>,
    /// Coboundaries in each degree (coordinates).
    pub boundaries: Vec<Subspace>,
    /// Cocycle representatives of a basis of `Ext^n`.
    pub basis: Vec<Vec<Vec<Fe>>>,
}

impl ExtData {
    pub fn compute(res: &mut Resolution, w: &ModuleRep, cap: usize) -> Result<ExtData> {
        res.extend_to(cap + 1)?;
        Self::compute_in(res, w, cap)
    }

    /// As [`ExtData::compute`], for a resolution extended past `cap`.
    pub fn compute_in(res: &Resolution, w: &ModuleRep, cap: usize) -> Result<ExtData> {
        let cochains = Cochains::new(res.pims(), w);
        let f = w.field().clone();
        let deltas: Vec<Mat> = (0..=cap).map(|n| cochains.delta(res, n)).collect();
        let mut dims = Vec::new();
        let mut boundaries = Vec::new();
        let mut basis = Vec::new();
        for n in 0..=cap {
            let hd = cochains.hom_dim(res, n);
            let cocycles = deltas[n].kernel_basis();
            let b = if n == 0 {
                Subspace::new(&f, hd)
            } else {
                Subspace::from_rows(&deltas[n - 1].transpose().row_space())
            };
            let mut span = b.clone();
            let mut reps = Vec::new();
            for r in 0..cocycles.rows() {
                let v = cocycles.row(r).to_vec();
                if span.insert(&v) {
                    reps.push(v);
                }
            }
            dims.push(reps.len());
            boundaries.push(b);
            basis.push(reps);
        }
        Ok(ExtData { cochains, dims, boundaries, basis })
    }

    /// Whether a cocycle (in coordinates) is a coboundary.
    pub fn is_zero_class(&self, n: usize, coords: &[Fe]) -> bool {
        self.boundaries[n].contains(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;
    use crate::structure::Structure;

    fn setup(name: &str) -> (HopfAlgebra, Arc<PimData>) {
        let h = builtin(name).unwrap();
        let st = Structure::compute(h.algebra(), 2).unwrap();
        let pd = Arc::new(PimData::small(h.algebra(), &st));
        (h, pd)
    }

    #[test]
    fn trivial_module_resolutions() {
        let (h, pd) = setup("kZ2xZ2@p2");
        let mut r = Resolution::new(pd, ModuleRep::trivial(&h));
        r.extend_to(5).unwrap();
        r.check().unwrap();
        let ranks: Vec<usize> = (0..=5).map(|n| r.term(n).gens.len()).collect();
        assert_eq!(ranks, vec![1, 2, 3, 4, 5, 6]);

        let (h, pd) = setup("kS3@p3");
        let mut r = Resolution::new(pd, ModuleRep::trivial(&h));
        r.extend_to(8).unwrap();
        r.check().unwrap();
        assert_eq!(r.syzygy(4).unwrap().dim(), 1);
    }

    #[test]
    fn ext_with_regular_coefficients_vanishes() {
        let (h, pd) = setup("kS3@p2");
        let mut r = Resolution::new(pd, ModuleRep::trivial(&h));
        let e = ExtData::compute(&mut r, &ModuleRep::regular(h.algebra()), 4).unwrap();
        assert_eq!(e.dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn truncated_poly_syzygies() {
        let (h, pd) = setup("ktt^p@p3");
        let mut r = Resolution::new(pd, ModuleRep::trivial(&h));
        r.extend_to(4).unwrap();
        let dims: Vec<usize> = (1..=4).map(|n| r.syzygy(n).unwrap().dim()).collect();
        assert_eq!(dims, vec![2, 1, 2, 1]);
    }

    #[test]
    fn lifting_identity_cocycle_gives_identity() {
        let (h, pd) = setup("kZ2@p2");
        let mut r = Resolution::new(pd.clone(), ModuleRep::trivial(&h));
        let mut r2 = Resolution::new(pd, ModuleRep::trivial(&h));
        r.extend_to(4).unwrap();
        let l = lift_cochain(&mut r, 1, &[vec![1]], &mut r2, 3).unwrap();
        // H^1 generator composed with itself is nonzero in H^2
        let ext = ExtData::compute(&mut r, &ModuleRep::trivial(&h), 3).unwrap();
        let phi = ext.cochains.full_map(&r, 1, &[vec![1]]);
        let prod = phi.mul(&l.maps[1]);
        let vals = values_of_map(&r, 2, &prod);
        assert_eq!(vals, vec![vec![1]]);
    }
}
