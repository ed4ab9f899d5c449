//! The cohomology ring `H^•(G,k)` presented up to a degree cap, and the
//! cup-product action of its polynomial model on `H^*(G,W)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::hopf::HopfAlgebra;
use crate::mat::{Mat, Subspace};
use crate::module::ModuleRep;
use crate::mpoly::{Ctx, Mono, Poly, PolyRing};
use crate::pims::PimData;
use crate::resolution::{lift_cochain_in, Cochains, ExtData, Resolution};
use crate::structure::Structure;

#[derive(Clone, Debug, Serialize)]
pub struct Generator {
    pub degree: usize,
    /// Coordinates in `H^degree(G,k)`.
    pub coords: Vec<Fe>,
}

/// Monomial key independent of the number of variables: the exponent
/// vector with trailing zeros removed.
fn key(m: &[u16]) -> Vec<u16> {
    let mut v = m.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pad(m: &[u16], n: usize) -> Mono {
    let mut v = m.to_vec();
    v.resize(n, 0);
    v
}

pub struct CohomologyRing {
    hopf: HopfAlgebra,
    structure: Arc<Structure>,
    res: Resolution,
    trivial: Cochains,
    pub cap: usize,
    /// Only even degrees enter the ring (odd characteristic).
    pub even_only: bool,
    /// `dim H^n(G,k)` for `n ≤ cap` (all degrees).
    pub piece_dims: Vec<usize>,
    pub generators: Vec<Generator>,
    pub ring: PolyRing,
    pub relations: Vec<Poly>,
    /// Monomials of each degree in decreasing order.
    monomials: Vec<Vec<Mono>>,
    /// `eval[d]`: columns are the classes of `monomials[d]` in `H^d`.
    eval: Vec<Mat>,
    /// `lift_images[i][b][j]`: image in `P_b` of generator `j` of
    /// `P_{b + deg x_i}` under the chain map lifting `x_i`.
    lift_images: Vec<Vec<Vec<Vec<Fe>>>>,
}

impl std::fmt::Debug for CohomologyRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CohomologyRing")
            .field("cap", &self.cap)
            .field("piece_dims", &self.piece_dims)
            .field("ring", &self.ring)
            .finish()
    }
}

/// Minimal generators of the ideal whose degree-`d` pieces are given as
/// coefficient vectors over `monomials(d)`.
pub fn ideal_generators(
    ring: &PolyRing,
    field: &Field,
    pieces: &BTreeMap<usize, Vec<Vec<Fe>>>,
) -> Vec<Poly> {
    let n = ring.nvars();
    let ctx = Ctx { ring, field };
    let mut gens: Vec<(usize, Poly)> = Vec::new();
    for (&d, vecs) in pieces {
        let mons = ring.monomials(d);
        let index: BTreeMap<Vec<u16>, usize> = mons.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut span = Subspace::new(field, mons.len());
        for (e, g) in &gens {
            for q in ring.monomials(d - e) {
                let prod = ctx.mul_term(g, &q, 1);
                let mut v = vec![0; mons.len()];
                for (m, c) in &prod.terms {
                    v[index[m]] = *c;
                }
                span.insert(&v);
            }
        }
        for v in vecs {
            if span.insert(v) {
                let terms = v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (pad(&mons[i], n), c)).collect();
                gens.push((d, ctx.normalize(Poly { terms })));
            }
        }
    }
    gens.into_iter().map(|(_, p)| p).collect()
}

impl CohomologyRing {
    pub fn compute(h: &HopfAlgebra, cap: usize, seed: u64) -> Result<CohomologyRing> {
        let st = Arc::new(Structure::compute(h.algebra(), seed)?);
        Self::with_structure(h, st, cap)
    }

    pub fn with_structure(h: &HopfAlgebra, st: Arc<Structure>, cap: usize) -> Result<CohomologyRing> {
        if cap < 2 {
            return Err(Error::Precondition("cohomology ring needs cap ≥ 2".into()));
        }
        let f = h.field().clone();
        let pims = Arc::new(PimData::small(h.algebra(), &st));
        let k = ModuleRep::trivial(h);
        let mut res = Resolution::new(pims.clone(), k.clone());
        res.extend_to(cap + 1)?;
        let trivial = Cochains::new(&pims, &k);
        let piece_dims: Vec<usize> = (0..=cap).map(|n| trivial.hom_dim(&res, n)).collect();
        let even_only = f.p() != 2;
        let step = if even_only { 2 } else { 1 };

        let mut generators: Vec<Generator> = Vec::new();
        let mut lift_images: Vec<Vec<Vec<Vec<Fe>>>> = Vec::new();
        let mut values: BTreeMap<Vec<u16>, Vec<Fe>> = BTreeMap::new();
        values.insert(Vec::new(), vec![1]);
        let mut rel_pieces: BTreeMap<usize, Vec<Vec<Fe>>> = BTreeMap::new();
        let mut d = step;
        while d <= cap {
            let hd = piece_dims[d];
            let weights: Vec<usize> = generators.iter().map(|g| g.degree).collect();
            let ring = PolyRing::new(weights.iter().enumerate().map(|(i, _)| format!("v{i}")).collect(), weights);
            // products of existing generators
            let mut span = Subspace::new(&f, hd);
            for m in ring.monomials(d) {
                let i = m.iter().position(|&e| e > 0).expect("positive degree monomial");
                let mut rest = m.clone();
                rest[i] -= 1;
                let w = generators[i].degree;
                let prev = &values[&key(&rest)];
                let vals = trivial.values(&res, d - w, prev);
                let full = trivial.full_map(&res, d - w, &vals);
                let out: Vec<Vec<Fe>> = lift_images[i][d - w].iter().map(|y| full.mul_vec(y)).collect();
                let c = trivial.coords(&res, d, &out);
                span.insert(&c);
                values.insert(key(&m), c);
            }
            // new indecomposables
            for j in 0..hd {
                let mut e = vec![0; hd];
                e[j] = 1;
                if span.insert(&e) {
                    let vals = trivial.values(&res, d, &e);
                    let lift = lift_cochain_in(&res, d, &vals, &res, cap - d)?;
                    let images = (0..=cap - d)
                        .map(|b| {
                            (0..res.term(d + b).gens.len())
                                .map(|g| lift.maps[b].mul_vec(&res.generator_vector(d + b, g)))
                                .collect()
                        })
                        .collect();
                    lift_images.push(images);
                    let mut mk = vec![0u16; generators.len() + 1];
                    mk[generators.len()] = 1;
                    values.insert(key(&mk), e.clone());
                    generators.push(Generator { degree: d, coords: e });
                }
            }
            d += step;
        }

        let weights: Vec<usize> = generators.iter().map(|g| g.degree).collect();
        let names = default_names(&weights);
        let ring = PolyRing::new(names, weights);
        let n = ring.nvars();
        let mut monomials = vec![Vec::new(); cap + 1];
        let mut eval = vec![Mat::zeros(&f, piece_dims[0], 0); cap + 1];
        for d in (0..=cap).filter(|d| d % step == 0) {
            let mons = ring.monomials(d);
            let cols: Vec<Vec<Fe>> = mons.iter().map(|m| values[&key(m)].clone()).collect();
            let m = Mat::from_cols(&f, piece_dims[d], &cols);
            if m.rank() != piece_dims[d] {
                return Err(Error::Internal(format!("monomials do not span H^{d}")));
            }
            let ker = m.kernel_basis();
            if d > 0 && ker.rows() > 0 {
                rel_pieces.insert(d, ker.row_vecs());
            }
            monomials[d] = mons.into_iter().map(|m| pad(&m, n)).collect();
            eval[d] = m;
        }
        let relations = ideal_generators(&ring, &f, &rel_pieces);
        Ok(CohomologyRing {
            hopf: h.clone(),
            structure: st,
            res,
            trivial,
            cap,
            even_only,
            piece_dims,
            generators,
            ring,
            relations,
            monomials,
            eval,
            lift_images,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }
    pub fn structure(&self) -> &Arc<Structure> {
        &self.structure
    }
    pub fn field(&self) -> &Field {
        self.hopf.field()
    }
    pub fn resolution(&self) -> &Resolution {
        &self.res
    }
    pub fn ctx(&self) -> Ctx<'_> {
        Ctx { ring: &self.ring, field: self.hopf.field() }
    }

    /// Degrees that belong to the ring, up to the cap.
    pub fn degrees(&self) -> Vec<usize> {
        let step = if self.even_only { 2 } else { 1 };
        (0..=self.cap).filter(|d| d % step == 0).collect()
    }

    /// Dimensions of the ring pieces (zero in odd degrees for odd `p`).
    pub fn ring_dims(&self) -> Vec<usize> {
        (0..=self.cap).map(|d| if self.even_only && d % 2 == 1 { 0 } else { self.piece_dims[d] }).collect()
    }

    pub fn monomials(&self, d: usize) -> &[Mono] {
        &self.monomials[d]
    }

    pub fn eval_matrix(&self, d: usize) -> &Mat {
        &self.eval[d]
    }

    pub fn generator_degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(|r| r.degree(&self.ring)).max().unwrap_or(0)
    }

    /// Surjectivity of evaluation and agreement of the relation ideal with
    /// the evaluation kernel, degree by degree.
    pub fn check(&self) -> Result<()> {
        let f = self.field();
        let ctx = self.ctx();
        for d in self.degrees() {
            let m = &self.eval[d];
            if m.rank() != self.piece_dims[d] {
                return Err(Error::Internal(format!("evaluation not onto in degree {d}")));
            }
            let mons = &self.monomials[d];
            let index: BTreeMap<&Mono, usize> = mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut span = Subspace::new(f, mons.len());
            for r in &self.relations {
                let e = r.degree(&self.ring).unwrap();
                if e > d {
                    continue;
                }
                for q in self.ring.monomials(d - e) {
                    let p = ctx.mul_term(r, &q, 1);
                    let mut v = vec![0; mons.len()];
                    for (mm, c) in &p.terms {
                        v[index[mm]] = *c;
                    }
                    if m.mul_vec(&v).iter().any(|&x| x != 0) {
                        return Err(Error::Internal(format!("relation does not vanish in degree {d}")));
                    }
                    span.insert(&v);
                }
            }
            if span.dim() + self.piece_dims[d] != mons.len() {
                return Err(Error::Internal(format!("relations miss part of the kernel in degree {d}")));
            }
        }
        Ok(())
    }

    /// Cochains on the resolution of `k` with coefficients in `w`.
    pub fn cochains(&self, w: &ModuleRep) -> Cochains {
        Cochains::new(self.res.pims(), w)
    }

    /// Ext data `H^n(G,W)` for `n ≤ upto` (at most the cap).
    pub fn ext(&self, w: &ModuleRep, upto: usize) -> Result<ExtData> {
        if upto > self.cap {
            return Err(Error::Precondition(format!("degree {upto} beyond the cap {}", self.cap)));
        }
        ExtData::compute_in(&self.res, w, upto)
    }

    /// Cup product of generator `i` with a cochain of degree `b`, given
    /// by generator values; returns generator values in degree `b + deg`.
    pub fn act_generator(&self, i: usize, cochains: &Cochains, b: usize, values: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
        let full = cochains.full_map(&self.res, b, values);
        self.lift_images[i][b].iter().map(|y| full.mul_vec(y)).collect()
    }

    /// Values of `m·γ` for every ring monomial `m` with `b + deg m ≤ upto`,
    /// keyed by degree of `m` and listed in `monomials(deg)` order.
    pub fn orbit(
        &self,
        cochains: &Cochains,
        b: usize,
        gamma: &[Vec<Fe>],
        upto: usize,
    ) -> BTreeMap<usize, Vec<Vec<Vec<Fe>>>> {
        let mut by_key: BTreeMap<Vec<u16>, Vec<Vec<Fe>>> = BTreeMap::new();
        by_key.insert(Vec::new(), gamma.to_vec());
        let mut out = BTreeMap::new();
        for a in self.degrees() {
            if b + a > upto {
                break;
            }
            let mut row = Vec::new();
            for m in &self.monomials[a] {
                let v = if a == 0 {
                    gamma.to_vec()
                } else {
                    let i = m.iter().position(|&e| e > 0).unwrap();
                    let mut rest = m.clone();
                    rest[i] -= 1;
                    let w = self.generators[i].degree;
                    let prev = &by_key[&key(&rest)];
                    self.act_generator(i, cochains, b + a - w, prev)
                };
                by_key.insert(key(m), v.clone());
                row.push(v);
            }
            out.insert(a, row);
        }
        out
    }

    /// Coordinates of the class of a polynomial in `H^d(G,k)`.
    pub fn evaluate(&self, p: &Poly) -> Option<(usize, Vec<Fe>)> {
        let d = p.degree(&self.ring)?;
        if !p.is_homogeneous(&self.ring) || d > self.cap {
            return None;
        }
        let f = self.field();
        let mut out = vec![0; self.piece_dims[d]];
        for (m, c) in &p.terms {
            let j = self.monomials[d].iter().position(|x| x == m)?;
            f.axpy(&mut out, *c, &self.eval[d].col(j));
        }
        Some((d, out))
    }

    /// The polynomial ring element with the given monomial coefficients.
    pub fn poly_from(&self, d: usize, coeffs: &[Fe]) -> Poly {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.monomials[d][i].clone(), c))
            .collect();
        self.ctx().normalize(Poly { terms })
    }

    /// Degree-0 cochain of a `G`-fixed vector of `W`.
    pub fn fixed_cochain(&self, cochains: &Cochains, w0: &[Fe]) -> Vec<Vec<Fe>> {
        let pims = self.res.pims();
        self.res
            .term(0)
            .gens
            .iter()
            .map(|&t| cochains.module().act_vec(&pims.elems[pims.idem[t]], w0))
            .collect()
    }

    /// The cohomology ring's generator values as cochains of `k`.
    pub fn trivial_cochains(&self) -> &Cochains {
        &self.trivial
    }

    /// `m·γ` for all monomials `m` and the values of a class `γ`, checked
    /// against coboundaries: the kernel per degree `a` of
    /// `f ↦ f·γ ∈ H^{b+a}(G,W)`, as coefficient vectors over `monomials(a)`.
    pub fn annihilating_pieces(
        &self,
        ext: &ExtData,
        gammas: &[(usize, Vec<Vec<Fe>>)],
        max_degree: usize,
        upto: usize,
    ) -> BTreeMap<usize, Vec<Vec<Fe>>> {
        let f = self.field();
        let mut out = BTreeMap::new();
        let orbits: Vec<(usize, BTreeMap<usize, Vec<Vec<Vec<Fe>>>>)> = gammas
            .iter()
            .map(|(b, g)| (*b, self.orbit(&ext.cochains, *b, g, upto)))
            .collect();
        for a in self.degrees() {
            if a == 0 || a > max_degree {
                continue;
            }
            let nm = self.monomials[a].len();
            // stack: for each γ, columns m·γ plus coboundary basis
            let mut blocks: Vec<Mat> = Vec::new();
            let mut total_extra = 0;
            for (b, orb) in &orbits {
                if b + a > upto {
                    continue;
                }
                let vals = &orb[&a];
                let cols: Vec<Vec<Fe>> = vals.iter().map(|v| ext.cochains.coords(&self.res, b + a, v)).collect();
                let hd = ext.cochains.hom_dim(&self.res, b + a);
                let bnd = &ext.boundaries[b + a];
                blocks.push(Mat::from_cols(f, hd, &cols));
                blocks.push(bnd.to_mat().transpose());
                total_extra += bnd.dim();
            }
            // solve Σ c_m (m·γ) + Σ d_k β_k = 0 for every γ simultaneously
            let rows: usize = blocks.iter().step_by(2).map(|m| m.rows()).sum();
            let mut sys = Mat::zeros(f, rows, nm + total_extra);
            let (mut r0, mut c0) = (0, nm);
            for pair in blocks.chunks(2) {
                let (mg, bm) = (&pair[0], &pair[1]);
                for r in 0..mg.rows() {
                    for c in 0..nm {
                        sys.set(r0 + r, c, mg.get(r, c));
                    }
                    for c in 0..bm.cols() {
                        sys.set(r0 + r, c0 + c, bm.get(r, c));
                    }
                }
                r0 += mg.rows();
                c0 += bm.cols();
            }
            let ker = sys.kernel_basis();
            let mut span = Subspace::new(f, nm);
            for r in 0..ker.rows() {
                span.insert(&ker.row(r)[..nm]);
            }
            if span.dim() > 0 {
                out.insert(a, span.basis().to_vec());
            }
        }
        out
    }
}

/// Variable names: the lowest generator degree uses `x, y, z`, the next
/// `w, v, u`, then `s, r, q`; anything further is `g<i>`.
fn default_names(weights: &[usize]) -> Vec<String> {
    const CLASSES: [[&str; 3]; 3] = [["x", "y", "z"], ["w", "v", "u"], ["s", "r", "q"]];
    let mut distinct: Vec<usize> = weights.to_vec();
    distinct.dedup();
    let mut used = vec![0usize; distinct.len()];
    weights
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let c = distinct.iter().position(|d| d == w).unwrap();
            let k = used[c];
            used[c] += 1;
            match CLASSES.get(c).and_then(|l| l.get(k)) {
                Some(l) => l.to_string(),
                None => format!("g{i}"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    fn ring(name: &str, cap: usize) -> CohomologyRing {
        let h = builtin(name).unwrap();
        let r = CohomologyRing::compute(&h, cap, 3).unwrap();
        r.check().unwrap();
        r
    }

    #[test]
    fn cyclic_rings() {
        let r = ring("kZ2@p2", 8);
        assert_eq!(r.piece_dims, vec![1; 9]);
        assert_eq!(r.generator_degrees(), vec![1]);
        assert!(r.relations.is_empty());
        let r = ring("kZ3@p3", 8);
        assert_eq!(r.generator_degrees(), vec![2]);
        assert!(r.relations.is_empty());
    }

    #[test]
    fn klein_four_is_polynomial() {
        let r = ring("kZ2xZ2@p2", 6);
        assert_eq!(r.piece_dims, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(r.generator_degrees(), vec![1, 1]);
        assert!(r.relations.is_empty());
    }

    #[test]
    fn dihedral_and_s3_presentations() {
        let r = ring("kD8@p2", 6);
        assert_eq!(r.generator_degrees(), vec![1, 1, 2]);
        assert_eq!(r.relations.len(), 1);
        assert_eq!(r.max_relation_degree(), 2);
        let r = ring("kS3@p3", 8);
        assert_eq!(r.generator_degrees(), vec![4]);
    }
}
