//! Central idempotents, block decomposition and the local principal block
//! structure of group algebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::group::GroupTable;
use crate::hopf::HopfAlgebra;
use crate::mat::{Mat, Subspace};
use crate::module::ModuleRep;
use crate::structure::Structure;
use crate::upoly;

#[derive(Clone, Debug)]
pub struct Block {
    pub idempotent: Vec<Fe>,
    /// `A e` as a subspace of `A`.
    pub space: Subspace,
    /// Simple types (indices into `Structure::simples`) lying in the block.
    pub simples: Vec<usize>,
}

impl Block {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The block as an algebra with unit `e`, in the echelon basis of `space`.
    pub fn algebra(&self, alg: &Algebra, prefix: &str) -> Result<Algebra> {
        alg.restrict_to(&self.space, &self.idempotent, prefix)
    }
}

/// One step of the splitting tree kept as a primitivity certificate.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SplitStep {
    pub block_dim: usize,
    pub central_element: usize,
    pub factor_degrees: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Index of the block containing the trivial module (always 0 after
    /// canonical ordering when a counit is supplied).
    pub principal: usize,
    pub certificate: Vec<SplitStep>,
}

/// Matrix of left multiplication by `z` on the subspace `b` (assumed
/// stable), in the echelon basis of `b`.
fn restricted_left(alg: &Algebra, z: &[Fe], b: &Subspace) -> Mat {
    let cols: Vec<Vec<Fe>> = b.basis().iter().map(|v| b.coords(&alg.mul(z, v))).collect();
    Mat::from_cols(alg.field(), b.dim(), &cols)
}

fn ideal_of(alg: &Algebra, e: &[Fe]) -> Subspace {
    let mut s = Subspace::new(alg.field(), alg.dim());
    for i in 0..alg.dim() {
        s.insert(&alg.mul(&alg.basis(i), e));
    }
    s
}

/// Splits `e` using the characteristic polynomial of a central element;
/// returns `None` when the polynomial has a single irreducible factor.
fn split_with<R: rand::Rng>(
    alg: &Algebra,
    e: &[Fe],
    z: &[Fe],
    rng: &mut R,
) -> Result<Option<(Vec<Vec<Fe>>, Vec<usize>)>> {
    let f = alg.field();
    let b = ideal_of(alg, e);
    let ze = alg.mul(z, e);
    let cp = restricted_left(alg, &ze, &b).charpoly();
    let factors = upoly::factor(f, &cp, rng);
    let degrees: Vec<usize> = factors.iter().map(|(g, _)| upoly::degree(g).unwrap()).collect();
    if factors.len() == 1 {
        if degrees[0] > 1 {
            return Err(Error::NeedsExtension(degrees[0] as u32));
        }
        return Ok(None);
    }
    let powers: Vec<upoly::Poly> = factors
        .iter()
        .map(|(g, m)| {
            let mut acc = vec![1];
            for _ in 0..*m {
                acc = upoly::mul(f, &acc, g);
            }
            acc
        })
        .collect();
    let mut pieces = Vec::new();
    for (i, h) in powers.iter().enumerate() {
        let mut rest = vec![1];
        for (j, o) in powers.iter().enumerate() {
            if j != i {
                rest = upoly::mul(f, &rest, o);
            }
        }
        // u ≡ 1 mod h, u ≡ 0 mod rest
        let (g, _s, t) = upoly::xgcd(f, h, &rest);
        debug_assert_eq!(g, vec![1]);
        let u = upoly::mul(f, &t, &rest);
        let val = alg.eval_poly(&u, &ze);
        pieces.push(alg.mul(&val, e));
    }
    Ok(Some((pieces, degrees)))
}

fn is_idempotent(alg: &Algebra, e: &[Fe]) -> bool {
    alg.mul(e, e) == e
}

impl BlockDecomposition {
    /// Finest central idempotent decomposition over the current field.
    /// Signals `NeedsExtension` when the center does not split.
    pub fn compute(alg: &Algebra, counit: Option<&[Fe]>, structure: &Structure, seed: u64) -> Result<Self> {
        let center = alg.center();
        let zs: Vec<Vec<Fe>> = center.row_vecs();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut done: Vec<Vec<Fe>> = Vec::new();
        let mut work = vec![alg.unit().to_vec()];
        let mut certificate = Vec::new();
        'outer: while let Some(e) = work.pop() {
            for (k, z) in zs.iter().enumerate() {
                if let Some((pieces, degrees)) = split_with(alg, &e, z, &mut rng)? {
                    certificate.push(SplitStep {
                        block_dim: ideal_of(alg, &e).dim(),
                        central_element: k,
                        factor_degrees: degrees,
                    });
                    for p in &pieces {
                        if !is_idempotent(alg, p) {
                            return Err(Error::Internal("CRT projection is not idempotent".into()));
                        }
                    }
                    work.extend(pieces);
                    continue 'outer;
                }
            }
            done.push(e);
        }
        let mut blocks: Vec<Block> = done
            .into_iter()
            .map(|e| {
                let space = ideal_of(alg, &e);
                let simples = structure
                    .simples
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.act(&e) == Mat::identity(alg.field(), s.dim()))
                    .map(|(t, _)| t)
                    .collect();
                Block { idempotent: e, space, simples }
            })
            .collect();
        let principal_of = |b: &Block| match counit {
            Some(c) => alg.field().dot(c, &b.idempotent) == 1,
            None => false,
        };
        blocks.sort_by(|a, b| {
            (!principal_of(a), a.dim(), &a.idempotent).cmp(&(!principal_of(b), b.dim(), &b.idempotent))
        });
        let d = BlockDecomposition { blocks, principal: 0, certificate };
        d.check_invariants(alg)?;
        Ok(d)
    }

    pub fn for_hopf(h: &HopfAlgebra, structure: &Structure, seed: u64) -> Result<Self> {
        Self::compute(h.algebra(), Some(h.counit()), structure, seed)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.dim()).collect()
    }

    /// Orthogonality, centrality, completeness and dimension count.
    pub fn check_invariants(&self, alg: &Algebra) -> Result<()> {
        let mut sum = alg.zero();
        for (i, b) in self.blocks.iter().enumerate() {
            let e = &b.idempotent;
            if !is_idempotent(alg, e) {
                return Err(Error::Internal(format!("block {i}: idempotent fails e² = e")));
            }
            for j in 0..alg.dim() {
                let x = alg.basis(j);
                if alg.mul(e, &x) != alg.mul(&x, e) {
                    return Err(Error::Internal(format!("block {i}: idempotent not central")));
                }
            }
            for (k, c) in self.blocks.iter().enumerate() {
                if k != i && alg.mul(e, &c.idempotent).iter().any(|&v| v != 0) {
                    return Err(Error::Internal(format!("blocks {i} and {k} not orthogonal")));
                }
            }
            sum = alg.add(&sum, e);
        }
        if sum != alg.unit() {
            return Err(Error::Internal("block idempotents do not sum to 1".into()));
        }
        if self.blocks.iter().map(|b| b.dim()).sum::<usize>() != alg.dim() {
            return Err(Error::Internal("block dimensions do not add up".into()));
        }
        Ok(())
    }

    pub fn lies_in_block(&self, m: &ModuleRep, i: usize) -> bool {
        m.act(&self.blocks[i].idempotent) == Mat::identity(m.field(), m.dim())
    }

    /// Sum of the non-principal blocks.
    pub fn nonprincipal_space(&self) -> Subspace {
        let mut s = Subspace::new(self.blocks[0].space.field(), self.blocks[0].space.ambient());
        for (i, b) in self.blocks.iter().enumerate() {
            if i != self.principal {
                s = s.sum(&b.space);
            }
        }
        s
    }
}

/// Semisimplicity: a nondegenerate trace form suffices; otherwise the
/// radical is computed.
pub fn is_linearly_reductive(alg: &Algebra, seed: u64) -> Result<bool> {
    let n = alg.dim();
    let f = alg.field();
    let left = alg.left_basis();
    let mut gram = Mat::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let p = alg.product_dense(i, j);
            let mut tr = 0;
            for (k, &c) in p.iter().enumerate() {
                if c != 0 {
                    let mk = &left[k];
                    let t = (0..n).fold(0, |acc, d| f.add(acc, mk.get(d, d)));
                    tr = f.add(tr, f.mul(c, t));
                }
            }
            gram.set(i, j, tr);
        }
    }
    if gram.rank() == n {
        return Ok(true);
    }
    Ok(Structure::compute(alg, seed)?.is_semisimple())
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalBlockReport {
    pub normal_subgroup: Vec<usize>,
    pub normal_subgroup_names: Vec<String>,
    pub quotient_order: usize,
    pub quotient_unipotent: bool,
    pub kn_semisimple: bool,
    pub iso_check: bool,
    pub augmentation_in_nonprincipal: bool,
    pub principal_dim: usize,
}

impl LocalBlockReport {
    pub fn passed(&self) -> bool {
        self.quotient_unipotent
            && self.kn_semisimple
            && self.iso_check
            && self.augmentation_in_nonprincipal
            && self.principal_dim == self.quotient_order
    }
}

/// Checks that the principal block is isomorphic to `k(G/N)` for `N` the
/// largest normal subgroup of order prime to `p`.
pub fn local_principal_structure(
    g: &GroupTable,
    h: &HopfAlgebra,
    structure: &Structure,
    d: &BlockDecomposition,
    seed: u64,
) -> Result<LocalBlockReport> {
    let alg = h.algebra();
    let f = h.field();
    let p = f.p() as usize;
    let b0 = &d.blocks[d.principal];
    if b0.simples.len() != 1 || structure.simples[b0.simples[0]].dim() != 1 {
        return Err(Error::Precondition("principal block is not local".into()));
    }
    let n = g.largest_normal_p_prime(p);
    // kN as a subalgebra
    let mut kn_space = Subspace::new(f, alg.dim());
    for &x in &n {
        kn_space.insert(&alg.basis(x));
    }
    let kn = alg.restrict_to(&kn_space, alg.unit(), "n")?;
    let kn_semisimple = is_linearly_reductive(&kn, seed)?;
    let (q, coset_of) = g.quotient(&n)?;
    let quotient_unipotent = q.is_p_group(p);
    // projection kG → k(G/N)
    let mut pi = Mat::zeros(f, q.order(), alg.dim());
    for (x, &c) in coset_of.iter().enumerate() {
        pi.set(c, x, 1);
    }
    let b0_basis = b0.space.basis();
    let images: Vec<Vec<Fe>> = b0_basis.iter().map(|v| pi.mul_vec(v)).collect();
    let bijective = b0.dim() == q.order() && Mat::from_rows(f, q.order(), &images).rank() == q.order();
    let qa = HopfAlgebra::group_algebra(&q, f, "quotient");
    let qalg = qa.algebra();
    let mut multiplicative = pi.mul_vec(&b0.idempotent) == qalg.unit();
    'pairs: for a in b0_basis {
        for b in b0_basis {
            if pi.mul_vec(&alg.mul(a, b)) != qalg.mul(&pi.mul_vec(a), &pi.mul_vec(b)) {
                multiplicative = false;
                break 'pairs;
            }
        }
    }
    let nonprincipal = d.nonprincipal_space();
    let one = g.identity();
    let augmentation_in_nonprincipal = n.iter().all(|&x| {
        let mut v = alg.basis(x);
        v[one] = f.sub(v[one], 1);
        nonprincipal.contains(&v)
    });
    Ok(LocalBlockReport {
        normal_subgroup: n.clone(),
        normal_subgroup_names: n.iter().map(|&x| g.names()[x].clone()).collect(),
        quotient_order: q.order(),
        quotient_unipotent,
        kn_semisimple,
        iso_check: bijective && multiplicative,
        augmentation_in_nonprincipal,
        principal_dim: b0.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    fn decompose(name: &str) -> (HopfAlgebra, Structure, BlockDecomposition) {
        let h = builtin(name).unwrap();
        let st = Structure::compute(h.algebra(), 5).unwrap();
        let d = BlockDecomposition::for_hopf(&h, &st, 5).unwrap();
        (h, st, d)
    }

    #[test]
    fn block_dimensions() {
        assert_eq!(decompose("kS3@p2").2.dims(), vec![2, 4]);
        assert_eq!(decompose("kS3@p3").2.dims(), vec![6]);
        assert_eq!(decompose("kZ4@p2").2.dims(), vec![4]);
        assert_eq!(decompose("kZ2xZ3@q4").2.dims(), vec![2, 2, 2]);
        assert_eq!(decompose("usl2@p3").2.dims(), vec![18, 9]);
    }

    #[test]
    fn principal_block_holds_trivial_module() {
        let (h, _, d) = decompose("kS3@p2");
        let k = ModuleRep::trivial(&h);
        assert!(d.lies_in_block(&k, 0));
        assert!(!d.lies_in_block(&k, 1));
    }

    #[test]
    fn linear_reductivity() {
        let z3 = HopfAlgebra::group_algebra(&GroupTable::cyclic(3), &crate::Field::prime(2).unwrap(), "z3");
        assert!(is_linearly_reductive(z3.algebra(), 0).unwrap());
        assert!(!is_linearly_reductive(builtin("kZ2@p2").unwrap().algebra(), 0).unwrap());
    }

    #[test]
    fn local_principal_block_of_s3() {
        let (h, st, d) = decompose("kS3@p2");
        let r = local_principal_structure(h.group().unwrap(), &h, &st, &d, 0).unwrap();
        assert_eq!(r.normal_subgroup.len(), 3);
        assert!(r.passed(), "{r:?}");
    }
}
