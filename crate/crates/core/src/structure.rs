//! Jacobson radical, simple modules and primitive idempotents of a
//! finite-dimensional algebra.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::mat::{Mat, Solver, Subspace};
use crate::meataxe;
use crate::module::ModuleRep;

#[derive(Clone, Debug)]
pub struct Structure {
    /// Absolutely irreducible modules, one per isomorphism class.
    pub simples: Vec<ModuleRep>,
    pub radical: Subspace,
    /// Elements generating the radical as a right ideal.
    pub rad_right_gens: Vec<Vec<Fe>>,
    /// Orthogonal primitive idempotents summing to 1, tagged by simple type.
    pub decomposition: Vec<(usize, Vec<Fe>)>,
    /// One primitive idempotent per simple type.
    pub idempotents: Vec<Vec<Fe>>,
    /// `A ε_t` as subspaces of `A`.
    pub pims: Vec<Subspace>,
    pub loewy_length: usize,
}

/// Stacked simple representations: a `Σ d² × dim A` matrix.
fn simple_rep_matrix(alg: &Algebra, simples: &[ModuleRep]) -> Mat {
    let f = alg.field();
    let total: usize = simples.iter().map(|s| s.dim() * s.dim()).sum();
    let mut m = Mat::zeros(f, total, alg.dim());
    for i in 0..alg.dim() {
        let mut r = 0;
        for s in simples {
            for &v in s.basis_action(i).data() {
                m.set(r, i, v);
                r += 1;
            }
        }
    }
    m
}

/// Iterates `a ← 3a² − 2a³` until `a` is idempotent.
pub fn lift_idempotent(alg: &Algebra, a: &[Fe]) -> Result<Vec<Fe>> {
    let f = alg.field();
    let (three, two) = (f.from_int(3), f.from_int(2));
    let mut a = a.to_vec();
    for _ in 0..64 {
        let a2 = alg.mul(&a, &a);
        if a2 == a {
            return Ok(a);
        }
        let a3 = alg.mul(&a2, &a);
        let mut next = vec![0; a.len()];
        f.axpy(&mut next, three, &a2);
        f.axpy(&mut next, f.neg(two), &a3);
        a = next;
    }
    Err(Error::Internal("idempotent lifting did not converge".into()))
}

impl Structure {
    pub fn compute(alg: &Algebra, seed: u64) -> Result<Structure> {
        let f = alg.field();
        let gens = alg.generators();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let factors = meataxe::composition_factors(&ModuleRep::regular(alg), &gens, &mut rng)?;
        let simples = meataxe::distinct_simples(factors, &gens);

        let phi = simple_rep_matrix(alg, &simples);
        let radical = Subspace::from_rows(&phi.kernel_basis());
        let semisimple_dim: usize = simples.iter().map(|s| s.dim() * s.dim()).sum();
        if alg.dim() - radical.dim() != semisimple_dim {
            return Err(Error::Internal(format!(
                "dim A/J = {} but simple modules account for {}",
                alg.dim() - radical.dim(),
                semisimple_dim
            )));
        }

        // Loewy length, which also certifies nilpotency of J.
        let mut loewy_length = 1;
        let mut pw = radical.clone();
        while pw.dim() > 0 {
            let next = alg.ideal_product(&pw, &radical);
            if next.dim() == pw.dim() {
                return Err(Error::Internal("radical candidate is not nilpotent".into()));
            }
            pw = next;
            loewy_length += 1;
        }
        if radical.dim() == 0 {
            loewy_length = 1;
        }

        let rad_right_gens = right_ideal_generators(alg, &radical);

        // full orthogonal decomposition of 1
        let solver = Solver::new(&phi);
        let mut decomposition = Vec::new();
        let mut acc = alg.zero();
        let mut offset = 0;
        for (t, s) in simples.iter().enumerate() {
            let d = s.dim();
            for j in 0..d {
                let mut target = vec![0; phi.rows()];
                target[offset + j * d + j] = 1;
                let a = solver
                    .solve(&target)
                    .ok_or_else(|| Error::Internal("simple representations are not jointly surjective".into()))?;
                let c = alg.sub(alg.unit(), &acc);
                let corner = alg.mul(&alg.mul(&c, &a), &c);
                let e = lift_idempotent(alg, &corner)?;
                acc = alg.add(&acc, &e);
                decomposition.push((t, e));
            }
            offset += d * d;
        }
        if acc != alg.unit() {
            return Err(Error::Internal("primitive idempotents do not sum to 1".into()));
        }
        for (i, (_, a)) in decomposition.iter().enumerate() {
            for (j, (_, b)) in decomposition.iter().enumerate() {
                if i != j && alg.mul(a, b).iter().any(|&x| x != 0) {
                    return Err(Error::Internal("primitive idempotents are not orthogonal".into()));
                }
            }
        }
        let idempotents: Vec<Vec<Fe>> = (0..simples.len())
            .map(|t| decomposition.iter().find(|(u, _)| *u == t).unwrap().1.clone())
            .collect();
        let pims: Vec<Subspace> = idempotents
            .iter()
            .map(|e| {
                let mut s = Subspace::new(f, alg.dim());
                for i in 0..alg.dim() {
                    s.insert(&alg.mul(&alg.basis(i), e));
                }
                s
            })
            .collect();
        let total: usize = simples.iter().zip(&pims).map(|(s, p)| s.dim() * p.dim()).sum();
        if total != alg.dim() {
            return Err(Error::Internal("Σ dim S · dim P(S) differs from dim A".into()));
        }
        Ok(Structure { simples, radical, rad_right_gens, decomposition, idempotents, pims, loewy_length })
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical.dim() == 0
    }

    /// Index of the simple type isomorphic to a given simple module.
    pub fn simple_index(&self, s: &ModuleRep) -> Option<usize> {
        self.idempotents.iter().enumerate().find_map(|(t, e)| {
            (s.dim() == self.simples[t].dim() && s.act(e).rank() == 1).then_some(t)
        })
    }

    /// `J·M` as a subspace of `M`.
    pub fn radical_of_module(&self, m: &ModuleRep) -> Subspace {
        let mut s = Subspace::new(m.field(), m.dim());
        for r in &self.rad_right_gens {
            let a = m.act(r);
            // J M = Σ r_i A M = Σ r_i M
            for c in 0..m.dim() {
                s.insert(&a.col(c));
            }
        }
        s
    }

    /// Multiplicity of each simple type in the top `M / JM`.
    pub fn top_multiplicities(&self, m: &ModuleRep) -> Vec<usize> {
        let jm = self.radical_of_module(m);
        self.idempotents
            .iter()
            .map(|e| {
                let em = m.act(e);
                // ε_t (JM) ⊆ ε_t M
                let mut sub = Subspace::new(m.field(), m.dim());
                for v in jm.basis() {
                    sub.insert(&em.mul_vec(v));
                }
                em.rank() - sub.dim()
            })
            .collect()
    }

    /// Projective iff the projective cover has the same dimension.
    pub fn is_projective(&self, m: &ModuleRep) -> bool {
        let top = self.top_multiplicities(m);
        let cover: usize = top.iter().zip(&self.pims).map(|(k, p)| k * p.dim()).sum();
        cover == m.dim()
    }

    /// Composition multiplicities `[M : S_t]` via ranks of idempotent actions.
    pub fn composition_multiplicities(&self, m: &ModuleRep) -> Vec<usize> {
        self.idempotents.iter().map(|e| m.act(e).rank()).collect()
    }
}

/// Elements of `J` whose right ideals sum to `J`, taken from a complement
/// of `J²` and pruned greedily.
pub fn right_ideal_generators(alg: &Algebra, j: &Subspace) -> Vec<Vec<Fe>> {
    let j2 = alg.ideal_product(j, j);
    let mut span = j2.clone();
    let mut candidates = Vec::new();
    for v in j.basis() {
        if span.insert(v) {
            candidates.push(v.clone());
        }
    }
    let mut reached = Subspace::new(alg.field(), alg.dim());
    let mut gens = Vec::new();
    for c in candidates {
        if reached.contains(&c) {
            continue;
        }
        for i in 0..alg.dim() {
            reached.insert(&alg.mul(&c, &alg.basis(i)));
        }
        gens.push(c);
    }
    debug_assert!(reached.equals(j));
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    #[test]
    fn radical_dimensions() {
        for (name, rad, loewy) in [("kZ2@p2", 1, 2), ("kS3@p2", 1, 2), ("kS3@p3", 4, 3), ("kZ2xZ2@p2", 3, 3)] {
            let h = builtin(name).unwrap();
            let st = Structure::compute(h.algebra(), 3).unwrap();
            assert_eq!(st.radical.dim(), rad, "{name}");
            assert_eq!(st.loewy_length, loewy, "{name}");
        }
    }

    #[test]
    fn trivial_module_is_not_projective_but_regular_is() {
        let h = builtin("kS3@p2").unwrap();
        let st = Structure::compute(h.algebra(), 3).unwrap();
        assert!(!st.is_projective(&ModuleRep::trivial(&h)));
        assert!(st.is_projective(&ModuleRep::regular(h.algebra())));
        // the 2-dim simple lies in a simple block, hence is projective
        assert!(st.is_projective(&st.simples[1]));
        assert_eq!(st.simple_index(&ModuleRep::trivial(&h)), Some(0));
    }

    #[test]
    fn restricted_sl2_structure() {
        let h = builtin("usl2@p3").unwrap();
        let st = Structure::compute(h.algebra(), 3).unwrap();
        let pim_dims: Vec<usize> = st.pims.iter().map(|p| p.dim()).collect();
        assert_eq!(pim_dims, vec![6, 6, 3]);
        assert_eq!(st.decomposition.len(), 6);
    }
}
