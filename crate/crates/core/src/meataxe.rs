//! Norton-style irreducibility testing and splitting of modules.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::mat::{Mat, Subspace};
use crate::module::ModuleRep;
use crate::upoly;

const MAX_ATTEMPTS: usize = 400;

#[derive(Clone, Debug)]
pub enum Split {
    /// Absolutely irreducible.
    Irreducible,
    /// A proper nonzero submodule.
    Proper(Subspace),
}

fn random_element<R: Rng>(m: &ModuleRep, rng: &mut R) -> Mat {
    let q = m.field().order() as u32;
    let coeffs: Vec<Fe> = (0..m.actions().len()).map(|_| rng.gen_range(0..q) as Fe).collect();
    m.act(&coeffs)
}

/// Submodule annihilating the span of `w_i`-orbits under transposed actions.
fn dual_submodule(m: &ModuleRep, w: &[Fe]) -> Subspace {
    let mut s = Subspace::new(m.field(), m.dim());
    for a in m.actions() {
        s.insert(&a.vec_mul(w));
    }
    s
}

/// Splits `m` or certifies absolute irreducibility. A module that is
/// irreducible but not absolutely irreducible yields `NeedsExtension(d)`
/// where `d` is the dimension of its endomorphism field.
pub fn split<R: Rng>(m: &ModuleRep, gens: &[usize], rng: &mut R) -> Result<Split> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::Invalid("zero module has no splitting".into()));
    }
    if n == 1 {
        return Ok(Split::Irreducible);
    }
    let f = m.field().clone();
    for _ in 0..MAX_ATTEMPTS {
        let theta = random_element(m, rng);
        let cp = theta.charpoly();
        for (g, _) in upoly::factor(&f, &cp, rng) {
            let gt = theta.eval_poly(&g);
            let ker = gt.kernel_basis();
            if ker.rows() == 0 {
                continue;
            }
            let v = ker.row(0).to_vec();
            let u = m.generated(&[v]);
            if u.dim() < n {
                return Ok(Split::Proper(u));
            }
            let kt = gt.transpose().kernel_basis();
            let w = kt.row(0).to_vec();
            let ud = dual_submodule(m, &w);
            if ud.dim() < n {
                // vectors orthogonal to the dual orbit form a submodule
                let ann = ud.to_mat().kernel_basis();
                return Ok(Split::Proper(Subspace::from_rows(&ann)));
            }
            if ker.rows() == upoly::degree(&g).unwrap_or(0) {
                let end = ModuleRep::hom_space(m, m, gens).len();
                if end > 1 {
                    return Err(Error::NeedsExtension(end as u32));
                }
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::Internal(format!("irreducibility test undecided after {MAX_ATTEMPTS} attempts on a {n}-dim module")))
}

/// Composition factors (with repetition) in the order found.
pub fn composition_factors<R: Rng>(m: &ModuleRep, gens: &[usize], rng: &mut R) -> Result<Vec<ModuleRep>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match split(&x, gens, rng)? {
            Split::Irreducible => out.push(x),
            Split::Proper(u) => {
                stack.push(x.quotient(&u));
                stack.push(x.submodule(&u));
            }
        }
    }
    Ok(out)
}

/// Isomorphism test for simple modules: a nonzero homomorphism exists.
pub fn simples_isomorphic(a: &ModuleRep, b: &ModuleRep, gens: &[usize]) -> bool {
    a.dim() == b.dim() && !ModuleRep::hom_space(a, b, gens).is_empty()
}

/// Distinct simple modules among the factors, sorted canonically by
/// dimension and then by the basis-independent invariant key.
pub fn distinct_simples(factors: Vec<ModuleRep>, gens: &[usize]) -> Vec<ModuleRep> {
    let mut reps: Vec<ModuleRep> = Vec::new();
    for s in factors {
        if !reps.iter().any(|r| simples_isomorphic(r, &s, gens)) {
            reps.push(s);
        }
    }
    reps.sort_by_cached_key(|s| (s.dim(), s.invariant_key()));
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn simple_dims(name: &str) -> Vec<usize> {
        let h = builtin(name).unwrap();
        let gens = h.algebra().generators();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cf = composition_factors(&ModuleRep::regular(h.algebra()), &gens, &mut rng).unwrap();
        assert_eq!(cf.iter().map(|s| s.dim()).sum::<usize>(), h.dim());
        distinct_simples(cf, &gens).iter().map(|s| s.dim()).collect()
    }

    #[test]
    fn simple_modules_of_small_algebras() {
        assert_eq!(simple_dims("kZ4@p2"), vec![1]);
        assert_eq!(simple_dims("kS3@p2"), vec![1, 2]);
        assert_eq!(simple_dims("kS3@p3"), vec![1, 1]);
        assert_eq!(simple_dims("kZ2xZ3@q4"), vec![1, 1, 1]);
    }

    #[test]
    fn non_split_simple_requests_extension() {
        // Z/3 over F_2: the 2-dim simple has endomorphism ring F_4
        let g = crate::group::GroupTable::cyclic(3);
        let f = crate::field::Field::prime(2).unwrap();
        let h = crate::hopf::HopfAlgebra::group_algebra(&g, &f, "kZ3@p2");
        let gens = h.algebra().generators();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = composition_factors(&ModuleRep::regular(h.algebra()), &gens, &mut rng);
        assert!(matches!(r, Err(Error::NeedsExtension(2))));
    }

    #[test]
    fn restricted_sl2_simples() {
        assert_eq!(simple_dims("usl2@p3"), vec![1, 2, 3]);
    }
}
