use blockscope::algebra::Algebra;
use blockscope::blocks::BlockDecomposition;
use blockscope::cohomology::CohomologyRing;
use blockscope::hochschild::hochschild_dims;
use blockscope::hopf::{builtin, CORPUS};
use blockscope::mat::Subspace;
use blockscope::module::ModuleRep;
use blockscope::resolution::Resolution;
use blockscope::structure::Structure;
use blockscope::Fe;

const SEED: u64 = 0xB10C;

/// All elements of a subspace, when there are at most `limit` of them.
fn elements(alg: &Algebra, basis: &[Vec<Fe>], limit: usize) -> Option<Vec<Vec<Fe>>> {
    let q = alg.field().order();
    let size = q.checked_pow(basis.len() as u32).filter(|&s| s <= limit)?;
    let f = alg.field();
    Some(
        (0..size)
            .map(|mut k| {
                let mut v = vec![0; alg.dim()];
                for b in basis {
                    f.axpy(&mut v, (k % q) as Fe, b);
                    k /= q;
                }
                v
            })
            .collect(),
    )
}

#[test]
fn block_idempotents_are_orthogonal_central_and_complete() {
    for name in CORPUS {
        let h = builtin(name).unwrap();
        let alg = h.algebra();
        let st = Structure::compute(alg, SEED).unwrap();
        let d = BlockDecomposition::for_hopf(&h, &st, SEED).unwrap();
        d.check_invariants(alg).unwrap();
        let f = alg.field();
        let mut sum = vec![0; alg.dim()];
        for (i, b) in d.blocks.iter().enumerate() {
            f.axpy(&mut sum, 1, &b.idempotent);
            assert_eq!(alg.mul(&b.idempotent, &b.idempotent), b.idempotent, "{name}");
            for (j, c) in d.blocks.iter().enumerate() {
                if i != j {
                    assert!(alg.mul(&b.idempotent, &c.idempotent).iter().all(|&x| x == 0), "{name}");
                }
            }
        }
        assert_eq!(sum, alg.unit(), "{name}");
        assert_eq!(d.dims().iter().sum::<usize>(), alg.dim(), "{name}");
    }
}

#[test]
fn block_centers_are_local() {
    // the only idempotents in Z(B_i) are 0 and e_i
    for name in CORPUS {
        let h = builtin(name).unwrap();
        let alg = h.algebra();
        let st = Structure::compute(alg, SEED).unwrap();
        let d = BlockDecomposition::for_hopf(&h, &st, SEED).unwrap();
        let z = Subspace::from_rows(&alg.center());
        for b in &d.blocks {
            let zb = z.intersect(&b.space);
            let Some(all) = elements(alg, zb.basis(), 1 << 12) else { continue };
            let idem: Vec<_> = all.into_iter().filter(|v| alg.mul(v, v) == *v).collect();
            assert_eq!(idem.len(), 2, "{name}: block of dim {}", b.dim());
        }
    }
}

#[test]
fn hh0_is_the_center() {
    for name in CORPUS {
        let h = builtin(name).unwrap();
        let alg = h.algebra();
        let hh = hochschild_dims(alg, 1, SEED).unwrap();
        assert_eq!(hh.dims[0], alg.center().rows(), "{name}");
    }
}

#[test]
fn simples_times_pims_fill_the_algebra() {
    for name in CORPUS {
        let h = builtin(name).unwrap();
        let st = Structure::compute(h.algebra(), SEED).unwrap();
        let total: usize = st.simples.iter().zip(&st.pims).map(|(s, p)| s.dim() * p.dim()).sum();
        assert_eq!(total, h.dim(), "{name}");
    }
}

#[test]
fn resolutions_are_exact_and_minimal() {
    for name in ["kD8@p2", "kS3@p3", "kZ2xZ3@q4", "usl2@p3"] {
        let h = builtin(name).unwrap();
        let ring = CohomologyRing::compute(&h, 6, SEED).unwrap();
        ring.resolution().check().unwrap();
        let mut res = Resolution::new(ring.resolution().pims().clone(), ModuleRep::regular(h.algebra()));
        res.extend_to(2).unwrap();
        res.check().unwrap();
        assert_eq!(res.term(1).dim, 0, "{name}: regular module is projective");
    }
}

#[test]
fn commutative_members_have_trivial_adjoint_action() {
    use blockscope::adjoint::AdjointModule;
    for name in CORPUS {
        let h = builtin(name).unwrap();
        let ad = AdjointModule::whole(&h);
        let abelian = h.group().is_some_and(|g| g.is_abelian());
        if abelian {
            assert!(ad.module.is_trivial(&h), "{name}");
        }
    }
}
