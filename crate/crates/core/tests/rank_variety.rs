//! For the Klein four group, the support variety of a module computed from
//! annihilators of Ext must match the rank variety: the rational points
//! `u = a(g−1) + b(h−1)` along which the module is not free.

use blockscope::cohomology::CohomologyRing;
use blockscope::hopf::{builtin, HopfAlgebra};
use blockscope::module::{jordan_type, ModuleRep};
use blockscope::pipoints::{carlson_classes, carlson_module, flat_test, induced_kernel};
use blockscope::varieties::support_ideal;
use blockscope::Fe;

const CAP: usize = 8;

/// Representatives of the projective points `(a : b)` over the field.
fn shifted_points(h: &HopfAlgebra) -> Vec<Vec<Fe>> {
    let g = h.group().unwrap();
    let e = g.identity();
    let gens: Vec<usize> = (0..g.order()).filter(|&x| x != e).take(2).collect();
    let f = h.field();
    let mut out = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            // first nonzero coordinate normalised to 1
            if !(a == 1 || (a == 0 && b == 1)) {
                continue;
            }
            let mut u = vec![0; h.dim()];
            for (&x, c) in gens.iter().zip([a, b]) {
                u[x] = f.add(u[x], c);
                u[e] = f.sub(u[e], c);
            }
            out.push(u);
        }
    }
    out
}

fn free_along(m: &ModuleRep, u: &[Fe]) -> bool {
    jordan_type(&m.act(u)).iter().all(|&b| b == 2)
}

fn check(name: &str) {
    let h = builtin(name).unwrap();
    let ring = CohomologyRing::compute(&h, CAP, 0).unwrap();
    let mut modules = vec![("k".to_string(), ModuleRep::trivial(&h))];
    for z in carlson_classes(&ring) {
        let label = format!("L({})", z.format(&ring.ring, ring.field()));
        modules.push((label, carlson_module(&ring, &z).unwrap()));
    }
    let l0 = modules[1].1.clone();
    let l1 = modules[2].1.clone();
    modules.push(("L⊗L".into(), ModuleRep::tensor_diagonal(&h, &l0, &l1)));
    let points = shifted_points(&h);
    assert_eq!(points.len(), h.field().order() + 1);
    let kernels: Vec<_> =
        points.iter().map(|u| induced_kernel(&ring, &flat_test(h.algebra(), u).unwrap()).unwrap()).collect();
    for (label, m) in &modules {
        let ideal = support_ideal(&ring, m).unwrap();
        let mut hits = 0;
        for (u, k) in points.iter().zip(&kernels) {
            let in_support = k.radical_contains(&ideal);
            assert_eq!(in_support, !free_along(m, u), "{name} {label} at {u:?}");
            hits += usize::from(in_support);
        }
        let expected = match label.as_str() {
            "k" => points.len(),
            "L⊗L" => 0,
            _ => 1,
        };
        assert_eq!(hits, expected, "{name} {label}");
    }
}

#[test]
fn klein_four_over_f2() {
    check("kZ2xZ2@p2");
}

#[test]
fn klein_four_over_f4() {
    check("kZ2xZ2@q4");
}
