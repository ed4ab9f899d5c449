use std::path::PathBuf;

use blockscope::blocks::BlockDecomposition;
use blockscope::hopf::{builtin, HopfAlgebra};
use blockscope::input::{load, parse_algebra};
use blockscope::module::jordan_type;
use blockscope::structure::Structure;
use blockscope::{Error, Fe};

fn shipped(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras").join(name)
}

/// Sorted `(Jordan type of L_x, ε(x))` over every element `x`: unchanged by
/// any basis change that is a Hopf isomorphism.
fn regular_fingerprint(h: &HopfAlgebra) -> Vec<(Vec<usize>, Fe)> {
    let alg = h.algebra();
    let q = alg.field().order();
    let n = alg.dim();
    let mut out: Vec<_> = (0..q.pow(n as u32))
        .map(|mut k| {
            let x: Vec<Fe> = (0..n)
                .map(|_| {
                    let c = (k % q) as Fe;
                    k /= q;
                    c
                })
                .collect();
            let l = alg.left_mat(&x);
            (jordan_type(&l), h.eps(&x))
        })
        .collect();
    out.sort();
    out
}

#[test]
fn truncated_polynomial_matches_builtin() {
    let parsed = load(&shipped("truncated-t3.alg")).unwrap();
    let b = builtin("k[t]/(t^p)@p3").unwrap();
    assert_eq!(parsed.fingerprint(), b.fingerprint());
    assert_eq!(regular_fingerprint(&parsed), regular_fingerprint(&b));
}

#[test]
fn relabelled_basis_is_isomorphic() {
    // basis t^2, 1, t
    let text = "p=3 e=1\nkind=constants\ndim=3\nunit=0 1 0\nmul:\n\
        1 1 : 1=1\n1 2 : 2=1\n1 0 : 0=1\n2 1 : 2=1\n0 1 : 0=1\n2 2 : 0=1\n\
        comult:\n1 : 1,1=1\n2 : 1,2=1 2,1=1\n0 : 1,0=1 2,2=2 0,1=1\n\
        counit=0 1 0\nantipode:\n1 : 1=1\n2 : 2=2\n0 : 0=1\n";
    let parsed = parse_algebra(text, "relabelled").unwrap();
    let b = builtin("k[t]/(t^p)@p3").unwrap();
    assert_ne!(parsed.fingerprint(), b.fingerprint());
    assert_eq!(regular_fingerprint(&parsed), regular_fingerprint(&b));
}

#[test]
fn shipped_group_and_builtin_files() {
    let s3 = load(&shipped("s3-mod2.alg")).unwrap();
    let st = Structure::compute(s3.algebra(), 0).unwrap();
    let mut dims = BlockDecomposition::for_hopf(&s3, &st, 0).unwrap().dims();
    dims.sort();
    assert_eq!(dims, vec![2, 4]);
    assert!(!s3.group().unwrap().is_abelian());

    let v4 = load(&shipped("klein-four-q4.alg")).unwrap();
    assert_eq!(v4.fingerprint(), builtin("kZ2xZ2@q4").unwrap().fingerprint());
}

#[test]
fn corrupted_cayley_row_names_the_triple() {
    let text = std::fs::read_to_string(shipped("s3-mod2.alg")).unwrap();
    // swap two entries of the row for r
    let bad = text.replace("1 2 0 5 3 4", "1 2 0 3 5 4");
    match parse_algebra(&bad, "bad") {
        Err(Error::Axiom { axiom, witness }) => {
            assert!(axiom.contains("group"), "{axiom}");
            assert!(witness.starts_with('('), "{witness}");
        }
        other => panic!("expected a group-law rejection, got {other:?}"),
    }
}

#[test]
fn broken_antipode_is_rejected_by_axiom() {
    let text = std::fs::read_to_string(shipped("truncated-t3.alg")).unwrap();
    let bad = text.replace("1 : 1=-1", "1 : 1=1");
    match parse_algebra(&bad, "bad") {
        Err(Error::Axiom { axiom, .. }) => assert!(axiom.contains("antipode"), "{axiom}"),
        other => panic!("expected an antipode failure, got {other:?}"),
    }
}

#[test]
fn parse_errors_report_lines() {
    let cases = [
        ("", 1),
        ("p=2\nkind=group\norder=2\ntable:\n0 1\n1 x\n", 6),
        ("p=2\nkind=group\norder=2\norder=2\n", 4),
        ("p=2\nkind=constants\ndim=1\nunit=1\ncounit=1\nmul:\n0 0 : 0=1\ncomult:\n0 : 0,0=1\nantipode:\n0 : 5=1\n", 11),
        ("p=2\n0 1\n", 2),
    ];
    for (text, line) in cases {
        match parse_algebra(text, "x") {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: expected parse error, got {other:?}"),
        }
    }
}
