//! Univariate polynomials over `F_q`, coefficients low-to-high, and their
//! factorization into irreducibles.

use rand::Rng;

use crate::field::{Fe, Field};

pub type Poly = Vec<Fe>;

pub fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn degree(a: &[Fe]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn is_zero(a: &[Fe]) -> bool {
    degree(a).is_none()
}

pub fn add(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    let mut r = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        r[i] = x;
    }
    f.axpy(&mut r[..b.len()], 1, b);
    trim(&mut r);
    r
}

pub fn sub(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    let mut r = vec![0; a.len().max(b.len())];
    r[..a.len()].copy_from_slice(a);
    f.axpy(&mut r[..b.len()], f.neg(1), b);
    trim(&mut r);
    r
}

pub fn mul(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    if is_zero(a) || is_zero(b) {
        return vec![];
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x != 0 {
            f.axpy(&mut r[i..i + b.len()], x, b);
        }
    }
    trim(&mut r);
    r
}

pub fn scale(f: &Field, a: &[Fe], c: Fe) -> Poly {
    let mut r = a.to_vec();
    f.scale(&mut r, c);
    trim(&mut r);
    r
}

pub fn monic(f: &Field, a: &[Fe]) -> Poly {
    match degree(a) {
        None => vec![],
        Some(d) => scale(f, &a[..=d], f.inv(a[d])),
    }
}

/// Quotient and remainder; panics if `b` is zero.
pub fn divrem(f: &Field, a: &[Fe], b: &[Fe]) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (vec![], r);
    }
    let inv = f.inv(b[db]);
    let mut q = vec![0; r.len() - db];
    while r.len() > db {
        let c = f.mul(r[r.len() - 1], inv);
        let shift = r.len() - 1 - db;
        q[shift] = c;
        f.axpy(&mut r[shift..shift + db + 1], f.neg(c), &b[..=db]);
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn rem(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    divrem(f, a, b).1
}

/// Monic gcd.
pub fn gcd(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn xgcd(f: &Field, a: &[Fe], b: &[Fe]) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Poly, Poly) = (vec![1], vec![]);
    let (mut t0, mut t1): (Poly, Poly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match degree(&r0) {
        None => (vec![], s0, t0),
        Some(d) => {
            let inv = f.inv(r0[d]);
            (scale(f, &r0, inv), scale(f, &s0, inv), scale(f, &t0, inv))
        }
    }
}

pub fn derivative(f: &Field, a: &[Fe]) -> Poly {
    let mut r: Poly = a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect();
    trim(&mut r);
    r
}

pub fn powmod(f: &Field, a: &[Fe], mut e: u128, m: &[Fe]) -> Poly {
    let mut result: Poly = rem(f, &[1], m);
    let mut base = rem(f, a, m);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(f, &mul(f, &result, &base), m);
        }
        base = rem(f, &mul(f, &base, &base), m);
        e >>= 1;
    }
    result
}

pub fn eval(f: &Field, a: &[Fe], x: Fe) -> Fe {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// `p`-th root of a polynomial whose derivative vanishes.
fn pth_root(f: &Field, a: &[Fe]) -> Poly {
    let p = f.p() as usize;
    // the Frobenius inverse on F_q is x -> x^(q/p)
    let e = (f.order() / p) as u64;
    let mut r: Poly = a.iter().step_by(p).map(|&c| f.pow(c, e)).collect();
    trim(&mut r);
    r
}

/// Squarefree factorization: pairs `(g, m)` with `a = lc · Π g^m`, each `g`
/// squarefree, monic, pairwise coprime.
pub fn squarefree(f: &Field, a: &[Fe]) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let a = monic(f, a);
    if degree(&a).unwrap_or(0) == 0 {
        return out;
    }
    let p = f.p() as usize;
    let d = derivative(f, &a);
    if is_zero(&d) {
        for (g, m) in squarefree(f, &pth_root(f, &a)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = gcd(f, &a, &d);
    let mut w = divrem(f, &a, &c).0;
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(f, &w, &c);
        let z = divrem(f, &w, &y).0;
        if degree(&z).unwrap_or(0) > 0 {
            out.push((monic(f, &z), i));
        }
        i += 1;
        w = y;
        c = divrem(f, &c, &w).0;
    }
    if degree(&c).unwrap_or(0) > 0 {
        for (g, m) in squarefree(f, &pth_root(f, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &Field, a: &[Fe]) -> Vec<(Poly, usize)> {
    let q = f.order() as u128;
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let mut h: Poly = vec![0, 1];
    let mut i = 0;
    while degree(&rest).unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = powmod(f, &h, q, &rest);
        let g = gcd(f, &rest, &sub(f, &h, &[0, 1]));
        if degree(&g).unwrap_or(0) > 0 {
            out.push((g.clone(), i));
            rest = divrem(f, &rest, &g).0;
            h = rem(f, &h, &rest);
        }
    }
    if degree(&rest).unwrap_or(0) > 0 {
        let d = degree(&rest).unwrap();
        out.push((rest, d));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a product of distinct
/// monic irreducibles of degree `d`.
fn edf<R: Rng>(f: &Field, a: &[Fe], d: usize, rng: &mut R) -> Vec<Poly> {
    let n = degree(a).unwrap();
    if n == d {
        return vec![a.to_vec()];
    }
    let q = f.order() as u128;
    loop {
        let r: Poly = (0..n).map(|_| rng.gen_range(0..q as Fe)).collect();
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let g = if f.p() == 2 {
            // trace map r + r^2 + ... + r^(2^(e d - 1))
            let k = f.degree() as usize * d;
            let mut acc = rem(f, &r, a);
            let mut t = acc.clone();
            for _ in 1..k {
                t = rem(f, &mul(f, &t, &t), a);
                acc = add(f, &acc, &t);
            }
            gcd(f, a, &acc)
        } else {
            let e = (q.pow(d as u32) - 1) / 2;
            let h = powmod(f, &r, e, a);
            gcd(f, a, &sub(f, &h, &[1]))
        };
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = divrem(f, a, &g).0;
            let mut out = edf(f, &g, d, rng);
            out.extend(edf(f, &monic(f, &other), d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients).
pub fn factor<R: Rng>(f: &Field, a: &[Fe], rng: &mut R) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree(f, a) {
        for (h, d) in ddf(f, &g) {
            for irr in edf(f, &h, d, rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|x, y| (x.0.len(), &x.0).cmp(&(y.0.len(), &y.0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn expand(f: &Field, fac: &[(Poly, usize)]) -> Poly {
        let mut r = vec![1];
        for (g, m) in fac {
            for _ in 0..*m {
                r = mul(f, &r, g);
            }
        }
        r
    }

    #[test]
    fn factor_reassembles() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = Field::with_degree(p, e).unwrap();
            for _ in 0..30 {
                let n = rng.gen_range(1..9);
                let mut a: Poly = (0..n).map(|_| rng.gen_range(0..f.order() as Fe)).collect();
                a.push(1);
                let fac = factor(&f, &a, &mut rng);
                assert_eq!(expand(&f, &fac), a);
                for (g, _) in &fac {
                    // irreducible: no proper factor by brute search of roots when degree small
                    if degree(g) == Some(1) {
                        continue;
                    }
                    assert!(f.roots(g).is_empty() || degree(g).unwrap() > 3);
                }
            }
        }
    }

    #[test]
    fn t_cubed_minus_one_over_f2() {
        let f = Field::prime(2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let fac = factor(&f, &[1, 0, 0, 1], &mut rng);
        assert_eq!(fac, vec![(vec![1, 1], 1), (vec![1, 1, 1], 1)]);
        let fac = factor(&f, &[1, 0, 1], &mut rng);
        assert_eq!(fac, vec![(vec![1, 1], 2)]);
    }

    #[test]
    fn xgcd_identity() {
        let f = Field::prime(7).unwrap();
        let a = vec![1, 2, 3, 1];
        let b = vec![5, 0, 1];
        let (g, s, t) = xgcd(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
    }
}
