//! Finite fields `F_q`, `q = p^e`, with table-driven arithmetic.
//!
//! An element is stored as a small integer: the coefficient vector of its
//! polynomial representative in base `p`, lowest degree first. Prime-field
//! elements `0..p` therefore encode as themselves.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field element encoding.
pub type Fe = u16;

/// Largest field order supported by the lookup tables.
pub const MAX_ORDER: usize = 1024;

/// Description of a finite field: characteristic, degree and modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic irreducible polynomial of degree `e` over `F_p`, low-to-high.
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.e)
    }
}

#[derive(Debug)]
struct Tables {
    spec: FieldSpec,
    q: usize,
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
}

/// A finite field with precomputed arithmetic tables. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

// polynomial helpers over the prime field, plain u32 vectors low-to-high
fn ptrim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn pmod(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    ptrim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = pinv(m[dm], p);
    while r.len() > dm {
        let c = r[r.len() - 1] * lead_inv % p;
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        ptrim(&mut r);
    }
    r
}

fn pmulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    pmod(&r, m, p)
}

fn pgcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    ptrim(&mut a);
    ptrim(&mut b);
    while !b.is_empty() {
        let r = pmod(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn pinv(a: u32, p: u32) -> u32 {
    let mut r = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// Rabin-style irreducibility test over the prime field.
pub fn is_irreducible_prime(m: &[u32], p: u32) -> bool {
    let n = m.len() - 1;
    if n == 0 || m[n] == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // x^(p^i) mod m for i = 1..=n/2 : gcd(x^(p^i) - x, m) must be 1
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=n / 2 {
        // xp = xp^p
        let mut acc = vec![1u32];
        for _ in 0..p {
            acc = pmulmod(&acc, &xp, m, p);
        }
        xp = acc;
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = pgcd(m, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible polynomial of degree `n` over `F_p` in
/// lexicographic order of the non-leading coefficients read as a base-`p`
/// integer (constant term least significant).
pub fn lex_irreducible(p: u32, n: u32) -> Option<Vec<u32>> {
    let count = (p as u64).pow(n);
    for code in 0..count {
        let mut m = Vec::with_capacity(n as usize + 1);
        let mut c = code;
        for _ in 0..n {
            m.push((c % p as u64) as u32);
            c /= p as u64;
        }
        m.push(1);
        if is_irreducible_prime(&m, p) {
            return Some(m);
        }
    }
    None
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(FieldSpec { p, e: 1, modulus: vec![0, 1] })
    }

    /// `F_{p^e}` with the lexicographically first irreducible modulus.
    pub fn with_degree(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p) || p > 31 {
            return Err(Error::Invalid(format!("unsupported characteristic {p}")));
        }
        if e == 0 {
            return Err(Error::Invalid("extension degree must be at least 1".into()));
        }
        let modulus = lex_irreducible(p, e)
            .ok_or_else(|| Error::Internal(format!("no irreducible of degree {e} over F_{p}")))?;
        Field::new(FieldSpec { p, e, modulus })
    }

    pub fn new(spec: FieldSpec) -> Result<Field> {
        let p = spec.p;
        if !is_prime(p) || p > 31 {
            return Err(Error::Invalid(format!("unsupported characteristic {p}")));
        }
        if spec.e == 0 || spec.modulus.len() != spec.e as usize + 1 || spec.modulus[spec.e as usize] != 1 {
            return Err(Error::Invalid("modulus must be monic of degree e".into()));
        }
        if spec.modulus.iter().any(|&c| c >= p) {
            return Err(Error::Invalid("modulus coefficients must be reduced mod p".into()));
        }
        if !is_irreducible_prime(&spec.modulus, p) {
            return Err(Error::Invalid(format!("modulus {:?} is reducible over F_{p}", spec.modulus)));
        }
        let q = spec.order();
        if q > MAX_ORDER {
            return Err(Error::Invalid(format!("field order {q} exceeds {MAX_ORDER}")));
        }
        let e = spec.e as usize;
        let digits = |mut a: usize| -> Vec<u32> {
            let mut v = vec![0u32; e];
            for d in v.iter_mut() {
                *d = (a % p as usize) as u32;
                a /= p as usize;
            }
            v
        };
        let encode = |v: &[u32]| -> Fe {
            let mut a = 0usize;
            for &d in v.iter().rev() {
                a = a * p as usize + d as usize;
            }
            a as Fe
        };
        let dig: Vec<Vec<u32>> = (0..q).map(digits).collect();
        let mut add = vec![0 as Fe; q * q];
        let mut mul = vec![0 as Fe; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = dig[a].iter().zip(&dig[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s);
                let mut prod = pmulmod(&dig[a], &dig[b], &spec.modulus, p);
                prod.resize(e, 0);
                mul[a * q + b] = encode(&prod);
            }
        }
        let mut neg = vec![0 as Fe; q];
        let mut inv = vec![0 as Fe; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as Fe;
                }
                if mul[a * q + b] == 1 {
                    inv[a] = b as Fe;
                }
            }
        }
        Ok(Field(Arc::new(Tables { spec, q, add, mul, neg, inv })))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }
    pub fn p(&self) -> u32 {
        self.0.spec.p
    }
    pub fn degree(&self) -> u32 {
        self.0.spec.e
    }
    pub fn order(&self) -> usize {
        self.0.q
    }
    pub fn is_binary(&self) -> bool {
        self.0.q == 2
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.0.add[a as usize * self.0.q + b as usize]
    }
    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.0.neg[b as usize])
    }
    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.0.mul[a as usize * self.0.q + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.0.neg[a as usize]
    }
    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a != 0, "inverse of zero");
        self.0.inv[a as usize]
    }
    pub fn pow(&self, a: Fe, mut n: u64) -> Fe {
        let mut r: Fe = 1;
        let mut b = a;
        while n > 0 {
            if n & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            n >>= 1;
        }
        r
    }
    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        n.rem_euclid(self.p() as i64) as Fe
    }
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.0.q as Fe
    }

    /// `dst += c * src`, elementwise.
    #[inline]
    pub fn axpy(&self, dst: &mut [Fe], c: Fe, src: &[Fe]) {
        if c == 0 {
            return;
        }
        let q = self.0.q;
        if q == 2 {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d ^= s;
            }
            return;
        }
        if self.0.spec.e == 1 {
            let p = q as u32;
            let c = c as u32;
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = ((*d as u32 + c * s as u32) % p) as Fe;
            }
            return;
        }
        let mrow = &self.0.mul[c as usize * q..(c as usize + 1) * q];
        let add = &self.0.add;
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = add[*d as usize * q + mrow[s as usize] as usize];
        }
    }

    /// `v *= c`, elementwise.
    pub fn scale(&self, v: &mut [Fe], c: Fe) {
        if c == 1 {
            return;
        }
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[Fe], b: &[Fe]) -> Fe {
        let mut s = 0;
        for (&x, &y) in a.iter().zip(b) {
            if x != 0 && y != 0 {
                s = self.add(s, self.mul(x, y));
            }
        }
        s
    }

    /// Polynomial string over the prime subfield, e.g. `t^2+2t+1`.
    pub fn format(&self, a: Fe) -> String {
        let p = self.p() as usize;
        if self.degree() == 1 {
            return a.to_string();
        }
        let mut coeffs = Vec::new();
        let mut x = a as usize;
        for _ in 0..self.degree() {
            coeffs.push(x % p);
            x /= p;
        }
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let cs = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            parts.push(match i {
                0 => cs,
                1 => format!("{cs}t"),
                _ => format!("{cs}t^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Roots of a polynomial (coefficients low-to-high) by exhaustive search.
    pub fn roots(&self, poly: &[Fe]) -> Vec<Fe> {
        self.elements()
            .filter(|&x| {
                let mut acc = 0;
                for &c in poly.iter().rev() {
                    acc = self.add(self.mul(acc, x), c);
                }
                acc == 0
            })
            .collect()
    }
}

/// An extension `F_q ⊂ F_{q^d}` together with the embedding of old scalars.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: Field,
    /// `map[a]` is the image of old element `a`.
    pub map: Vec<Fe>,
}

impl Extension {
    pub fn embed(&self, a: Fe) -> Fe {
        self.map[a as usize]
    }
    pub fn embed_slice(&self, v: &[Fe]) -> Vec<Fe> {
        v.iter().map(|&a| self.map[a as usize]).collect()
    }

    /// The `F_p`-linear embedding as an `e × (e·d)` matrix over `F_p`:
    /// row `i` holds the prime-field coordinates of the image of `t^i`.
    pub fn embedding_matrix(&self, old: &Field) -> crate::mat::Mat {
        let fp = Field::prime(old.p()).expect("prime field");
        let e_old = old.degree() as usize;
        let e_new = self.field.degree() as usize;
        let p = old.p() as usize;
        let mut m = crate::mat::Mat::zeros(&fp, e_old, e_new);
        for i in 0..e_old {
            let basis = p.pow(i as u32) as Fe;
            let mut x = self.embed(basis) as usize;
            for j in 0..e_new {
                m.set(i, j, (x % p) as Fe);
                x /= p;
            }
        }
        m
    }
}

/// Extends `f` by degree `d`, returning `F_{q^d}` and the embedding.
pub fn extend_field(f: &Field, d: u32) -> Result<Extension> {
    if d == 0 {
        return Err(Error::Invalid("extension degree must be at least 1".into()));
    }
    if d == 1 {
        return Ok(Extension { field: f.clone(), map: f.elements().collect() });
    }
    let big = Field::with_degree(f.p(), f.degree() * d)?;
    // find an image for the generator t of f: a root of f's modulus in big
    let modulus: Vec<Fe> = f.spec().modulus.iter().map(|&c| c as Fe).collect();
    let root = if f.degree() == 1 {
        0
    } else {
        *big.roots(&modulus).first().ok_or_else(|| {
            Error::Internal("modulus has no root in extension field".into())
        })?
    };
    let p = f.p() as usize;
    let mut map = Vec::with_capacity(f.order());
    for a in 0..f.order() {
        let mut x = a;
        let mut acc: Fe = 0;
        let mut power: Fe = 1;
        for _ in 0..f.degree() {
            let c = (x % p) as Fe;
            x /= p;
            acc = big.add(acc, big.mul(c, power));
            power = big.mul(power, root);
        }
        map.push(acc);
    }
    Ok(Extension { field: big, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn f4_modulus_is_t2_t_1() {
        let ext = extend_field(&Field::prime(2).unwrap(), 2).unwrap();
        assert_eq!(ext.field.spec().modulus, vec![1, 1, 1]);
        assert_eq!(ext.field.order(), 4);
    }

    #[test]
    fn degree_one_extension_is_identity() {
        let f = Field::with_degree(3, 2).unwrap();
        let ext = extend_field(&f, 1).unwrap();
        assert_eq!(ext.field, f);
        assert!(ext.map.iter().enumerate().all(|(i, &x)| i as Fe == x));
    }

    #[test]
    fn x2_plus_1_splits_over_f9() {
        let ext = extend_field(&Field::prime(3).unwrap(), 2).unwrap();
        let f9 = &ext.field;
        assert_eq!(f9.order(), 9);
        // x^2 + 1, found by exhaustive root search
        let roots = f9.roots(&[1, 0, 1]);
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert_eq!(f9.add(f9.mul(r, r), 1), 0);
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        let spec = FieldSpec { p: 2, e: 2, modulus: vec![1, 0, 1] };
        assert!(Field::new(spec).is_err());
    }

    #[test]
    fn embedding_is_a_ring_map() {
        for (p, e, d) in [(2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 2, 2), (5, 1, 2)] {
            let f = Field::with_degree(p, e).unwrap();
            let ext = extend_field(&f, d).unwrap();
            let g = &ext.field;
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(ext.embed(f.mul(a, b)), g.mul(ext.embed(a), ext.embed(b)));
                    assert_eq!(ext.embed(f.add(a, b)), g.add(ext.embed(a), ext.embed(b)));
                }
            }
        }
    }

    #[test]
    fn embedding_matrix_shape() {
        let f = Field::with_degree(2, 2).unwrap();
        let ext = extend_field(&f, 2).unwrap();
        let m = ext.embedding_matrix(&f);
        assert_eq!((m.rows(), m.cols()), (2, 4));
        assert_eq!(m.get(0, 0), 1);
    }

    #[test]
    fn format_extension_elements() {
        let f = Field::with_degree(3, 2).unwrap();
        assert_eq!(f.format(0), "0");
        assert_eq!(f.format(3), "t");
        assert_eq!(f.format(7), "2t+1");
    }

    fn fields() -> Vec<Field> {
        vec![
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::prime(31).unwrap(),
            Field::with_degree(2, 3).unwrap(),
            Field::with_degree(3, 2).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms(fi in 0usize..5, a in 0u16..1024, b in 0u16..1024, c in 0u16..1024) {
            let f = &fields()[fi];
            let q = f.order() as u16;
            let (a, b, c) = (a % q, b % q, c % q);
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }
}
