//! Cocommutative Hopf algebras: constructors for the corpus and an axiom
//! checker that locates the first failing basis element or triple.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::{basis_vec, Algebra};
use crate::error::{Error, Result};
use crate::field::{Extension, Fe, Field};
use crate::group::GroupTable;
use crate::mat::Mat;

/// Sparse tensor `Σ c · b_i ⊗ b_j`.
pub type Tensor2 = Vec<(u32, u32, Fe)>;

/// How the algebra was built; the group table is kept for group algebras
/// because subgroup questions need it.
#[derive(Clone, Debug)]
pub enum Origin {
    Group(GroupTable),
    Truncated,
    Product,
    RestrictedSl2,
    Constants,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub name: String,
    alg: Algebra,
    comult: Vec<Tensor2>,
    counit: Vec<Fe>,
    antipode: Mat,
    origin: Origin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<String>,
}

fn collect(dim: usize, f: &Field, v: &[Fe]) -> Tensor2 {
    let mut out = Vec::new();
    for (idx, &c) in v.iter().enumerate() {
        if c != 0 {
            out.push(((idx / dim) as u32, (idx % dim) as u32, c));
        }
    }
    let _ = f;
    out
}

impl HopfAlgebra {
    pub fn new(
        name: &str,
        alg: Algebra,
        comult: Vec<Tensor2>,
        counit: Vec<Fe>,
        antipode: Mat,
        origin: Origin,
    ) -> HopfAlgebra {
        HopfAlgebra { name: name.to_string(), alg, comult, counit, antipode, origin }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }
    pub fn field(&self) -> &Field {
        self.alg.field()
    }
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
    pub fn origin(&self) -> &Origin {
        &self.origin
    }
    pub fn group(&self) -> Option<&GroupTable> {
        match &self.origin {
            Origin::Group(g) => Some(g),
            _ => None,
        }
    }
    pub fn comult_terms(&self, i: usize) -> &Tensor2 {
        &self.comult[i]
    }
    pub fn counit(&self) -> &[Fe] {
        &self.counit
    }
    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    /// `Δ` as a `dim² × dim` matrix (basis `b_i ⊗ b_j` at `i * dim + j`).
    pub fn comult_mat(&self) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field(), n * n, n);
        for (k, terms) in self.comult.iter().enumerate() {
            for &(i, j, c) in terms {
                m.set(i as usize * n + j as usize, k, c);
            }
        }
        m
    }

    pub fn eps(&self, a: &[Fe]) -> Fe {
        self.field().dot(&self.counit, a)
    }

    pub fn s(&self, a: &[Fe]) -> Vec<Fe> {
        self.antipode.mul_vec(a)
    }

    /// Comultiplication of an arbitrary element as a dense `dim²` vector.
    pub fn delta(&self, a: &[Fe]) -> Vec<Fe> {
        let n = self.dim();
        let f = self.field();
        let mut out = vec![0; n * n];
        for (k, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(i, j, d) in &self.comult[k] {
                let idx = i as usize * n + j as usize;
                out[idx] = f.add(out[idx], f.mul(c, d));
            }
        }
        out
    }

    pub fn group_algebra(g: &GroupTable, field: &Field, name: &str) -> HopfAlgebra {
        let n = g.order();
        let labels = g.names().to_vec();
        let alg = Algebra::from_fn(field, labels, basis_vec(n, g.identity()), |a, b| basis_vec(n, g.mul(a, b)));
        let comult = (0..n).map(|a| vec![(a as u32, a as u32, 1)]).collect();
        let counit = vec![1; n];
        let mut s = Mat::zeros(field, n, n);
        for a in 0..n {
            s.set(g.inv(a), a, 1);
        }
        HopfAlgebra::new(name, alg, comult, counit, s, Origin::Group(g.clone()))
    }

    /// `k[t]/(t^p)` with `t` primitive.
    pub fn truncated_poly(field: &Field, name: &str) -> HopfAlgebra {
        let p = field.p() as usize;
        let labels = (0..p)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        let alg = Algebra::from_fn(field, labels, basis_vec(p, 0), |i, j| {
            let mut v = vec![0; p];
            if i + j < p {
                v[i + j] = 1;
            }
            v
        });
        let mut comult = Vec::new();
        for n in 0..p {
            let mut terms = Vec::new();
            for k in 0..=n {
                let c = field.from_int(binomial(n, k) as i64);
                if c != 0 {
                    terms.push((k as u32, (n - k) as u32, c));
                }
            }
            comult.push(terms);
        }
        let counit = basis_vec(p, 0);
        let mut s = Mat::zeros(field, p, p);
        for n in 0..p {
            s.set(n, n, if n % 2 == 0 { 1 } else { field.neg(1) });
        }
        HopfAlgebra::new(name, alg, comult, counit, s, Origin::Truncated)
    }

    /// Tensor product Hopf algebra, basis `(i, j)` at `i * dim(b) + j`.
    pub fn product(a: &HopfAlgebra, b: &HopfAlgebra, name: &str) -> Result<HopfAlgebra> {
        if a.field() != b.field() {
            return Err(Error::Invalid("product of Hopf algebras over different fields".into()));
        }
        let alg = a.alg.tensor(&b.alg)?;
        let m = b.dim();
        let f = a.field();
        let mut comult = Vec::new();
        for i in 0..a.dim() {
            for j in 0..m {
                let mut terms = Vec::new();
                for &(k, l, c) in &a.comult[i] {
                    for &(r, s, d) in &b.comult[j] {
                        terms.push((k * m as u32 + r, l * m as u32 + s, f.mul(c, d)));
                    }
                }
                terms.sort();
                comult.push(terms);
            }
        }
        let counit = Mat::from_rows(f, a.dim(), std::slice::from_ref(&a.counit))
            .kron(&Mat::from_rows(f, m, std::slice::from_ref(&b.counit)))
            .row(0)
            .to_vec();
        let antipode = a.antipode.kron(&b.antipode);
        let origin = match (&a.origin, &b.origin) {
            (Origin::Group(g), Origin::Group(h)) => Origin::Group(GroupTable::product(g, h)),
            _ => Origin::Product,
        };
        Ok(HopfAlgebra::new(name, alg, comult, counit, antipode, origin))
    }

    /// The restricted enveloping algebra of `sl2` in characteristic 3, PBW
    /// basis `e^a h^b f^c` at index `9a + 3b + c`.
    pub fn restricted_sl2(field: &Field, name: &str) -> Result<HopfAlgebra> {
        if field.p() != 3 {
            return Err(Error::Unsupported(format!(
                "restricted sl2 is only built in characteristic 3, not {}",
                field.p()
            )));
        }
        let alg = sl2_algebra(field);
        let n = 27;
        let e = basis_vec(n, 9);
        let h = basis_vec(n, 3);
        let fv = basis_vec(n, 1);
        let tensor = alg.tensor(&alg)?;
        let unit2 = tensor.unit().to_vec();
        let prim = |x: &[Fe]| -> Vec<Fe> {
            // x ⊗ 1 + 1 ⊗ x
            let mut v = vec![0; n * n];
            for (i, &c) in x.iter().enumerate() {
                if c != 0 {
                    v[i * n] = field.add(v[i * n], c);
                    v[i] = field.add(v[i], c);
                }
            }
            v
        };
        let (de, dh, df) = (prim(&e), prim(&h), prim(&fv));
        let mut comult = Vec::new();
        let mut antipode = Mat::zeros(field, n, n);
        let (se, sh, sf) = (neg(field, &e), neg(field, &h), neg(field, &fv));
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let mut d = unit2.clone();
                    for _ in 0..a {
                        d = tensor.mul(&d, &de);
                    }
                    for _ in 0..b {
                        d = tensor.mul(&d, &dh);
                    }
                    for _ in 0..c {
                        d = tensor.mul(&d, &df);
                    }
                    comult.push(collect(n, field, &d));
                    // s(e^a h^b f^c) = s(f)^c s(h)^b s(e)^a
                    let mut s = alg.unit().to_vec();
                    for _ in 0..c {
                        s = alg.mul(&s, &sf);
                    }
                    for _ in 0..b {
                        s = alg.mul(&s, &sh);
                    }
                    for _ in 0..a {
                        s = alg.mul(&s, &se);
                    }
                    let idx = 9 * a + 3 * b + c;
                    for (r, &v) in s.iter().enumerate() {
                        antipode.set(r, idx, v);
                    }
                }
            }
        }
        let counit = basis_vec(n, 0);
        Ok(HopfAlgebra::new(name, alg, comult, counit, antipode, Origin::RestrictedSl2))
    }

    pub fn extend_scalars(&self, ext: &Extension) -> HopfAlgebra {
        let alg = self.alg.extend_scalars(ext);
        let comult = self
            .comult
            .iter()
            .map(|t| t.iter().map(|&(i, j, c)| (i, j, ext.embed(c))).collect())
            .collect();
        let counit = ext.embed_slice(&self.counit);
        let n = self.dim();
        let antipode = Mat::from_vec(&ext.field, n, n, ext.embed_slice(self.antipode.data()));
        HopfAlgebra::new(&self.name, alg, comult, counit, antipode, self.origin.clone())
    }

    /// Replaces the comultiplication (used to exercise the validator).
    pub fn with_comult(mut self, comult: Vec<Tensor2>) -> HopfAlgebra {
        self.comult = comult;
        self
    }

    /// Hash of field, structure constants and Hopf maps.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        let spec = self.field().spec();
        h.update(format!("p={} e={} m={:?};", spec.p, spec.e, spec.modulus).as_bytes());
        let n = self.dim();
        h.update(format!("dim={n};").as_bytes());
        for i in 0..n {
            for j in 0..n {
                for &(k, c) in self.alg.product(i, j) {
                    h.update(format!("{i},{j},{k},{c};").as_bytes());
                }
            }
        }
        h.update(format!("unit={:?};", self.alg.unit()).as_bytes());
        for (k, t) in self.comult.iter().enumerate() {
            h.update(format!("d{k}={t:?};").as_bytes());
        }
        h.update(format!("eps={:?};s={:?}", self.counit, self.antipode.data()).as_bytes());
        hex::encode(&h.finalize()[..16])
    }

    /// Checks every Hopf axiom and reports the first failure of each.
    pub fn validate(&self) -> Vec<AxiomCheck> {
        let mut out = Vec::new();
        let n = self.dim();
        let f = self.field().clone();
        let alg = &self.alg;
        let mut push = |name: &str, w: Option<String>| {
            out.push(AxiomCheck { axiom: name.to_string(), passed: w.is_none(), witness: w })
        };
        push("associativity", alg.associativity_failure().map(|t| format!("basis triple {t:?}")));
        push("unit", alg.unit_failure().map(|i| format!("basis element {i}")));

        // coassociativity
        let coassoc = (0..n).find(|&k| {
            let mut lhs = vec![0; n * n * n];
            let mut rhs = vec![0; n * n * n];
            for &(i, j, c) in &self.comult[k] {
                for &(a, b, d) in &self.comult[i as usize] {
                    let idx = (a as usize * n + b as usize) * n + j as usize;
                    lhs[idx] = f.add(lhs[idx], f.mul(c, d));
                }
                for &(a, b, d) in &self.comult[j as usize] {
                    let idx = (i as usize * n + a as usize) * n + b as usize;
                    rhs[idx] = f.add(rhs[idx], f.mul(c, d));
                }
            }
            lhs != rhs
        });
        push("coassociativity", coassoc.map(|k| format!("basis element {k}")));

        let counit_fail = (0..n).find(|&k| {
            let mut l = vec![0; n];
            let mut r = vec![0; n];
            for &(i, j, c) in &self.comult[k] {
                l[j as usize] = f.add(l[j as usize], f.mul(c, self.counit[i as usize]));
                r[i as usize] = f.add(r[i as usize], f.mul(c, self.counit[j as usize]));
            }
            let b = basis_vec(n, k);
            l != b || r != b
        });
        push("counit", counit_fail.map(|k| format!("basis element {k}")));

        let antipode_fail = (0..n).find(|&k| {
            let mut l = vec![0; n];
            let mut r = vec![0; n];
            for &(i, j, c) in &self.comult[k] {
                let si = self.antipode.col(i as usize);
                let sj = self.antipode.col(j as usize);
                f.axpy(&mut l, c, &alg.mul(&si, &alg.basis(j as usize)));
                f.axpy(&mut r, c, &alg.mul(&alg.basis(i as usize), &sj));
            }
            let mut target = alg.unit().to_vec();
            f.scale(&mut target, self.counit[k]);
            l != target || r != target
        });
        push("antipode", antipode_fail.map(|k| format!("basis element {k}")));

        let mut comult_mult = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = self.delta(&alg.product_dense(i, j));
                let mut rhs = vec![0; n * n];
                for &(a, b, c) in &self.comult[i] {
                    for &(x, y, d) in &self.comult[j] {
                        let cd = f.mul(c, d);
                        for &(u, s1) in alg.product(a as usize, x as usize) {
                            for &(v, s2) in alg.product(b as usize, y as usize) {
                                let idx = u as usize * n + v as usize;
                                rhs[idx] = f.add(rhs[idx], f.mul(cd, f.mul(s1, s2)));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    comult_mult = Some((i, j));
                    break 'outer;
                }
            }
        }
        let unit_delta = {
            let d = self.delta(alg.unit());
            let mut expect = vec![0; n * n];
            for (i, &a) in alg.unit().iter().enumerate() {
                for (j, &b) in alg.unit().iter().enumerate() {
                    expect[i * n + j] = f.mul(a, b);
                }
            }
            d == expect
        };
        push(
            "comultiplication is an algebra map",
            comult_mult.map(|t| format!("basis pair {t:?}")).or((!unit_delta).then(|| "unit".to_string())),
        );

        let mut counit_mult = None;
        'outer2: for i in 0..n {
            for j in 0..n {
                if self.eps(&alg.product_dense(i, j)) != f.mul(self.counit[i], self.counit[j]) {
                    counit_mult = Some((i, j));
                    break 'outer2;
                }
            }
        }
        let unit_eps = self.eps(alg.unit()) == 1;
        push(
            "counit is an algebra map",
            counit_mult.map(|t| format!("basis pair {t:?}")).or((!unit_eps).then(|| "unit".to_string())),
        );

        let cocomm = (0..n).find(|&k| {
            let d = self.delta(&basis_vec(n, k));
            (0..n).any(|i| (0..n).any(|j| d[i * n + j] != d[j * n + i]))
        });
        push("cocommutativity", cocomm.map(|k| format!("basis element {k}")));
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().iter().all(|c| c.passed)
    }
}

fn neg(f: &Field, v: &[Fe]) -> Vec<Fe> {
    v.iter().map(|&x| f.neg(x)).collect()
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Reduces a polynomial in `h` (low-to-high) modulo `h^3 - h`.
fn reduce_h(f: &Field, mut poly: Vec<Fe>) -> [Fe; 3] {
    for d in (3..poly.len()).rev() {
        let c = poly[d];
        if c != 0 {
            poly[d] = 0;
            poly[d - 2] = f.add(poly[d - 2], c);
        }
    }
    poly.resize(3, 0);
    [poly[0], poly[1], poly[2]]
}

/// `(h + s)^b` reduced, low-to-high.
fn shifted_h_power(f: &Field, s: Fe, b: usize) -> [Fe; 3] {
    let mut poly = vec![1];
    for _ in 0..b {
        let mut next = vec![0; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.add(next[i], f.mul(c, s));
        }
        poly = next;
    }
    reduce_h(f, poly)
}

/// The PBW multiplication table of the restricted enveloping algebra.
fn sl2_algebra(f: &Field) -> Algebra {
    let n = 27;
    let idx = |a: usize, b: usize, c: usize| 9 * a + 3 * b + c;
    // add coeff * e^a (Σ poly_b h^b) f^c into v
    let add_mono = |v: &mut Vec<Fe>, coeff: Fe, a: usize, poly: [Fe; 3], c: usize| {
        if a >= 3 || c >= 3 {
            return;
        }
        for (b, &pc) in poly.iter().enumerate() {
            let k = idx(a, b, c);
            v[k] = f.add(v[k], f.mul(coeff, pc));
        }
    };
    // right multiplication of a basis monomial by a generator
    let times_f = |x: &[Fe]| -> Vec<Fe> {
        let mut out = vec![0; n];
        for (k, &c0) in x.iter().enumerate() {
            if c0 == 0 {
                continue;
            }
            let (a, b, c) = (k / 9, (k / 3) % 3, k % 3);
            if c + 1 < 3 {
                let t = idx(a, b, c + 1);
                out[t] = f.add(out[t], c0);
            }
        }
        out
    };
    let times_h = |x: &[Fe]| -> Vec<Fe> {
        let mut out = vec![0; n];
        for (k, &c0) in x.iter().enumerate() {
            if c0 == 0 {
                continue;
            }
            let (a, b, c) = (k / 9, (k / 3) % 3, k % 3);
            // f^c h = (h + 2c) f^c, so h^b f^c h = h^b (h + 2c) f^c
            let mut poly = vec![0; b + 2];
            poly[b + 1] = 1;
            poly[b] = f.from_int(2 * c as i64);
            add_mono(&mut out, c0, a, reduce_h(f, poly), c);
        }
        out
    };
    let times_e = |x: &[Fe]| -> Vec<Fe> {
        let mut out = vec![0; n];
        for (k, &c0) in x.iter().enumerate() {
            if c0 == 0 {
                continue;
            }
            let (a, b, c) = (k / 9, (k / 3) % 3, k % 3);
            // f^c e = e f^c - c (h + c - 1) f^(c-1);  h^b e = e (h + 2)^b
            add_mono(&mut out, c0, a + 1, shifted_h_power(f, 2, b), c);
            if c > 0 {
                let mut poly = vec![0; b + 2];
                poly[b + 1] = 1;
                poly[b] = f.from_int(c as i64 - 1);
                let coeff = f.neg(f.mul(c0, f.from_int(c as i64)));
                add_mono(&mut out, coeff, a, reduce_h(f, poly), c - 1);
            }
        }
        out
    };
    let labels = (0..n)
        .map(|k| {
            let (a, b, c) = (k / 9, (k / 3) % 3, k % 3);
            let mut s = String::new();
            for (sym, e) in [("e", a), ("h", b), ("f", c)] {
                match e {
                    0 => {}
                    1 => s.push_str(sym),
                    _ => s.push_str(&format!("{sym}^{e}")),
                }
            }
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        })
        .collect();
    Algebra::from_fn(f, labels, basis_vec(n, 0), |i, j| {
        let mut x = basis_vec(n, i);
        let (a, b, c) = (j / 9, (j / 3) % 3, j % 3);
        for _ in 0..a {
            x = times_e(&x);
        }
        for _ in 0..b {
            x = times_h(&x);
        }
        for _ in 0..c {
            x = times_f(&x);
        }
        x
    })
}

/// Names of the built-in corpus, in canonical order.
pub const CORPUS: [&str; 10] = [
    "kZ2@p2",
    "kZ2xZ2@p2",
    "kZ4@p2",
    "kD8@p2",
    "kQ8@p2",
    "kS3@p2",
    "kZ3@p3",
    "kS3@p3",
    "usl2@p3",
    "kZ2xZ3@q4",
];

fn normalize_name(s: &str) -> String {
    s.chars()
        .filter(|c| !"/()[]{} _-".contains(*c))
        .map(|c| if c == '×' { 'x' } else { c })
        .collect::<String>()
        .to_lowercase()
}

/// Builds a corpus member by name. Accepts spellings such as `kS3@p2`,
/// `kZ/2@p2` or `u(sl2)@p3`, and `k[t]/(t^p)@p<p>` for truncated
/// polynomial algebras.
pub fn builtin(name: &str) -> Result<HopfAlgebra> {
    let norm = normalize_name(name);
    let (body, fld) = norm
        .split_once('@')
        .ok_or_else(|| Error::Invalid(format!("builtin name `{name}` lacks an @p<prime> suffix")))?;
    let field = match fld {
        "p2" => Field::prime(2)?,
        "p3" => Field::prime(3)?,
        "p5" => Field::prime(5)?,
        "q4" | "p2e2" => Field::with_degree(2, 2)?,
        "q9" | "p3e2" => Field::with_degree(3, 2)?,
        _ => return Err(Error::Invalid(format!("unknown field suffix `{fld}` in `{name}`"))),
    };
    let canonical = CORPUS.iter().find(|c| normalize_name(c) == norm).copied().unwrap_or(name);
    let g = match body {
        "kz2" => GroupTable::cyclic(2),
        "kz3" => GroupTable::cyclic(3),
        "kz4" => GroupTable::cyclic(4),
        "kz2xz2" => GroupTable::product(&GroupTable::cyclic(2), &GroupTable::cyclic(2)),
        "kz2xz3" | "kz6" => GroupTable::product(&GroupTable::cyclic(2), &GroupTable::cyclic(3)),
        "kd8" => GroupTable::dihedral8(),
        "kq8" => GroupTable::quaternion8(),
        "ks3" => GroupTable::symmetric3(),
        "usl2" => return HopfAlgebra::restricted_sl2(&field, canonical),
        "ktt^p" | "ktt" | "truncated" => return Ok(HopfAlgebra::truncated_poly(&field, canonical)),
        _ => return Err(Error::Invalid(format!("unknown builtin algebra `{name}`"))),
    };
    Ok(HopfAlgebra::group_algebra(&g, &field, canonical))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes_all_axioms() {
        for name in CORPUS {
            let h = builtin(name).unwrap();
            for check in h.validate() {
                assert!(check.passed, "{name}: {} fails at {:?}", check.axiom, check.witness);
            }
        }
    }

    #[test]
    fn truncated_polynomials_pass() {
        for p in [2, 3, 5] {
            let h = HopfAlgebra::truncated_poly(&Field::prime(p).unwrap(), "t");
            assert!(h.is_valid());
            assert_eq!(h.dim(), p as usize);
        }
    }

    #[test]
    fn corrupted_constant_is_located() {
        let h = builtin("kS3@p2").unwrap();
        let alg = h.algebra();
        let bad = Algebra::from_fn(h.field(), alg.labels().to_vec(), alg.unit().to_vec(), |i, j| {
            let mut v = alg.product_dense(i, j);
            if (i, j) == (3, 4) {
                v = basis_vec(6, 5);
            }
            v
        });
        let broken = HopfAlgebra::new("bad", bad, h.comult.clone(), h.counit.clone(), h.antipode.clone(), Origin::Constants);
        let checks = broken.validate();
        assert!(!checks[0].passed);
        assert!(checks[0].witness.is_some());
    }

    #[test]
    fn zero_comultiplication_breaks_counit() {
        let h = builtin("kZ2@p2").unwrap();
        let zero = h.with_comult(vec![vec![], vec![]]);
        let checks = zero.validate();
        let counit = checks.iter().find(|c| c.axiom == "counit").unwrap();
        assert!(!counit.passed);
    }

    #[test]
    fn sl2_relations() {
        let h = builtin("u(sl2)@p3").unwrap();
        let a = h.algebra();
        let e = a.basis(9);
        let hh = a.basis(3);
        let f = a.basis(1);
        assert_eq!(a.pow(&e, 3), a.zero());
        assert_eq!(a.pow(&f, 3), a.zero());
        assert_eq!(a.pow(&hh, 3), hh);
        // [e, f] = h
        assert_eq!(a.sub(&a.mul(&e, &f), &a.mul(&f, &e)), hh);
        // [h, e] = 2e
        let two_e: Vec<Fe> = e.iter().map(|&x| h.field().mul(2, x)).collect();
        assert_eq!(a.sub(&a.mul(&hh, &e), &a.mul(&e, &hh)), two_e);
    }

    #[test]
    fn product_of_group_algebras_matches_product_group() {
        let f4 = Field::with_degree(2, 2).unwrap();
        let a = HopfAlgebra::group_algebra(&GroupTable::cyclic(2), &f4, "a");
        let b = HopfAlgebra::group_algebra(&GroupTable::cyclic(3), &f4, "b");
        let p = HopfAlgebra::product(&a, &b, "p").unwrap();
        let direct = builtin("kZ2xZ3@q4").unwrap();
        assert!(p.is_valid());
        assert_eq!(p.dim(), 6);
        assert_eq!(p.fingerprint(), HopfAlgebra::new("x", direct.alg.clone(), direct.comult.clone(), direct.counit.clone(), direct.antipode.clone(), Origin::Product).fingerprint());
    }

    #[test]
    fn product_with_trivial_is_a_copy() {
        let f = Field::prime(3).unwrap();
        let a = builtin("kS3@p3").unwrap();
        let one = HopfAlgebra::group_algebra(&GroupTable::cyclic(1), &f, "1");
        let p = HopfAlgebra::product(&a, &one, "p").unwrap();
        assert!(p.is_valid());
        assert_eq!(p.dim(), 6);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(p.algebra().product(i, j), a.algebra().product(i, j));
            }
        }
    }

    #[test]
    fn group_algebra_commutative_iff_abelian() {
        for name in ["kZ2@p2", "kZ2xZ2@p2", "kZ4@p2", "kD8@p2", "kQ8@p2", "kS3@p2", "kZ3@p3", "kS3@p3"] {
            let h = builtin(name).unwrap();
            assert_eq!(h.algebra().is_commutative(), h.group().unwrap().is_abelian(), "{name}");
        }
    }

    #[test]
    fn antipode_of_s3_is_involution() {
        let h = builtin("kS3@p2").unwrap();
        let s = h.antipode();
        assert_eq!(s.mul(s), Mat::identity(h.field(), 6));
    }
}
