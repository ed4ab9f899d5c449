//! Multivariate polynomials over a finite field with weighted grevlex order,
//! Buchberger's algorithm, Krull dimension, radical equality and linear
//! component splitting.

use std::cmp::Ordering;

use serde::Serialize;

use crate::field::{Fe, Field};
use crate::mat::Mat;

pub type Mono = Vec<u16>;

/// A polynomial ring with weighted variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyRing {
    pub names: Vec<String>,
    pub weights: Vec<usize>,
}

impl PolyRing {
    pub fn new(names: Vec<String>, weights: Vec<usize>) -> PolyRing {
        assert_eq!(names.len(), weights.len());
        PolyRing { names, weights }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn degree(&self, m: &[u16]) -> usize {
        m.iter().zip(&self.weights).map(|(&e, &w)| e as usize * w).sum()
    }

    /// Weighted grevlex: higher degree first, ties broken by smaller
    /// exponent in the last differing variable.
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self.degree(a).cmp(&self.degree(b)) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }

    /// Monomials of weighted degree `d`, in decreasing order.
    pub fn monomials(&self, d: usize) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; self.nvars()];
        fn rec(r: &PolyRing, i: usize, left: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
            if i == r.nvars() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let w = r.weights[i];
            let mut e = 0;
            while e * w <= left {
                cur[i] = e as u16;
                rec(r, i + 1, left - e * w, cur, out);
                e += 1;
            }
            cur[i] = 0;
        }
        rec(self, 0, d, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }

    /// Extends the ring by one variable of the given weight (placed last).
    pub fn with_var(&self, name: &str, weight: usize) -> PolyRing {
        let mut r = self.clone();
        r.names.push(name.to_string());
        r.weights.push(weight);
        r
    }

    pub fn format_mono(&self, m: &[u16]) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Terms sorted in decreasing monomial order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<(Mono, Fe)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(n: usize, c: Fe) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![(vec![0; n], c)] }
        }
    }

    pub fn var(n: usize, i: usize) -> Poly {
        let mut m = vec![0; n];
        m[i] = 1;
        Poly { terms: vec![(m, 1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Mono, Fe)> {
        self.terms.first()
    }

    pub fn is_homogeneous(&self, r: &PolyRing) -> bool {
        self.terms.windows(2).all(|w| r.degree(&w[0].0) == r.degree(&w[1].0))
    }

    pub fn degree(&self, r: &PolyRing) -> Option<usize> {
        self.terms.iter().map(|(m, _)| r.degree(m)).max()
    }

    pub fn format(&self, r: &PolyRing, f: &Field) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = r.format_mono(m);
                if *c == 1 {
                    mono
                } else if mono == "1" {
                    f.format(*c)
                } else {
                    format!("{}*{}", f.format(*c), mono)
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Evaluates at a point.
    pub fn eval(&self, f: &Field, pt: &[Fe]) -> Fe {
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    v = f.mul(v, f.pow(pt[i], e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }
}

/// Arithmetic bound to a ring and field.
#[derive(Clone, Debug)]
pub struct Ctx<'a> {
    pub ring: &'a PolyRing,
    pub field: &'a Field,
}

impl Ctx<'_> {
    fn sort(&self, mut t: Vec<(Mono, Fe)>) -> Poly {
        t.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, Fe)> = Vec::with_capacity(t.len());
        for (m, c) in t {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(last.1, c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| *c != 0);
        Poly { terms: out }
    }

    pub fn normalize(&self, p: Poly) -> Poly {
        self.sort(p.terms)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut t = a.terms.clone();
        t.extend(b.terms.iter().cloned());
        self.sort(t)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let mut t = a.terms.clone();
        t.extend(b.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(*c))));
        self.sort(t)
    }

    pub fn scale(&self, a: &Poly, c: Fe) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(*x, c))).collect() }
    }

    pub fn mul_term(&self, a: &Poly, m: &[u16], c: Fe) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(n, x)| (n.iter().zip(m).map(|(p, q)| p + q).collect(), self.field.mul(*x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut t = Vec::new();
        for (m, c) in &b.terms {
            t.extend(self.mul_term(a, m, *c).terms);
        }
        self.sort(t)
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        match a.lead() {
            Some((_, c)) => self.scale(a, self.field.inv(*c)),
            None => Poly::zero(),
        }
    }

    /// Full reduction modulo a list of polynomials.
    pub fn reduce(&self, p: &Poly, basis: &[Poly]) -> Poly {
        let mut rem: Vec<(Mono, Fe)> = Vec::new();
        let mut cur = p.clone();
        while let Some((m, c)) = cur.lead().cloned() {
            let div = basis.iter().find(|g| divides(&g.lead().unwrap().0, &m));
            match div {
                Some(g) => {
                    let (gm, gc) = g.lead().unwrap();
                    let q: Mono = m.iter().zip(gm).map(|(a, b)| a - b).collect();
                    let coef = self.field.mul(c, self.field.inv(*gc));
                    cur = self.sub(&cur, &self.mul_term(g, &q, coef));
                }
                None => {
                    rem.push((m, c));
                    cur.terms.remove(0);
                }
            }
        }
        Poly { terms: rem }
    }

    fn spoly(&self, a: &Poly, b: &Poly) -> Poly {
        let (am, ac) = a.lead().unwrap();
        let (bm, bc) = b.lead().unwrap();
        let l: Mono = am.iter().zip(bm).map(|(x, y)| *x.max(y)).collect();
        let qa: Mono = l.iter().zip(am).map(|(x, y)| x - y).collect();
        let qb: Mono = l.iter().zip(bm).map(|(x, y)| x - y).collect();
        self.sub(&self.mul_term(a, &qa, self.field.inv(*ac)), &self.mul_term(b, &qb, self.field.inv(*bc)))
    }

    /// Reduced Gröbner basis (Buchberger with the coprime criterion).
    pub fn groebner(&self, gens: &[Poly]) -> Vec<Poly> {
        let mut g: Vec<Poly> = Vec::new();
        for p in gens {
            let r = self.reduce(p, &g);
            if !r.is_zero() {
                g.push(self.monic(&r));
            }
        }
        let mut pairs: Vec<(usize, usize)> =
            (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        while let Some((i, j)) = pairs.pop() {
            let (a, b) = (&g[i].lead().unwrap().0, &g[j].lead().unwrap().0);
            if a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0) {
                continue;
            }
            let s = self.spoly(&g[i], &g[j]);
            let r = self.reduce(&s, &g);
            if !r.is_zero() {
                let k = g.len();
                g.push(self.monic(&r));
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
        // inter-reduce
        let mut out: Vec<Poly> = Vec::new();
        for i in 0..g.len() {
            let li = &g[i].lead().unwrap().0;
            let redundant = g.iter().enumerate().any(|(j, h)| {
                let lj = &h.lead().unwrap().0;
                j != i && divides(lj, li) && (lj != li || j < i)
            });
            if !redundant {
                out.push(g[i].clone());
            }
        }
        let snapshot = out.clone();
        for (i, p) in out.iter_mut().enumerate() {
            let others: Vec<Poly> =
                snapshot.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            let lead = p.lead().unwrap().clone();
            let tail = Poly { terms: p.terms[1..].to_vec() };
            let mut t = self.reduce(&tail, &others).terms;
            t.insert(0, lead);
            *p = Poly { terms: t };
        }
        out.sort_by(|a, b| self.ring.cmp(&a.lead().unwrap().0, &b.lead().unwrap().0));
        out
    }

    pub fn contains_one(&self, gb: &[Poly]) -> bool {
        gb.iter().any(|p| p.lead().unwrap().0.iter().all(|&e| e == 0))
    }

    /// Krull dimension of `k[x]/I` via maximal independent sets modulo
    /// leading monomials. Returns `None` for the unit ideal.
    pub fn krull_dim(&self, gens: &[Poly]) -> Option<usize> {
        let gb = self.groebner(gens);
        if self.contains_one(&gb) {
            return None;
        }
        let n = self.ring.nvars();
        let leads: Vec<&Mono> = gb.iter().map(|p| &p.lead().unwrap().0).collect();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            // independent: no leading monomial uses only variables in the set
            let independent =
                leads.iter().all(|m| m.iter().enumerate().any(|(i, &e)| e > 0 && mask & (1 << i) == 0));
            if independent {
                best = size;
            }
        }
        Some(best)
    }

    /// `f ∈ √I` via `1 ∈ I + (1 − t f)`.
    pub fn in_radical(&self, f: &Poly, gens: &[Poly]) -> bool {
        if f.is_zero() {
            return true;
        }
        let n = self.ring.nvars();
        let ext = self.ring.with_var("_t", 1);
        let cx = Ctx { ring: &ext, field: self.field };
        let lift = |p: &Poly| {
            cx.normalize(Poly {
                terms: p
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let mut m2 = m.clone();
                        m2.push(0);
                        (m2, *c)
                    })
                    .collect(),
            })
        };
        let mut g: Vec<Poly> = gens.iter().map(lift).collect();
        let tf = cx.mul(&Poly::var(n + 1, n), &lift(f));
        g.push(cx.sub(&Poly::constant(n + 1, 1), &tf));
        let gb = cx.groebner(&g);
        cx.contains_one(&gb)
    }

    pub fn radical_contains(&self, big: &[Poly], small: &[Poly]) -> bool {
        small.iter().all(|f| self.in_radical(f, big))
    }

    pub fn radical_equal(&self, a: &[Poly], b: &[Poly]) -> bool {
        self.radical_contains(a, b) && self.radical_contains(b, a)
    }
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A prime generated by linear forms within each weight group: for each
/// weight, a row basis (in reduced echelon form) of forms in the variables
/// of that weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearPrime {
    pub forms: Vec<Vec<Fe>>,
}

impl LinearPrime {
    /// Rank of the prime (number of independent linear forms).
    pub fn codim(&self) -> usize {
        self.forms.len()
    }

    pub fn polys(&self, r: &PolyRing) -> Vec<Poly> {
        let n = r.nvars();
        self.forms
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        let mut m = vec![0; n];
                        m[i] = 1;
                        (m, c)
                    })
                    .collect::<Vec<_>>();
                let mut t = terms;
                t.sort_by(|a, b| r.cmp(&b.0, &a.0));
                Poly { terms: t }
            })
            .collect()
    }

    /// `self ⊆ other` as spans of linear forms.
    pub fn contained_in(&self, other: &LinearPrime, f: &Field, n: usize) -> bool {
        let a = Mat::from_rows(f, n, &other.forms);
        let b = a.vstack(&Mat::from_rows(f, n, &self.forms));
        b.rank() == a.rank()
    }
}

/// All subspaces of `F_q^m` as reduced echelon row bases.
fn all_subspaces(f: &Field, m: usize) -> Vec<Vec<Vec<Fe>>> {
    let q = f.order();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let pivots: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        // free positions: (row r, col c) with c > pivot r and c not a pivot
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..m).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut rows: Vec<Vec<Fe>> = pivots
                .iter()
                .map(|&p| {
                    let mut v = vec![0; m];
                    v[p] = 1;
                    v
                })
                .collect();
            let mut c = code;
            for &(r, col) in &free {
                rows[r][col] = (c % q) as Fe;
                c /= q;
            }
            out.push(rows);
        }
    }
    out
}

/// Splits `√I` as an intersection of linear primes when possible, by
/// exhaustive search (at most 4 variables). Returns `None` when no such
/// splitting exists at this field.
pub fn linear_components(ctx: &Ctx, gens: &[Poly]) -> Option<Vec<LinearPrime>> {
    let r = ctx.ring;
    let f = ctx.field;
    let n = r.nvars();
    if n > 4 {
        return None;
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, &w) in r.weights.iter().enumerate() {
        match groups.iter_mut().find(|(g, _)| *g == w) {
            Some((_, v)) => v.push(i),
            None => groups.push((w, vec![i])),
        }
    }
    let per_group: Vec<Vec<Vec<Vec<Fe>>>> = groups.iter().map(|(_, v)| all_subspaces(f, v.len())).collect();
    // every combination of one subspace per weight group
    let mut candidates: Vec<LinearPrime> = Vec::new();
    let mut idx = vec![0usize; groups.len()];
    loop {
        let mut forms = Vec::new();
        for (g, (_, vars)) in groups.iter().enumerate() {
            for row in &per_group[g][idx[g]] {
                let mut full = vec![0; n];
                for (k, &v) in vars.iter().enumerate() {
                    full[v] = row[k];
                }
                forms.push(full);
            }
        }
        let p = LinearPrime { forms };
        let pp = p.polys(r);
        let gb = ctx.groebner(&pp);
        if gens.iter().all(|g| ctx.reduce(g, &gb).is_zero()) {
            candidates.push(p);
        }
        // advance
        let mut k = 0;
        loop {
            if k == idx.len() {
                break;
            }
            idx[k] += 1;
            if idx[k] < per_group[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    let minimal: Vec<LinearPrime> = candidates
        .iter()
        .filter(|p| !candidates.iter().any(|q| q != *p && q.contained_in(p, f, n) && !p.contained_in(q, f, n)))
        .cloned()
        .collect();
    if minimal.is_empty() {
        return None;
    }
    // √I = ∩ P_i ⟺ √I = √(Π P_i)
    let mut product = vec![Poly::constant(n, 1)];
    for p in &minimal {
        let ps = p.polys(r);
        let mut next = Vec::new();
        for a in &product {
            for b in &ps {
                next.push(ctx.mul(a, b));
            }
        }
        product = next;
    }
    if ctx.radical_equal(gens, &product) {
        Some(minimal)
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    Connected,
    Disconnected,
    Unsupported,
}

/// Connectivity of `Proj` of the variety cut out by `gens`; an empty
/// `Proj` counts as connected.
pub fn proj_connected(ctx: &Ctx, gens: &[Poly]) -> (Connectivity, Option<Vec<LinearPrime>>) {
    let n = ctx.ring.nvars();
    let comps = match linear_components(ctx, gens) {
        Some(c) => c,
        None => return (Connectivity::Unsupported, None),
    };
    // components equal to the irrelevant ideal contribute no Proj points
    let relevant: Vec<&LinearPrime> = comps.iter().filter(|p| p.codim() < n).collect();
    let k = relevant.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let sum = Mat::from_rows(ctx.field, n, &relevant[i].forms)
                .vstack(&Mat::from_rows(ctx.field, n, &relevant[j].forms));
            if sum.rank() < n {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let roots: std::collections::BTreeSet<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
    let verdict = if roots.len() <= 1 { Connectivity::Connected } else { Connectivity::Disconnected };
    (verdict, Some(comps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> PolyRing {
        let names = ["x", "y", "w", "v"];
        PolyRing::new(names[..n].iter().map(|s| s.to_string()).collect(), vec![1; n])
    }

    fn mono(v: &[u16]) -> Mono {
        v.to_vec()
    }

    #[test]
    fn dimension_and_radicals() {
        let f = Field::prime(2).unwrap();
        let r = ring(2);
        let c = Ctx { ring: &r, field: &f };
        let xy = Poly { terms: vec![(mono(&[1, 1]), 1)] };
        assert_eq!(c.krull_dim(std::slice::from_ref(&xy)), Some(1));
        assert_eq!(c.krull_dim(&[]), Some(2));
        let x2 = Poly { terms: vec![(mono(&[2, 0]), 1)] };
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        assert!(c.radical_equal(&[x2], std::slice::from_ref(&x)));
        assert!(!c.radical_equal(std::slice::from_ref(&x), std::slice::from_ref(&y)));
        assert_eq!(c.krull_dim(&[x, y]), Some(0));
    }

    #[test]
    fn connectivity_examples() {
        let f = Field::prime(2).unwrap();
        let r2 = ring(2);
        let c2 = Ctx { ring: &r2, field: &f };
        let xy = Poly { terms: vec![(mono(&[1, 1]), 1)] };
        assert_eq!(proj_connected(&c2, &[xy]).0, Connectivity::Disconnected);
        assert_eq!(proj_connected(&c2, &[]).0, Connectivity::Connected);
        let r3 = ring(3);
        let c3 = Ctx { ring: &r3, field: &f };
        let xy3 = Poly { terms: vec![(mono(&[1, 1, 0]), 1)] };
        let (v, comps) = proj_connected(&c3, &[xy3]);
        assert_eq!(v, Connectivity::Connected);
        assert_eq!(comps.unwrap().len(), 2);
    }

    #[test]
    fn weighted_monomials() {
        let r = PolyRing::new(vec!["x".into(), "y".into(), "w".into()], vec![1, 1, 2]);
        assert_eq!(r.monomials(2).len(), 4);
        assert_eq!(r.monomials(3).len(), 6);
    }

    proptest! {
        #[test]
        fn dimension_is_monotone(a in prop::collection::vec((0u16..3, 0u16..3, 0u16..3), 1..4)) {
            let f = Field::prime(3).unwrap();
            let r = ring(3);
            let c = Ctx { ring: &r, field: &f };
            let mut gens = Vec::new();
            let mut last = 3usize;
            for (i, j, k) in a {
                if i + j + k == 0 { continue; }
                gens.push(Poly { terms: vec![(vec![i, j, k], 1)] });
                let d = c.krull_dim(&gens).unwrap();
                prop_assert!(d <= last);
                last = d;
            }
        }
    }
}
