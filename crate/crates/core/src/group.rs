//! Finite groups given by Cayley tables, with the small amount of subgroup
//! machinery the corpus needs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    order: usize,
    /// `table[a][b]` is the index of `a b`.
    table: Vec<Vec<usize>>,
    identity: usize,
    names: Vec<String>,
}

/// A subgroup as a sorted list of element indices.
pub type Subgroup = Vec<usize>;

impl GroupTable {
    /// Validates the group law; the error names the first offending triple.
    pub fn new(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("empty group table".into()));
        }
        if names.len() != n {
            return Err(Error::Invalid("one name per group element required".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Invalid(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Invalid(format!("row {a} contains out-of-range entry {bad}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Axiom { axiom: "identity".into(), witness: "no two-sided identity".into() })?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Axiom {
                            axiom: "group associativity".into(),
                            witness: format!("({a}, {b}, {c})"),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(Error::Axiom { axiom: "inverses".into(), witness: format!("element {a}") });
            }
        }
        Ok(GroupTable { order: n, table, identity, names })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        GroupTable::new(table, names).expect("cyclic group")
    }

    /// Direct product with element `(a, b)` at index `a * |H| + b`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let (n, m) = (g.order, h.order);
        let mut table = vec![vec![0; n * m]; n * m];
        for x in 0..n * m {
            for y in 0..n * m {
                table[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
            }
        }
        let mut names = Vec::new();
        for a in &g.names {
            for b in &h.names {
                names.push(format!("({a},{b})"));
            }
        }
        GroupTable::new(table, names).expect("direct product")
    }

    /// Dihedral group of order 8, element `r^i s^j` at index `i + 4 j`.
    pub fn dihedral8() -> GroupTable {
        // r^i s^j · r^k s^l = r^(i + (-1)^j k) s^(j+l)
        let idx = |i: usize, j: usize| i % 4 + 4 * (j % 2);
        let mut table = vec![vec![0; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let (i, j) = (x % 4, x / 4);
                let (k, l) = (y % 4, y / 4);
                let k = if j == 1 { (4 - k) % 4 } else { k };
                table[x][y] = idx(i + k, j + l);
            }
        }
        let names = ["1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"].iter().map(|s| s.to_string()).collect();
        GroupTable::new(table, names).expect("dihedral group")
    }

    /// Quaternion group with elements `1, i, j, k, -1, -i, -j, -k`.
    pub fn quaternion8() -> GroupTable {
        // unit quaternions as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
        let mul_axis = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let mut table = vec![vec![0; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let (neg, axis) = mul_axis(x % 4, y % 4);
                let sign = (x / 4 + y / 4 + neg as usize) % 2;
                table[x][y] = axis + 4 * sign;
            }
        }
        let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"].iter().map(|s| s.to_string()).collect();
        GroupTable::new(table, names).expect("quaternion group")
    }

    /// Symmetric group on three letters, permutations in lexicographic
    /// order of their one-line notation; `(στ)(x) = σ(τ(x))`.
    pub fn symmetric3() -> GroupTable {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = vec![vec![0; 6]; 6];
        for (a, s) in perms.iter().enumerate() {
            for (b, t) in perms.iter().enumerate() {
                table[a][b] = index([s[t[0]], s[t[1]], s[t[2]]]);
            }
        }
        let names = perms.iter().map(|p| format!("[{}{}{}]", p[0], p[1], p[2])).collect();
        GroupTable::new(table, names).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.order
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inv(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.table[a][b] == self.identity).unwrap()
    }
    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Subgroup {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let class: BTreeSet<usize> =
                (0..self.order).map(|g| self.mul(self.mul(g, a), self.inv(g))).collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Subgroup generated by a set of elements.
    pub fn generated(&self, gens: &[usize]) -> Subgroup {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(self.identity);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// All subgroups, sorted by (order, elements).
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut all: BTreeSet<Subgroup> = (0..self.order).map(|a| self.generated(&[a])).collect();
        loop {
            let list: Vec<Subgroup> = all.iter().cloned().collect();
            let mut grew = false;
            for (i, h) in list.iter().enumerate() {
                for k in &list[i + 1..] {
                    let mut gens = h.clone();
                    gens.extend(k);
                    if all.insert(self.generated(&gens)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut v: Vec<Subgroup> = all.into_iter().collect();
        v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        v
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        (0..self.order).all(|g| {
            h.iter().all(|&x| h.binary_search(&self.mul(self.mul(g, x), self.inv(g))).is_ok())
        })
    }

    pub fn is_abelian_subgroup(&self, h: &[usize]) -> bool {
        h.iter().all(|&a| h.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Largest normal subgroup whose order is prime to `p`.
    pub fn largest_normal_p_prime(&self, p: usize) -> Subgroup {
        let mut gens = Vec::new();
        for h in self.subgroups() {
            if h.len() % p != 0 && self.is_normal(&h) {
                gens.extend(h);
            }
        }
        self.generated(&gens)
    }

    /// Quotient by a normal subgroup: the table of cosets, plus the map
    /// sending each element to its coset index. Cosets are numbered by
    /// their smallest element.
    pub fn quotient(&self, n: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_normal(n) {
            return Err(Error::Precondition("quotient by a non-normal subgroup".into()));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &x in n {
                coset_of[self.mul(g, x)] = idx;
            }
        }
        let m = reps.len();
        let table =
            (0..m).map(|a| (0..m).map(|b| coset_of[self.mul(reps[a], reps[b])]).collect()).collect();
        let names = reps.iter().map(|&r| format!("{}N", self.names[r])).collect();
        Ok((GroupTable::new(table, names)?, coset_of))
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        let mut n = self.order;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    /// A Sylow `p`-subgroup (the first one in subgroup order).
    pub fn sylow(&self, p: usize) -> Subgroup {
        let mut pk = 1;
        while self.order.is_multiple_of(pk * p) {
            pk *= p;
        }
        self.subgroups().into_iter().find(|h| h.len() == pk).expect("Sylow subgroups exist")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugacy_class_counts() {
        assert_eq!(GroupTable::dihedral8().conjugacy_classes().len(), 5);
        assert_eq!(GroupTable::quaternion8().conjugacy_classes().len(), 5);
        assert_eq!(GroupTable::symmetric3().conjugacy_classes().len(), 3);
        assert_eq!(GroupTable::cyclic(4).conjugacy_classes().len(), 4);
    }

    #[test]
    fn subgroup_counts() {
        // D8: 1 trivial, 5 of order 2, 3 of order 4, the whole group
        assert_eq!(GroupTable::dihedral8().subgroups().len(), 10);
        // Q8: trivial, centre, three cyclic of order 4, whole group
        assert_eq!(GroupTable::quaternion8().subgroups().len(), 6);
        assert_eq!(GroupTable::symmetric3().subgroups().len(), 6);
    }

    #[test]
    fn normal_p_prime_subgroups() {
        let s3 = GroupTable::symmetric3();
        assert_eq!(s3.largest_normal_p_prime(2).len(), 3);
        assert_eq!(s3.largest_normal_p_prime(3).len(), 1);
        let g = GroupTable::product(&GroupTable::cyclic(2), &GroupTable::cyclic(3));
        let n = g.largest_normal_p_prime(2);
        assert_eq!(n.len(), 3);
        let (q, _) = g.quotient(&n).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn corrupted_table_rejected() {
        let mut t = GroupTable::symmetric3().table().to_vec();
        t[1].swap(2, 3);
        let err = GroupTable::new(t, (0..6).map(|i| i.to_string()).collect()).unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }));
    }

    #[test]
    fn orders_and_abelian() {
        let d8 = GroupTable::dihedral8();
        assert!(!d8.is_abelian());
        assert_eq!(d8.center(), vec![0, 2]);
        assert_eq!(d8.elem_order(1), 4);
        assert_eq!(d8.elem_order(4), 2);
        assert!(GroupTable::cyclic(4).is_abelian());
        assert_eq!(GroupTable::quaternion8().center(), vec![0, 4]);
    }
}
