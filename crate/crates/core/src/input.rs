//! Parser for algebra description files. The format is documented in
//! `docs/algebra-format.md`; in short:
//!
//! ```text
//! p=2 e=1
//! kind=group
//! order=2
//! table:
//! 0 1
//! 1 0
//! ```
//!
//! Every parsed algebra is run through the Hopf axiom checker before it is
//! returned.

use std::collections::BTreeMap;
use std::path::Path;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldSpec};
use crate::group::GroupTable;
use crate::hopf::{builtin, HopfAlgebra, Origin, Tensor2};
use crate::mat::Mat;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// A `key=value` line or a `key:` block with its data lines.
#[derive(Debug)]
enum Entry {
    Value { line: usize, value: String },
    Block { line: usize, rows: Vec<(usize, String)> },
}

impl Entry {
    fn line(&self) -> usize {
        match self {
            Entry::Value { line, .. } | Entry::Block { line, .. } => *line,
        }
    }
}

struct Doc {
    entries: BTreeMap<String, Entry>,
    end: usize,
}

impl Doc {
    fn value(&self, key: &str) -> Result<(usize, &str)> {
        match self.entries.get(key) {
            Some(Entry::Value { line, value }) => Ok((*line, value)),
            Some(e) => Err(perr(e.line(), format!("`{key}` must be a `{key}=...` line"))),
            None => Err(perr(self.end, format!("missing `{key}=`"))),
        }
    }

    fn optional_value(&self, key: &str) -> Result<Option<(usize, &str)>> {
        if self.entries.contains_key(key) {
            self.value(key).map(Some)
        } else {
            Ok(None)
        }
    }

    fn block(&self, key: &str) -> Result<(usize, &[(usize, String)])> {
        match self.entries.get(key) {
            Some(Entry::Block { line, rows }) => Ok((*line, rows)),
            Some(e) => Err(perr(e.line(), format!("`{key}` must be a `{key}:` block"))),
            None => Err(perr(self.end, format!("missing `{key}:` block"))),
        }
    }

    fn usize(&self, key: &str) -> Result<(usize, usize)> {
        let (line, v) = self.value(key)?;
        let n = v.parse().map_err(|_| perr(line, format!("`{key}` expects a non-negative integer, got `{v}`")))?;
        Ok((line, n))
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for (k, e) in &self.entries {
            if !allowed.contains(&k.as_str()) {
                return Err(perr(e.line(), format!("unexpected key `{k}`")));
            }
        }
        Ok(())
    }
}

fn is_key_line(s: &str) -> bool {
    let head: String = s.chars().take_while(|c| c.is_ascii_alphabetic() || *c == '_').collect();
    !head.is_empty() && (s[head.len()..].starts_with('=') || &s[head.len()..] == ":")
}

/// Splits the document into the header line and keyed entries.
fn scan(text: &str) -> Result<(usize, String, Doc)> {
    let mut header = None;
    let mut entries = BTreeMap::new();
    let mut open: Option<String> = None;
    let mut end = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        end = line;
        let s = raw.split('#').next().unwrap().trim();
        if s.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some((line, s.to_string()));
            continue;
        }
        if is_key_line(s) {
            open = None;
            let (key, entry) = match s.strip_suffix(':') {
                Some(k) if !k.contains('=') => {
                    open = Some(k.to_string());
                    (k.to_string(), Entry::Block { line, rows: Vec::new() })
                }
                _ => {
                    let (k, v) = s.split_once('=').unwrap();
                    (k.to_string(), Entry::Value { line, value: v.trim().to_string() })
                }
            };
            if entries.insert(key.clone(), entry).is_some() {
                return Err(perr(line, format!("duplicate key `{key}`")));
            }
        } else {
            match open.as_ref().and_then(|k| entries.get_mut(k)) {
                Some(Entry::Block { rows, .. }) => rows.push((line, s.to_string())),
                _ => return Err(perr(line, format!("data line outside a block: `{s}`"))),
            }
        }
    }
    let (hline, h) = header.ok_or_else(|| perr(end, "empty document"))?;
    Ok((hline, h, Doc { entries, end }))
}

fn parse_header(line: usize, s: &str) -> Result<Field> {
    let mut p = None;
    let mut e = None;
    let mut modulus = None;
    for tok in s.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| perr(line, format!("header token `{tok}` is not key=value")))?;
        let num = |v: &str| v.parse::<u32>().map_err(|_| perr(line, format!("`{k}` expects an integer, got `{v}`")));
        match k {
            "p" => p = Some(num(v)?),
            "e" => e = Some(num(v)?),
            "modulus" => modulus = Some(v.split(',').map(num).collect::<Result<Vec<u32>>>()?),
            _ => return Err(perr(line, format!("unknown header key `{k}`"))),
        }
    }
    let p = p.ok_or_else(|| perr(line, "header must start with `p=<prime>`"))?;
    let e = e.unwrap_or(1);
    let field = match modulus {
        Some(modulus) => Field::new(FieldSpec { p, e, modulus }),
        None => Field::with_degree(p, e),
    };
    field.map_err(|err| perr(line, err.to_string()))
}

/// A field element: an integer (read in the prime subfield) or a
/// polynomial in `t` with non-negative integer coefficients, e.g. `t^2+2t+1`.
pub fn parse_element(f: &Field, s: &str) -> std::result::Result<Fe, String> {
    let s = s.trim();
    if let Ok(n) = s.parse::<i64>() {
        return Ok(f.from_int(n));
    }
    let p = f.p() as usize;
    let mut coeffs = vec![0usize; f.degree() as usize];
    for term in s.split('+') {
        let term = term.trim();
        let (c, d) = match term.find('t') {
            Some(i) => {
                let rest = &term[i + 1..];
                let d: usize = match rest.strip_prefix('^') {
                    Some(d) => d.parse().map_err(|_| format!("bad exponent in `{s}`"))?,
                    None if rest.is_empty() => 1,
                    None => return Err(format!("bad field element `{s}`")),
                };
                (term[..i].trim_end_matches('*'), d)
            }
            None => (term, 0),
        };
        let c: usize = if c.is_empty() { 1 } else { c.parse().map_err(|_| format!("bad coefficient in `{s}`"))? };
        if d >= coeffs.len() {
            return Err(format!("`t^{d}` exceeds the field degree {}", f.degree()));
        }
        coeffs[d] = (coeffs[d] + c) % p;
    }
    // element codes are base-p digit strings of the coefficients
    let mut code = 0usize;
    for &c in coeffs.iter().rev() {
        code = code * p + c;
    }
    Ok(code as Fe)
}

fn elements(f: &Field, line: usize, s: &str, n: usize, what: &str) -> Result<Vec<Fe>> {
    let v: Vec<Fe> = s.split_whitespace().map(|t| parse_element(f, t).map_err(|m| perr(line, m))).collect::<Result<_>>()?;
    if v.len() != n {
        return Err(perr(line, format!("`{what}` needs {n} entries, got {}", v.len())));
    }
    Ok(v)
}

fn index(line: usize, s: &str, n: usize) -> Result<usize> {
    let i: usize = s.trim().parse().map_err(|_| perr(line, format!("bad basis index `{s}`")))?;
    if i >= n {
        return Err(perr(line, format!("basis index {i} out of range 0..{n}")));
    }
    Ok(i)
}

fn names(doc: &Doc, n: usize, prefix: &str) -> Result<Vec<String>> {
    match doc.optional_value("names")? {
        Some((line, v)) => {
            let names: Vec<String> = v.split_whitespace().map(String::from).collect();
            if names.len() != n {
                return Err(perr(line, format!("`names` needs {n} entries, got {}", names.len())));
            }
            Ok(names)
        }
        None => Ok((0..n).map(|i| format!("{prefix}{i}")).collect()),
    }
}

/// `<lhs> : <idx>=<c> <idx>=<c> ...`
fn split_row(line: usize, s: &str) -> Result<(String, Vec<(String, String)>)> {
    let (lhs, rhs) = s.split_once(':').ok_or_else(|| perr(line, format!("expected `<index> : <terms>`, got `{s}`")))?;
    let terms = rhs
        .split_whitespace()
        .map(|t| {
            t.split_once('=')
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .ok_or_else(|| perr(line, format!("term `{t}` is not <index>=<coefficient>")))
        })
        .collect::<Result<_>>()?;
    Ok((lhs.trim().to_string(), terms))
}

fn parse_group(doc: &Doc, field: &Field, name: &str) -> Result<HopfAlgebra> {
    doc.check_keys(&["kind", "order", "names", "table"])?;
    let (_, n) = doc.usize("order")?;
    let labels = names(doc, n, "g")?;
    let (tline, rows) = doc.block("table")?;
    if rows.len() != n {
        return Err(perr(tline, format!("table has {} rows, order is {n}", rows.len())));
    }
    let mut table = Vec::with_capacity(n);
    for (line, r) in rows {
        let row = r.split_whitespace().map(|t| index(*line, t, n)).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(perr(*line, format!("row has {} entries, order is {n}", row.len())));
        }
        table.push(row);
    }
    let g = GroupTable::new(table, labels)?;
    Ok(HopfAlgebra::group_algebra(&g, field, name))
}

fn parse_constants(doc: &Doc, field: &Field, name: &str) -> Result<HopfAlgebra> {
    doc.check_keys(&["kind", "dim", "names", "unit", "mul", "comult", "counit", "antipode"])?;
    let f = field;
    let (_, n) = doc.usize("dim")?;
    if n == 0 {
        return Err(perr(doc.value("dim")?.0, "dimension must be positive"));
    }
    let labels = names(doc, n, "b")?;
    let (uline, u) = doc.value("unit")?;
    let unit = elements(f, uline, u, n, "unit")?;
    let (cline, c) = doc.value("counit")?;
    let counit = elements(f, cline, c, n, "counit")?;

    let mut prod = vec![vec![0 as Fe; n]; n * n];
    for (line, r) in doc.block("mul")?.1 {
        let (lhs, terms) = split_row(*line, r)?;
        let ij: Vec<&str> = lhs.split_whitespace().collect();
        if ij.len() != 2 {
            return Err(perr(*line, "a `mul` row starts with two basis indices"));
        }
        let (i, j) = (index(*line, ij[0], n)?, index(*line, ij[1], n)?);
        for (k, c) in terms {
            let k = index(*line, &k, n)?;
            let c = parse_element(f, &c).map_err(|m| perr(*line, m))?;
            let slot = &mut prod[i * n + j][k];
            *slot = f.add(*slot, c);
        }
    }
    let alg = Algebra::from_fn(f, labels, unit, |i, j| prod[i * n + j].clone());

    let mut comult: Vec<Tensor2> = vec![Vec::new(); n];
    for (line, r) in doc.block("comult")?.1 {
        let (lhs, terms) = split_row(*line, r)?;
        let k = index(*line, &lhs, n)?;
        for (ij, c) in terms {
            let (i, j) = ij.split_once(',').ok_or_else(|| perr(*line, format!("`{ij}` is not <i>,<j>")))?;
            let (i, j) = (index(*line, i, n)?, index(*line, j, n)?);
            let c = parse_element(f, &c).map_err(|m| perr(*line, m))?;
            if c != 0 {
                comult[k].push((i as u32, j as u32, c));
            }
        }
    }
    let mut s = Mat::zeros(f, n, n);
    for (line, r) in doc.block("antipode")?.1 {
        let (lhs, terms) = split_row(*line, r)?;
        let j = index(*line, &lhs, n)?;
        for (i, c) in terms {
            let i = index(*line, &i, n)?;
            let c = parse_element(f, &c).map_err(|m| perr(*line, m))?;
            s.set(i, j, f.add(s.get(i, j), c));
        }
    }
    Ok(HopfAlgebra::new(name, alg, comult, counit, s, Origin::Constants))
}

fn parse_builtin(doc: &Doc, field: &Field) -> Result<HopfAlgebra> {
    doc.check_keys(&["kind", "name"])?;
    let (line, body) = doc.value("name")?;
    let spec = field.spec();
    let suffix = if spec.e == 1 { format!("p{}", spec.p) } else { format!("q{}", field.order()) };
    let h = builtin(&format!("{body}@{suffix}")).map_err(|e| perr(line, e.to_string()))?;
    if h.field().spec() != spec {
        return Err(perr(line, "builtin algebras use the default modulus"));
    }
    Ok(h)
}

/// Parses and validates an algebra description.
pub fn parse_algebra(text: &str, name: &str) -> Result<HopfAlgebra> {
    let (hline, header, doc) = scan(text)?;
    let field = parse_header(hline, &header)?;
    let (kline, kind) = doc.value("kind")?;
    let h = match kind {
        "group" => parse_group(&doc, &field, name)?,
        "constants" => parse_constants(&doc, &field, name)?,
        "builtin" => parse_builtin(&doc, &field)?,
        _ => return Err(perr(kline, format!("unknown kind `{kind}`; expected group, constants or builtin"))),
    };
    if let Some(bad) = h.validate().into_iter().find(|c| !c.passed) {
        return Err(Error::Axiom { axiom: bad.axiom, witness: bad.witness.unwrap_or_default() });
    }
    Ok(h)
}

/// Reads a description file; the algebra is named after the file stem.
pub fn load(path: &Path) -> Result<HopfAlgebra> {
    let text = std::fs::read_to_string(path)?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("algebra");
    parse_algebra(&text, name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_parse_as_polynomials() {
        let f = Field::with_degree(2, 2).unwrap();
        for a in f.elements() {
            assert_eq!(parse_element(&f, &f.format(a)).unwrap(), a);
        }
        let f3 = Field::prime(3).unwrap();
        assert_eq!(parse_element(&f3, "-1").unwrap(), 2);
        assert!(parse_element(&f3, "t").is_err());
    }

    #[test]
    fn group_table_round_trip() {
        let h = parse_algebra("p=2 e=1\nkind=group\norder=2\nnames=e g\ntable:\n0 1\n1 0\n", "c2").unwrap();
        assert_eq!(h.fingerprint(), builtin("kZ2@p2").unwrap().fingerprint());
    }

    #[test]
    fn diagnostics_carry_lines() {
        let e = parse_algebra("p=2\nkind=group\norder=2\ntable:\n0 1\n", "x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e}");
        let e = parse_algebra("p=2\nkind=ring\n", "x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_algebra("p=4\nkind=builtin\nname=kZ2\n", "x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
    }

    #[test]
    fn builtin_kind() {
        let h = parse_algebra("# small\np=2 e=1\nkind=builtin\nname=kS3\n", "x").unwrap();
        assert_eq!(h.name, "kS3@p2");
        assert_eq!(h.dim(), 6);
    }
}
