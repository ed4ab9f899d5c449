//! Assembles the JSON report for a task: algebra provenance, computed
//! sections and verdicts. Keys are sorted and nothing depends on timing,
//! so identical configurations give byte-identical text.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::adjoint::{indecomposable_summands, AdjointModule};
use crate::error::{Error, Result};
use crate::hochschild::{enveloping_setup, sum_dims};
use crate::hopf::HopfAlgebra;
use crate::pipoints::{self, PiAnalysis, DEFAULT_BUDGET};
use crate::verify::{self, combine, Analysis, Check, Status};

/// Bumped whenever the report layout changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const VERIFY_NAMES: [&str; 14] = [
    "center",
    "same",
    "relative",
    "krull",
    "nilpotents",
    "localunipotent",
    "eckmann-shapiro",
    "kernel-lemma",
    "xN-example",
    "equiv",
    "injective",
    "homeo-local",
    "defect",
    "rep-type",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub cap: usize,
    pub seed: u64,
    pub budget: usize,
    pub slow: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { cap: 10, seed: 0xB10C, budget: DEFAULT_BUDGET, slow: false }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cap < 2 {
            return Err(Error::Invalid(format!("cap must be at least 2, got {}", self.cap)));
        }
        if self.budget == 0 {
            return Err(Error::Invalid("budget must be at least 1".into()));
        }
        Ok(())
    }

    fn provenance(&self) -> Value {
        json!({ "cap": self.cap, "seed": self.seed, "budget": self.budget })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Info,
    Blocks,
    Cohomology,
    Support,
    Adjoint,
    Hochschild,
    PiPoints,
    Verify(String),
    All,
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Task> {
        Ok(match s {
            "info" => Task::Info,
            "blocks" => Task::Blocks,
            "cohomology" => Task::Cohomology,
            "support" => Task::Support,
            "adjoint" => Task::Adjoint,
            "hochschild" => Task::Hochschild,
            "pipoints" => Task::PiPoints,
            "all" => Task::All,
            _ => match s.strip_prefix("verify:") {
                Some("all") => Task::Verify("all".into()),
                Some(n) if VERIFY_NAMES.contains(&n) => Task::Verify(n.into()),
                _ => return Err(Error::Invalid(format!("unknown task `{s}`"))),
            },
        })
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Task::Info => "info",
            Task::Blocks => "blocks",
            Task::Cohomology => "cohomology",
            Task::Support => "support",
            Task::Adjoint => "adjoint",
            Task::Hochschild => "hochschild",
            Task::PiPoints => "pipoints",
            Task::All => "all",
            Task::Verify(n) => return write!(f, "verify:{n}"),
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report(pub Value);

impl Report {
    /// Worst verdict status, `Pass` when there are no verdicts.
    pub fn status(&self) -> Status {
        combine(self.verdicts().iter().map(|v| serde_json::from_value(v["status"].clone()).unwrap_or(Status::Fail)))
    }

    pub fn verdicts(&self) -> &[Value] {
        self.0["verdicts"].as_array().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_inconclusive(&self) -> bool {
        self.verdicts().iter().any(|v| v["status"] == "inconclusive")
    }

    /// All verdicts are unsupported (and there is at least one).
    pub fn all_unsupported(&self) -> bool {
        let v = self.verdicts();
        !v.is_empty() && v.iter().all(|v| v["status"] == "unsupported")
    }

    pub fn parse(text: &str) -> Result<Report> {
        Ok(Report(serde_json::from_str(text)?))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_string_pretty(&sorted(&self.0)).map_err(|_| fmt::Error)?;
        writeln!(f, "{s}")
    }
}

/// Rebuilds objects with sorted keys regardless of serde_json features.
fn sorted(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            let mut out = Map::new();
            for k in keys {
                out.insert(k.clone(), sorted(&m[k]));
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.iter().map(sorted).collect()),
        _ => v.clone(),
    }
}

/// Keys whose values never take part in golden comparisons.
const VOLATILE_KEYS: [&str; 2] = ["elapsed", "timing"];

/// Paths at which two reports differ; empty when they agree.
pub fn diff(a: &Value, b: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff_at("$", a, b, &mut out);
    out
}

fn diff_at(path: &str, a: &Value, b: &Value, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let mut keys: Vec<&String> = x.keys().chain(y.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                if VOLATILE_KEYS.contains(&k.as_str()) {
                    continue;
                }
                let p = format!("{path}.{k}");
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) => diff_at(&p, u, v, out),
                    _ => out.push(p),
                }
            }
        }
        (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
            for (i, (u, v)) in x.iter().zip(y).enumerate() {
                diff_at(&format!("{path}[{i}]"), u, v, out);
            }
        }
        _ if a != b => out.push(path.to_string()),
        _ => {}
    }
}

fn info_section(h: &HopfAlgebra) -> Value {
    let axioms = h.validate();
    json!({
        "dim": h.dim(),
        "basis": h.algebra().labels(),
        "group_order": h.group().map(|g| g.order()),
        "axioms": axioms,
        "valid": axioms.iter().all(|a| a.passed),
    })
}

fn blocks_section(an: &Analysis) -> Value {
    let alg = an.hopf.algebra();
    let st = &an.structure;
    let blocks: Vec<Value> = an
        .blocks
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            json!({
                "dim": b.dim(),
                "principal": i == an.blocks.principal,
                "idempotent": alg.format_element(&b.idempotent),
                "radical_dim": b.space.intersect(&st.radical).dim(),
                "simple_dims": b.simples.iter().map(|&t| st.simples[t].dim()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "count": an.blocks.len(),
        "blocks": blocks,
        "radical_dim": st.radical.dim(),
        "loewy_length": st.loewy_length,
        "certificate": an.blocks.certificate,
        "invariants_hold": an.blocks.check_invariants(alg).is_ok(),
    })
}

fn cohomology_section(an: &Analysis) -> Value {
    let r = &an.ring;
    let f = r.field();
    json!({
        "cap": r.cap,
        "even_only": r.even_only,
        "piece_dims": r.piece_dims,
        "generator_degrees": r.generator_degrees(),
        "relations": r.relations.iter().map(|p| p.format(&r.ring, f)).collect::<Vec<_>>(),
    })
}

fn support_section(an: &Analysis) -> Result<Value> {
    let mut out = Vec::new();
    for i in 0..an.blocks.len() {
        out.push(serde_json::to_value(an.block_variety(i)?.summary())?);
    }
    Ok(json!({ "blocks": out }))
}

fn adjoint_section(an: &Analysis) -> Result<Value> {
    let h = &an.hopf;
    let gens = h.algebra().generators();
    let mut out = Vec::new();
    for i in 0..an.blocks.len() {
        let ad = an.adjoint(i);
        let summands = indecomposable_summands(&ad.module, &gens, an.seed)?;
        out.push(json!({
            "dim": ad.module.dim(),
            "fixed_points_dim": ad.fixed_points(h).dim(),
            "center_dim": ad.center(h.algebra()).dim(),
            "summand_dims": summands.iter().map(|s| s.space.dim()).collect::<Vec<_>>(),
            "g_algebra": ad.is_g_algebra(h),
        }));
    }
    let whole = AdjointModule::whole(h);
    Ok(json!({ "blocks": out, "whole_dim": whole.module.dim() }))
}

fn hochschild_section(an: &Analysis, cfg: &RunConfig) -> Result<Value> {
    let whole = an.hochschild_whole()?.clone();
    let parts: Vec<Vec<usize>> = (0..an.blocks.len()).map(|i| an.hochschild_block(i).cloned()).collect::<Result<_>>()?;
    let sum = sum_dims(&parts);
    let mut v = json!({
        "dims": whole,
        "block_dims": parts,
        "block_sum_matches": sum == whole,
    });
    if cfg.slow {
        v["enveloping"] = serde_json::to_value(enveloping_setup(&an.hopf, an.seed)?)?;
    }
    Ok(v)
}

fn section_or_error(r: Result<Value>) -> Result<Value> {
    match r {
        Ok(v) => Ok(v),
        Err(Error::Unsupported(m)) | Err(Error::Precondition(m)) => Ok(json!({ "unsupported": m })),
        Err(Error::Inconclusive(m)) => Ok(json!({ "inconclusive": m })),
        Err(e) => Err(e),
    }
}

fn pipoints_section(pi: &PiAnalysis) -> Result<Value> {
    let an = pi.an;
    let alg = an.hopf.algebra();
    let p_points = section_or_error(pi.p_point_classes().map(|s| s.summary(alg)))?;
    let mut blocks = Vec::new();
    for i in 0..an.blocks.len() {
        blocks.push(section_or_error(pi.flat_points_of_block(i).map(|s| s.summary(alg)))?);
    }
    Ok(json!({ "p_points": p_points, "flat_points": blocks }))
}

fn verdict(cfg: &RunConfig, block: Option<usize>, name: &str, r: Result<Check>) -> Value {
    let c = match Check::from_result(name, r) {
        Ok(c) => c,
        Err(e) => Check::with_status(name, Status::Fail, json!({ "error": e.to_string() })),
    };
    json!({
        "name": c.name,
        "block": block,
        "status": c.status,
        "evidence": c.evidence,
        "provenance": cfg.provenance(),
    })
}

fn run_verify(pi: &PiAnalysis, name: &str, cfg: &RunConfig) -> Vec<Value> {
    let an = pi.an;
    let nb = an.blocks.len();
    let per_block = |f: &dyn Fn(usize) -> Result<Check>| -> Vec<Value> {
        (0..nb).map(|i| verdict(cfg, Some(i), name, f(i))).collect()
    };
    let single = |r: Result<Check>| vec![verdict(cfg, None, name, r)];
    match name {
        "center" => single(Ok(verify::verify_center(an))),
        "same" => per_block(&|i| verify::verify_same(an, i)),
        "relative" => per_block(&|i| verify::verify_relative(an, i)),
        "krull" => per_block(&|i| verify::verify_krull(an, i)),
        "nilpotents" => single(verify::verify_nilpotents(an)),
        "localunipotent" => single(verify::verify_localunipotent(an)),
        "eckmann-shapiro" => single(verify::verify_eckmann_shapiro(an)),
        "rep-type" => single(verify::verify_rep_type(an)),
        "kernel-lemma" => single(pipoints::verify_kernel_lemma(pi)),
        "xN-example" => single(pipoints::verify_xn_example(an)),
        "equiv" => single(pipoints::verify_equiv(pi)),
        "injective" => single(pipoints::verify_injective(pi)),
        "homeo-local" => single(pipoints::verify_homeo_local(pi)),
        "defect" => per_block(&|i| pipoints::verify_defect(pi, i)),
        _ => single(Err(Error::Invalid(format!("unknown check `{name}`")))),
    }
}

/// Runs a task on an algebra. `Info` does not need the analysis and stays
/// cheap; everything else builds it once.
pub fn run(h: &HopfAlgebra, task: &Task, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let spec = h.field().spec();
    let mut report = json!({
        "schema": SCHEMA_VERSION,
        "tool": { "name": "blockscope", "version": env!("CARGO_PKG_VERSION") },
        "algebra": {
            "name": h.name,
            "dim": h.dim(),
            "fingerprint": h.fingerprint(),
            "field": { "p": spec.p, "e": spec.e, "modulus": spec.modulus },
        },
        "config": { "cap": cfg.cap, "seed": cfg.seed, "budget": cfg.budget, "slow": cfg.slow },
        "task": task.to_string(),
    });
    let mut sections = Map::new();
    let mut verdicts = Vec::new();
    if *task == Task::Info {
        sections.insert("info".into(), info_section(h));
    } else {
        let an = Analysis::new(h, cfg.cap, cfg.seed)?;
        let pi = PiAnalysis::new(&an, cfg.budget);
        let want = |t: Task| *task == t || *task == Task::All;
        if want(Task::Info) {
            sections.insert("info".into(), info_section(h));
        }
        if want(Task::Blocks) {
            sections.insert("blocks".into(), blocks_section(&an));
        }
        if want(Task::Cohomology) {
            sections.insert("cohomology".into(), cohomology_section(&an));
        }
        if want(Task::Support) {
            sections.insert("support".into(), section_or_error(support_section(&an))?);
        }
        if want(Task::Adjoint) {
            sections.insert("adjoint".into(), section_or_error(adjoint_section(&an))?);
        }
        if want(Task::Hochschild) {
            sections.insert("hochschild".into(), section_or_error(hochschild_section(&an, cfg))?);
        }
        if want(Task::PiPoints) {
            sections.insert("pipoints".into(), pipoints_section(&pi)?);
        }
        let names: Vec<&str> = match task {
            Task::All => VERIFY_NAMES.to_vec(),
            Task::Verify(n) if n == "all" => VERIFY_NAMES.to_vec(),
            Task::Verify(n) => vec![n.as_str()],
            _ => Vec::new(),
        };
        for n in names {
            verdicts.extend(run_verify(&pi, n, cfg));
        }
    }
    report["sections"] = Value::Object(sections);
    let status = combine(verdicts.iter().map(|v| serde_json::from_value(v["status"].clone()).unwrap_or(Status::Fail)));
    report["verdicts"] = Value::Array(verdicts);
    report["status"] = serde_json::to_value(status)?;
    Ok(Report(report))
}
