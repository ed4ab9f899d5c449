//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines are always printed; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use blockscope::algebra::Algebra;
use blockscope::hopf::{builtin, CORPUS};
use blockscope::pipoints::{self, flatness_criteria_sample, PiAnalysis, DEFAULT_BUDGET};
use blockscope::report::{self, Report, RunConfig, Task};
use blockscope::verify::{self, Analysis, Check, Status, KRULL_TOLERANCE};
use blockscope::field::extend_field;
use blockscope::{Error, Fe, Result};

const CAP: usize = 10;
const SEED: u64 = 0xB10C;
/// Sampled p-nilpotent elements per corpus algebra for the flatness criteria.
const FLATNESS_PER_ALGEBRA: usize = 1500;
const FLATNESS_TOTAL: usize = 10_000;
/// Largest center enumerated by the idempotent oracle.
const ORACLE_CENTER_SIZE: usize = 1 << 12;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn status(r: Result<Check>) -> Status {
    r.map(|c| c.status).unwrap_or(Status::Fail)
}

struct Corpus {
    analyses: Vec<(&'static str, Analysis)>,
}

impl Corpus {
    fn get(&self, name: &str) -> &Analysis {
        &self.analyses.iter().find(|(n, _)| *n == name).unwrap().1
    }
}

fn hopf_validation(_: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    for name in CORPUS {
        let h = builtin(name).unwrap();
        for c in h.validate().into_iter().filter(|c| !c.passed) {
            bad.push(format!("{name}:{}", c.axiom));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "10 algebras, all axioms".into() } else { bad.join(", ") })
}

/// Counts idempotents of the center by enumeration: a split semisimple
/// Boolean algebra of central idempotents has `2^blocks` elements.
fn central_idempotent_count(alg: &Algebra) -> Option<usize> {
    let z = alg.center();
    let q = alg.field().order();
    let size = q.checked_pow(z.rows() as u32)?;
    if size > ORACLE_CENTER_SIZE {
        return None;
    }
    let f = alg.field();
    let mut count = 0;
    for idx in 0..size {
        let mut v = vec![0 as Fe; alg.dim()];
        let mut k = idx;
        for r in 0..z.rows() {
            f.axpy(&mut v, (k % q) as Fe, z.row(r));
            k /= q;
        }
        if alg.mul(&v, &v) == v {
            count += 1;
        }
    }
    Some(count)
}

fn block_decomposition(c: &Corpus) -> Outcome {
    let expect: [(&str, Vec<usize>); 4] =
        [("kS3@p2", vec![2, 4]), ("kS3@p3", vec![6]), ("kZ4@p2", vec![4]), ("usl2@p3", vec![9, 18])];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, dims) in &expect {
        let mut got = c.get(name).blocks.dims();
        got.sort();
        ok &= got == *dims;
        notes.push(format!("{name} {got:?}"));
    }
    let u = c.get("usl2@p3");
    let nine = (0..u.blocks.len()).find(|&i| u.blocks.blocks[i].dim() == 9);
    ok &= nine.is_some_and(|i| u.block_is_simple(i));
    let mut oracle = 0;
    for (name, an) in &c.analyses {
        let alg = an.hopf.algebra();
        ok &= an.blocks.check_invariants(alg).is_ok();
        if let Some(n) = central_idempotent_count(alg) {
            oracle += 1;
            if n != 1 << an.blocks.len() {
                ok = false;
                notes.push(format!("{name}: {n} central idempotents for {} blocks", an.blocks.len()));
            }
        }
    }
    notes.push(format!("idempotent oracle on {oracle} centers"));
    outcome(ok, notes.join("; "))
}

fn fixed_points_center(c: &Corpus) -> Outcome {
    let bad: Vec<&str> = c.analyses.iter().filter(|(_, an)| !verify::verify_center(an).passed()).map(|(n, _)| *n).collect();
    outcome(bad.is_empty(), if bad.is_empty() { "every block of every algebra".into() } else { bad.join(", ") })
}

fn adjoint_support(c: &Corpus) -> Outcome {
    let mut blocks = 0;
    let mut bad = Vec::new();
    for (name, an) in &c.analyses {
        for i in 0..an.blocks.len() {
            blocks += 1;
            let s = status(verify::verify_same(an, i));
            if s != Status::Pass {
                bad.push(format!("{name}/B{i}:{s:?}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{blocks} blocks; {}", if bad.is_empty() { "all pass".into() } else { bad.join(", ") }))
}

fn hochschild_krull(c: &Corpus) -> Outcome {
    // (algebra, expected variety dimension per block in block order)
    let cases: [(&str, usize, usize); 5] =
        [("kZ2@p2", 0, 1), ("kZ2xZ2@p2", 0, 2), ("kS3@p2", 0, 1), ("kS3@p2", 1, 0), ("kS3@p3", 0, 1)];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, i, dim) in cases {
        let an = c.get(name);
        let s = status(verify::verify_krull(an, i));
        let vd = an.block_variety(i).map(|v| v.dim).ok();
        ok &= s == Status::Pass && vd == Some(dim);
        notes.push(format!("{name}/B{i} dim {vd:?} {s:?}"));
    }
    outcome(ok, format!("tolerance {KRULL_TOLERANCE}; {}", notes.join(", ")))
}

fn nilpotent_ideal(c: &Corpus) -> Outcome {
    let mut ok = true;
    let mut local = 0;
    for (name, an) in &c.analyses {
        if an.principal_is_local() {
            local += 1;
            if status(verify::verify_nilpotents(an)) != Status::Pass {
                ok = false;
                println!("    nilpotents fails on {name}");
            }
        }
    }
    let s3 = verify::verify_nilpotents(c.get("kS3@p3"));
    let period = s3.as_ref().ok().and_then(|c| c.evidence["omega_period"].as_u64());
    let case = s3.as_ref().ok().and_then(|c| c.evidence["case"].as_u64());
    ok &= s3.map(|c| c.passed()).unwrap_or(false) && case == Some(2) && period.is_some_and(|p| p <= 10);
    outcome(ok, format!("case 1 on {local} local principal blocks; kS3@p3 case {case:?} period {period:?}"))
}

fn local_principal_block(c: &Corpus) -> Outcome {
    // Z/3 does not split over F_2; the engine asks for the extension it needs
    let h = builtin("kZ2xZ3@p2").unwrap();
    let z6 = match Analysis::new(&h, CAP, SEED) {
        Err(Error::NeedsExtension(d)) => Analysis::new(&h.extend_scalars(&extend_field(h.field(), d).unwrap()), CAP, SEED),
        r => r,
    }
    .unwrap();
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, an) in [("kS3@p2", c.get("kS3@p2")), ("kZ2xZ3@p2", &z6), ("kZ2xZ3@q4", c.get("kZ2xZ3@q4"))] {
        let r = verify::verify_localunipotent(an);
        let contained = r.as_ref().ok().and_then(|c| c.evidence["augmentation_in_nonprincipal"].as_bool());
        let n = r.as_ref().ok().and_then(|c| c.evidence["normal_subgroup"].as_array().map(|a| a.len()));
        let pass = r.map(|c| c.passed()).unwrap_or(false) && contained == Some(true);
        ok &= pass;
        notes.push(format!("{name} |N|={n:?} {}", if pass { "pass" } else { "fail" }));
    }
    outcome(ok, notes.join(", "))
}

fn x_plus_n(c: &Corpus) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in ["kD8@p2", "kQ8@p2"] {
        let r = pipoints::verify_xn_example(c.get(name));
        let Ok(ch) = r else {
            ok = false;
            continue;
        };
        let ev = &ch.evidence;
        let all_two = ev["jordan_type"].as_array().is_some_and(|a| !a.is_empty() && a.iter().all(|x| x == 2));
        let exhaustive = ev["memberships_failed"] == ev["proper_subgroups"];
        ok &= ch.passed() && ev["flat"] == true && all_two && exhaustive;
        notes.push(format!("{name} jordan {} subgroups {}", ev["jordan_type"], ev["proper_subgroups"]));
    }
    outcome(ok, notes.join(", "))
}

fn kernel_equivalence(c: &Corpus) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in ["kD8@p2", "kQ8@p2"] {
        let pi = PiAnalysis::new(c.get(name), DEFAULT_BUDGET);
        let Ok(ch) = pipoints::verify_equiv(&pi) else {
            ok = false;
            continue;
        };
        let xn = ch.evidence["maps"].as_array().and_then(|m| m.iter().find(|r| r["map"] == "x+N")).cloned();
        let matched = xn.as_ref().is_some_and(|r| {
            !r["match"].is_null() && r["equivalence"]["equivalent_on_family"] == true && r["equivalence"]["kernels_equal"] == true
        });
        ok &= ch.passed() && matched;
        notes.push(format!("{name} x+N matched {matched}"));
    }
    let mut lemma = 0;
    for (name, an) in &c.analyses {
        let pi = PiAnalysis::new(an, DEFAULT_BUDGET);
        match status(pipoints::verify_kernel_lemma(&pi)) {
            Status::Pass => lemma += 1,
            Status::Unsupported => {}
            s => {
                ok = false;
                notes.push(format!("kernel lemma {name}: {s:?}"));
            }
        }
    }
    notes.push(format!("kernel lemma holds on {lemma} algebras"));
    outcome(ok, notes.join(", "))
}

fn injective_homeo(c: &Corpus) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let s3 = c.get("kS3@p2");
    let pi = PiAnalysis::new(s3, DEFAULT_BUDGET);
    let b0 = s3.blocks.principal;
    let p = pi.block_pi_support(b0).map(|s| s.classes.len()).unwrap_or(0);
    let f = pi.flat_points_of_block(b0).map(|s| s.classes.len()).unwrap_or(0);
    let homeo = status(pipoints::verify_homeo_local(&pi));
    ok &= p == 1 && f == 1 && homeo == Status::Pass;
    notes.push(format!("kS3@p2 P={p} F={f} homeo {homeo:?}"));

    let e = c.get("kZ2xZ2@p2");
    let pe = PiAnalysis::new(e, DEFAULT_BUDGET);
    let kernels: BTreeSet<Vec<String>> = pe
        .flat_points_whole()
        .map(|s| s.classes.iter().filter_map(|c| c.kernel.as_ref().map(|k| k.formatted_gens())).collect())
        .unwrap_or_default();
    let want: BTreeSet<Vec<String>> = [["x"], ["y"], ["x + y"]].iter().map(|k| k.iter().map(|s| s.to_string()).collect()).collect();
    ok &= kernels == want;
    notes.push(format!("E2 kernels {kernels:?}"));

    let mut supported = 0;
    for (name, an) in &c.analyses {
        let pi = PiAnalysis::new(an, DEFAULT_BUDGET);
        match status(pipoints::verify_injective(&pi)) {
            Status::Pass => supported += 1,
            Status::Unsupported => {}
            s => {
                ok = false;
                notes.push(format!("injective {name}: {s:?}"));
            }
        }
    }
    notes.push(format!("injectivity witnesses on {supported} algebras"));
    outcome(ok, notes.join("; "))
}

fn defect(c: &Corpus) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in ["kS3@p2", "kS3@p3"] {
        let an = c.get(name);
        let pi = PiAnalysis::new(an, DEFAULT_BUDGET);
        for i in 0..an.blocks.len() {
            let s = status(pipoints::verify_defect(&pi, i));
            ok &= s == Status::Pass;
            notes.push(format!("{name}/B{i} {s:?}"));
        }
    }
    outcome(ok, notes.join(", "))
}

fn cross_checks(c: &Corpus) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut es = 0;
    for (name, an) in &c.analyses {
        let r = verify::verify_eckmann_shapiro(an);
        let sums = an.hochschild_whole().ok().cloned();
        let parts: Option<Vec<Vec<usize>>> = (0..an.blocks.len()).map(|i| an.hochschild_block(i).ok().cloned()).collect();
        let block_sum = match (sums, parts) {
            (Some(w), Some(p)) => w.len() == CAP + 1 && blockscope::hochschild::sum_dims(&p) == w,
            _ => false,
        };
        if r.map(|c| c.passed()).unwrap_or(false) && block_sum {
            es += 1;
        } else {
            ok = false;
            notes.push(format!("{name} fails"));
        }
    }
    notes.push(format!("HH = H(G, ad) and block sums on {es} algebras up to degree {CAP}"));
    let (mut tested, mut bad) = (0, 0);
    for (i, (_, an)) in c.analyses.iter().enumerate() {
        let (t, b) = flatness_criteria_sample(an.hopf.algebra(), FLATNESS_PER_ALGEBRA, SEED + i as u64);
        tested += t;
        bad += b;
    }
    ok &= tested >= FLATNESS_TOTAL && bad == 0;
    notes.push(format!("flatness criteria agree on {}/{tested} p-nilpotents", tested - bad));
    outcome(ok, notes.join("; "))
}

fn determinism(_: &Corpus) -> Outcome {
    let cfg = RunConfig { cap: CAP, seed: SEED, budget: DEFAULT_BUDGET, slow: false };
    let goldens = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../goldens");
    let mut ok = true;
    let mut notes = Vec::new();
    for name in CORPUS {
        let h = builtin(name).unwrap();
        let a = report::run(&h, &Task::Verify("all".into()), &cfg).map(|r| r.to_string());
        let b = report::run(&h, &Task::Verify("all".into()), &cfg).map(|r| r.to_string());
        if a.is_err() || a.ok() != b.ok() {
            ok = false;
            notes.push(format!("{name} not byte-identical"));
        }
        let fresh = report::run(&h, &Task::All, &cfg).unwrap();
        let golden = std::fs::read_to_string(goldens.join(format!("{name}.json"))).ok().and_then(|t| Report::parse(&t).ok());
        match golden {
            Some(g) => {
                let d = report::diff(&g.0, &fresh.0);
                if !d.is_empty() {
                    ok = false;
                    notes.push(format!("{name} golden diff at {}", d.join(" ")));
                }
            }
            None => {
                ok = false;
                notes.push(format!("{name} golden missing"));
            }
        }
    }
    if ok {
        notes.push("verify:all repeated byte-identical and golden diffs empty on 10 algebras".into());
    }
    outcome(ok, notes.join("; "))
}

type Criterion = (&'static str, fn(&Corpus) -> Outcome);

fn main() -> ExitCode {
    let analyses = CORPUS.iter().map(|&n| (n, Analysis::new(&builtin(n).unwrap(), CAP, SEED).unwrap())).collect();
    let corpus = Corpus { analyses };
    let criteria: [Criterion; 13] = [
        ("hopf validation", hopf_validation),
        ("block decomposition", block_decomposition),
        ("fixed points are the center", fixed_points_center),
        ("adjoint support equals block support", adjoint_support),
        ("krull dimension of HH", hochschild_krull),
        ("nilpotent ideal", nilpotent_ideal),
        ("local principal block", local_principal_block),
        ("x+N example", x_plus_n),
        ("kernel determines equivalence", kernel_equivalence),
        ("injectivity and local homeomorphism", injective_homeo),
        ("defect groups", defect),
        ("cross-checks", cross_checks),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f(&corpus);
        failed += usize::from(!o.ok);
        println!("criterion {:>2} {:<38} {}  {}", i + 1, name, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of 13 criteria pass", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
