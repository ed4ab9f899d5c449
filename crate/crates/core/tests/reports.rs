use std::collections::BTreeMap;
use std::path::PathBuf;

use serde_json::Value;

use blockscope::hopf::builtin;
use blockscope::report::{diff, run, Report, RunConfig, Task};

fn golden(name: &str) -> Report {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../goldens").join(format!("{name}.json"));
    Report::parse(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn statuses(r: &Report) -> BTreeMap<(String, Option<u64>), String> {
    r.verdicts()
        .iter()
        .map(|v| ((v["name"].as_str().unwrap().to_string(), v["block"].as_u64()), v["status"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn fresh_run_matches_shipped_golden() {
    let h = builtin("kZ2@p2").unwrap();
    let fresh = run(&h, &Task::All, &RunConfig::default()).unwrap();
    assert!(diff(&golden("kZ2@p2").0, &fresh.0).is_empty());
}

#[test]
fn corrupted_golden_lists_changed_paths() {
    let mut g = golden("kZ2@p2");
    g.0["sections"]["blocks"]["count"] = Value::from(7);
    g.0["algebra"]["fingerprint"] = Value::from("0");
    let h = builtin("kZ2@p2").unwrap();
    let fresh = run(&h, &Task::All, &RunConfig::default()).unwrap();
    assert_eq!(diff(&g.0, &fresh.0), vec!["$.algebra.fingerprint", "$.sections.blocks.count"]);
}

#[test]
fn lowering_the_cap_never_turns_pass_into_fail() {
    for name in ["kZ2@p2", "kZ4@p2", "kS3@p2", "kS3@p3", "kQ8@p2"] {
        let g = golden(name);
        let cfg = RunConfig { cap: 8, ..RunConfig::default() };
        let low = run(&builtin(name).unwrap(), &Task::Verify("all".into()), &cfg).unwrap();
        let (a, b) = (statuses(&g), statuses(&low));
        assert_eq!(a.len(), b.len(), "{name}");
        for (k, s) in &a {
            let t = &b[k];
            assert!(!(s == "pass" && t == "fail"), "{name} {k:?}: pass at cap 10, fail at cap 8");
            assert!(s == t || t == "inconclusive" || s == "inconclusive", "{name} {k:?}: {s} -> {t}");
        }
        // outside verdict evidence, only provenance may change
        let changed: Vec<String> = diff(&g.0["config"], &low.0["config"]);
        assert_eq!(changed, vec!["$.cap"], "{name}");
    }
}

#[test]
fn every_verdict_carries_provenance() {
    let g = golden("kD8@p2");
    for v in g.verdicts() {
        for k in ["cap", "seed", "budget"] {
            assert!(v["provenance"][k].is_u64(), "{} lacks {k}", v["name"]);
        }
    }
    assert_eq!(g.verdicts().len(), 14);
}

#[test]
fn unsupported_verdicts_keep_their_reason() {
    let h = builtin("usl2@p3").unwrap();
    let r = run(&h, &Task::Verify("defect".into()), &RunConfig::default()).unwrap();
    assert!(r.all_unsupported());
    assert!(r.verdicts()[0]["evidence"]["reason"].as_str().unwrap().contains("group algebra"));
}
