use proptest::prelude::*;
use serde_json::json;

use blockscope::field::extend_field;
use blockscope::hopf::{builtin, CORPUS};
use blockscope::input::parse_element;
use blockscope::pipoints::{flat_test, p_nilpotent_part};
use blockscope::report::{diff, run, RunConfig, Task};
use blockscope::{Fe, Field};

fn fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::prime(3).unwrap(),
        Field::with_degree(2, 2).unwrap(),
        Field::with_degree(3, 2).unwrap(),
        Field::with_degree(2, 3).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn element_strings_round_trip(fi in 0usize..5, a in 0u16..1024) {
        let f = &fields()[fi];
        let a = a % f.order() as Fe;
        prop_assert_eq!(parse_element(f, &f.format(a)).unwrap(), a);
    }

    #[test]
    fn extension_preserves_products(fi in 0usize..3, d in 2u32..4, a in 0u16..64, b in 0u16..64) {
        let f = &fields()[fi];
        let (a, b) = (a % f.order() as Fe, b % f.order() as Fe);
        let ext = extend_field(f, d).unwrap();
        let g = &ext.field;
        prop_assert_eq!(ext.embed(f.mul(a, b)), g.mul(ext.embed(a), ext.embed(b)));
        prop_assert_eq!(ext.embed(f.add(a, b)), g.add(ext.embed(a), ext.embed(b)));
    }

    /// Jordan type all-p, the rank of `L_u` and the rank of `L_u^{p−1}` give
    /// the same flatness verdict.
    #[test]
    fn flatness_criteria_agree(ai in 0usize..10, coords in prop::collection::vec(0u16..9, 27)) {
        let h = builtin(CORPUS[ai]).unwrap();
        let alg = h.algebra();
        let q = alg.field().order() as Fe;
        let y: Vec<Fe> = coords.iter().take(alg.dim()).map(|c| c % q).collect();
        if let Some(u) = p_nilpotent_part(alg, &y) {
            let fm = flat_test(alg, &u).unwrap();
            prop_assert!(fm.criteria_agree(), "{} {:?}", CORPUS[ai], fm);
            let p = alg.field().p() as usize;
            let mut pw = alg.unit().to_vec();
            for _ in 0..p {
                pw = alg.mul(&pw, &u);
            }
            prop_assert!(pw.iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn info_reports_are_deterministic(ai in 0usize..10) {
        let h = builtin(CORPUS[ai]).unwrap();
        let cfg = RunConfig::default();
        let a = run(&h, &Task::Info, &cfg).unwrap().to_string();
        let b = run(&h, &Task::Info, &cfg).unwrap().to_string();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn diff_finds_a_single_edit(keys in prop::collection::vec("[a-z]{1,4}", 1..6), pick in 0usize..6, val in 0i64..100) {
        let mut obj = serde_json::Map::new();
        for (i, k) in keys.iter().enumerate() {
            obj.insert(k.clone(), json!({ "v": i, "timing": i }));
        }
        let a = serde_json::Value::Object(obj);
        let k = &keys[pick % keys.len()];
        let mut b = a.clone();
        b[k.as_str()]["timing"] = json!(val + 1000);
        prop_assert!(diff(&a, &b).is_empty());
        b[k.as_str()]["v"] = json!(val + 1000);
        prop_assert_eq!(diff(&a, &b), vec![format!("$.{k}.v")]);
    }

    #[test]
    fn run_config_bounds(cap in 0usize..4, budget in 0usize..3) {
        let cfg = RunConfig { cap, budget, ..RunConfig::default() };
        prop_assert_eq!(cfg.validate().is_ok(), cap >= 2 && budget >= 1);
    }
}
