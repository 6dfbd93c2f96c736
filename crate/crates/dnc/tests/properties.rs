mod common;

use std::rc::Rc;

use dnc::{parse_problem, print_problem, run_command, run_command_with_store, Command, DiskCache, ProblemSpec};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "w"];

/// Small polynomial text over the first `nvars` variables.
fn arb_poly(nvars: usize) -> impl Strategy<Value = String> {
    let term = (-3i64..=3, 1i64..=2, prop::collection::vec(0u32..3, nvars)).prop_map(|(c, den, exps)| {
        let mut s = if den == 1 { c.to_string() } else { format!("{c}/{den}") };
        for (v, e) in VARS.iter().zip(exps) {
            match e {
                0 => {}
                1 => s.push_str(&format!("*{v}")),
                e => s.push_str(&format!("*{v}^{e}")),
            }
        }
        s
    });
    prop::collection::vec(term, 1..4).prop_map(|ts| ts.join(" + "))
}

fn arb_spec() -> impl Strategy<Value = ProblemSpec> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(arb_poly(n), 0..3),
            0u32..10,
            prop::option::of((-3i64..=0, 0i64..=3)),
            prop::option::of((0u32..=1, 1u32..=3)),
            prop::collection::vec(arb_poly(n), 0..2),
        )
            .prop_map(move |(center, cutoff, weights, hdegs, pullback)| ProblemSpec {
                vars: VARS[..n].iter().map(|s| s.to_string()).collect(),
                center,
                cutoff,
                weights,
                hdegs,
                pullback,
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_is_identity(spec in arb_spec()) {
        prop_assert_eq!(parse_problem(&print_problem(&spec)).unwrap(), spec);
    }
}

/// Degree ≤ 2 forms in x, y with small coefficients.
fn arb_center() -> impl Strategy<Value = Vec<String>> {
    let form = prop::collection::vec(-2i64..=2, 5).prop_map(|c| {
        let monos = ["x", "y", "x^2", "x*y", "y^2"];
        let terms: Vec<String> = c.iter().zip(monos).filter(|(c, _)| **c != 0).map(|(c, m)| format!("{c}*{m}")).collect();
        if terms.is_empty() { "x".to_string() } else { terms.join(" + ") }
    });
    prop::collection::vec(form, 1..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn cache_is_transparent(center in arb_center(), which in 0usize..13) {
        let refs: Vec<&str> = center.iter().map(String::as_str).collect();
        let mut spec = ProblemSpec::new(&["x", "y"], &refs);
        spec.cutoff = 4;
        let cmd = Command::all()[which];
        let dir = tempfile::tempdir().unwrap();
        let plain = run_command(&spec, cmd).map(|r| r.render(false)).map_err(|e| e.to_string());
        for _ in 0..2 {
            let store = Rc::new(DiskCache::new(dir.path()));
            let cached = run_command_with_store(&spec, cmd, store).map(|r| r.render(false)).map_err(|e| e.to_string());
            prop_assert_eq!(&cached, &plain);
        }
    }
}
