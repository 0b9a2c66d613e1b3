mod common;

use lpo::io::parse_trs;
use lpo::oracle::{decrease_check, enum_precedences, random_term, NaiveOracle};
use lpo::prover::{check_witness, solve, Rule, SolveResult, SolverConfig, Trs};
use lpo::term::Term;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{signature, vars};

/// A random system over at most three symbols. Right-hand sides only use
/// variables of their left-hand side.
fn random_trs(seed: u64) -> Trs {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sig = signature(&[("f", 2), ("g", 1), ("a", 0)]);
    let vs = vars(&["x", "y"]);
    let rules = (0..rng.random_range(1..=3))
        .map(|_| loop {
            let l = random_term(&mut rng, &sig, &vs, 6);
            let lv: Vec<_> = l.vars().into_iter().collect();
            if l.is_var() || (lv.is_empty() && sig.constants().next().is_none()) {
                continue;
            }
            let r = random_term(&mut rng, &sig, &lv, 5);
            if let Ok(rule) = Rule::new(l, r) {
                break rule;
            }
        })
        .collect();
    Trs::new(rules).unwrap()
}

fn orientable_by_enumeration(trs: &Trs) -> bool {
    enum_precedences(trs.signature()).unwrap().iter().any(|p| {
        let o = NaiveOracle::new(p);
        trs.rules().iter().all(|r| o.greater(r.lhs(), r.rhs()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn solve_agrees_with_brute_force(seed in any::<u64>()) {
        let trs = random_trs(seed);
        let expected = orientable_by_enumeration(&trs);
        match solve(&trs, &SolverConfig::default()).unwrap() {
            SolveResult::Witness(w) => {
                prop_assert!(expected);
                prop_assert!(check_witness(&trs, &w.precedence).unwrap().iter().all(|&b| b));
                prop_assert!(decrease_check(&trs, &w.precedence, 1).unwrap().holds());
            }
            SolveResult::Unsat => prop_assert!(!expected),
            SolveResult::Timeout => prop_assert!(false, "timeout on a tiny system"),
        }
    }

    #[test]
    fn solve_is_deterministic(seed in any::<u64>()) {
        let trs = random_trs(seed);
        let cfg = SolverConfig::default();
        prop_assert_eq!(solve(&trs, &cfg).unwrap(), solve(&trs, &cfg).unwrap());
    }
}

#[test]
fn witness_survives_decrease_check_on_fixtures() {
    for name in ["distributivity.trs", "ackermann.trs"] {
        let text = std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap();
        let trs = parse_trs(&text).unwrap();
        let SolveResult::Witness(w) = solve(&trs, &SolverConfig::default()).unwrap() else {
            panic!("{name} not proved");
        };
        let d = decrease_check(&trs, &w.precedence, 2).unwrap();
        assert!(d.holds(), "{name}: {d:?}");
    }
}

#[test]
fn budget_exhaustion_is_maybe_not_no() {
    let text = std::fs::read_to_string(format!("{}/fixtures/ackermann.trs", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let trs = parse_trs(&text).unwrap();
    let cfg = SolverConfig { budget: 1, ..SolverConfig::default() };
    assert_ne!(solve(&trs, &cfg).unwrap(), SolveResult::Unsat);
}

#[test]
fn rules_with_equal_sides_are_unsat() {
    let t = Term::var("x");
    assert!(Rule::new(t.clone(), t).is_err());
    let trs = parse_trs("(RULES a -> a)").unwrap();
    assert_eq!(solve(&trs, &SolverConfig::default()).unwrap(), SolveResult::Unsat);
}
