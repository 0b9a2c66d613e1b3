//! Search for a precedence orienting a rewrite system, then re-check it.
//!
//! ```bash
//! cargo run -p lpo --example prove_trs
//! cargo run -p lpo --example prove_trs -- crates/core/fixtures/ackermann.trs
//! ```

use lpo::io::{format_witness, parse_trs};
use lpo::oracle::decrease_check;
use lpo::prover::{check_witness, solve, trs_constraint, SolveResult, SolverConfig};

const DEFAULT: &str = "(VAR x y z)
(RULES
  *(x,+(y,z)) -> +(*(x,y),*(x,z))
  *(+(x,y),z) -> +(*(x,z),*(y,z))
)";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => DEFAULT.to_owned(),
    };
    let trs = parse_trs(&text).unwrap_or_else(|e| panic!("parse error: {e}"));
    println!("constraint: {}", trs_constraint(&trs));

    match solve(&trs, &SolverConfig::default()).unwrap() {
        SolveResult::Witness(w) => {
            print!("YES\n{}", format_witness(&trs, &w));
            println!("re-checked: {:?}", check_witness(&trs, &w.precedence).unwrap());
            println!("ground steps: {:?}", decrease_check(&trs, &w.precedence, 2).unwrap());
        }
        SolveResult::Unsat => println!("NO"),
        SolveResult::Timeout => println!("MAYBE"),
    }
}
