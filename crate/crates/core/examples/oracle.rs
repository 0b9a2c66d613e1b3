//! The brute-force references: term and precedence enumeration, and the
//! definitional comparison checked against the engine.
//!
//! ```bash
//! cargo run -p lpo --example oracle
//! ```

use lpo::lpo::{compare, Variant};
use lpo::oracle::{enum_precedences, enum_terms, naive_lpo, EnumSpec};
use lpo::term::{Signature, Symbol, Var};

fn main() {
    let sig = Signature::from_symbols([Symbol::new("f", 2), Symbol::new("g", 1), Symbol::new("a", 0)]).unwrap();
    let spec = EnumSpec::new(sig.clone(), vec![Var::new("x")], 4);
    let terms: Vec<_> = enum_terms(spec).collect();
    let shown: Vec<String> = terms.iter().take(12).map(|t| t.to_string()).collect();
    println!("{} terms up to size 4, first: {}", terms.len(), shown.join(" "));

    let precs = enum_precedences(&sig).unwrap();
    println!("{} total precedences:", precs.len());
    for p in &precs {
        println!("  {p}");
    }

    let mut agree = 0;
    for p in &precs {
        for s in &terms {
            for t in &terms {
                let oracle = naive_lpo(p, s, t).unwrap();
                let engine = compare(p, s, t, Variant::Memoized).unwrap() == lpo::OrderResult::Gt;
                assert_eq!(oracle, engine, "{s} {t} {p}");
                agree += 1;
            }
        }
    }
    println!("engine and oracle agree on {agree} comparisons");
}
