//! The precedence constraint under which one term is greater than another.
//!
//! ```bash
//! cargo run -p lpo --example constraints
//! ```

use lpo::io::parse_term;
use lpo::oracle::enum_precedences;
use lpo::prover::gen_constraints;
use lpo::term::Signature;

fn main() {
    let vars = ["x", "y"];
    for (l, r) in [("a", "b"), ("f(x)", "x"), ("x", "y"), ("f(g(x))", "g(f(x))"), ("+(x,y)", "+(y,x)")] {
        let (s, t) = (parse_term(l, &vars).unwrap(), parse_term(r, &vars).unwrap());
        let c = gen_constraints(&s, &t);
        let sig = Signature::from_terms([&s, &t]).unwrap();
        let all = enum_precedences(&sig).unwrap();
        let models = all.iter().filter(|p| c.evaluate(p)).count();
        println!("{s} > {t}: {c}   ({models}/{} total precedences satisfy it)", all.len());
    }
}
