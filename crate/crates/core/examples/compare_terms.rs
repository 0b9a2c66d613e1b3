//! Compare terms under a precedence with each comparison variant.
//!
//! ```bash
//! cargo run -p lpo --example compare_terms
//! ```

use lpo::io::{parse_precedence, parse_term};
use lpo::lpo::{Comparator, Variant};
use lpo::term::Signature;

fn main() {
    let vars = ["x", "y", "z"];
    let pairs = [
        ("*(x,+(y,z))", "+(*(x,y),*(x,z))", "* > +"),
        ("+(*(x,y),*(x,z))", "*(x,+(y,z))", "+ > *"),
        ("f(f(x))", "f(x)", ""),
        ("+(x,y)", "+(y,x)", ""),
        ("f(a)", "g(a)", "f ~ g"),
    ];
    for (left, right, order) in pairs {
        let s = parse_term(left, &vars).unwrap();
        let t = parse_term(right, &vars).unwrap();
        let sig = Signature::from_terms([&s, &t]).unwrap();
        let prec = parse_precedence(order, &sig).unwrap();

        print!("{s:<16} vs {t:<18} [{prec}]");
        for variant in Variant::ALL {
            let mut cmp = Comparator::new(&prec, variant);
            let result = cmp.compare(&s, &t).unwrap();
            print!("  {}={result} ({} calls)", variant.as_str(), cmp.stats().calls);
        }
        println!();
    }
}
