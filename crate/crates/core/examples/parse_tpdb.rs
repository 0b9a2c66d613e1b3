//! Reading and writing the `.trs` format, with positioned errors.
//!
//! ```bash
//! cargo run -p lpo --example parse_tpdb
//! ```

use lpo::io::{format_trs, parse_term, parse_trs};

fn main() {
    let text = "(COMMENT list append)
(VAR x xs ys)
(RULES
  app(nil,ys) -> ys
  app(cons(x,xs),ys) -> cons(x,app(xs,ys))
)";
    let trs = parse_trs(text).unwrap();
    let arities: Vec<String> = trs.signature().symbols().iter().map(|s| format!("{}/{}", s.name(), s.arity())).collect();
    println!("signature: {}", arities.join(" "));
    print!("{}", format_trs(&trs));

    for bad in [
        "(RULES a - b)",
        "(VAR x) (RULES f(x) -> f(x,x))",
        "(VAR x) (RULES x -> a)",
        "(VAR x) (RULES f(x) -> x | x == a)",
        "<?xml version=\"1.0\"?><problem/>",
    ] {
        println!("{bad:?}\n  -> {}", parse_trs(bad).unwrap_err());
    }
    println!("{:?}", parse_term("f(", &[] as &[&str]).unwrap_err().to_string());
}
