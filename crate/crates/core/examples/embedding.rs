//! Homeomorphic embedding between terms.
//!
//! ```bash
//! cargo run -p lpo --example embedding
//! ```

use lpo::io::parse_term;
use lpo::term::{embed_geq, embed_gt};

fn main() {
    let cases = [
        ("f(g(a),b)", "f(a,b)"),
        ("f(g(a),b)", "g(a)"),
        ("f(a,b)", "f(b,a)"),
        ("g(f(x,y))", "f(x,y)"),
        ("x", "x"),
    ];
    for (s, t) in cases {
        let (s, t) = (parse_term(s, &["x", "y"]).unwrap(), parse_term(t, &["x", "y"]).unwrap());
        println!("{s} embeds {t}: {}  strictly: {}", embed_geq(&s, &t), embed_gt(&s, &t));
    }
}
