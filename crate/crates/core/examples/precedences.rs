//! Building quasi-precedences incrementally, and what gets rejected.
//!
//! ```bash
//! cargo run -p lpo --example precedences
//! ```

use lpo::precedence::QuasiPrecedence;
use lpo::term::{Signature, Symbol};

fn main() {
    let (ack, s, t, zero) = (Symbol::new("ack", 2), Symbol::new("s", 1), Symbol::new("t", 1), Symbol::new("0", 0));
    let sig = Signature::from_symbols([ack, s, t, zero]).unwrap();

    let mut p = QuasiPrecedence::empty(&sig);
    p.insert_gt(ack, s).unwrap();
    p.insert_eq(s, t).unwrap();
    println!("partial:   {p}  (total: {})", p.is_total());
    p.insert_gt(t, zero).unwrap();
    println!("extended:  {p}  (total: {})", p.is_total());

    if let Err(e) = p.insert_gt(zero, ack) {
        println!("0 > ack rejected: {e}");
    }
    if let Err(e) = p.insert_eq(ack, s) {
        println!("ack ~ s rejected: {e}");
    }

    let q = QuasiPrecedence::empty(&sig).assert_gt(s, zero).unwrap();
    println!("before linearize: {q}");
    println!("linearized:       {}", q.linearize());
    println!("classes: {:?}", p.classes());
}
