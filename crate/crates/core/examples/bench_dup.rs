//! Call counts and timings of the three variants on terms with heavy
//! sharing: `d_0 = a`, `d_{k+1} = f(d_k, d_k)` against the same tower over `b`.
//!
//! ```bash
//! cargo run --release -p lpo --example bench_dup
//! ```

use lpo::bench::{self, Family, CSV_HEADER};
use lpo::lpo::{Variant, DEFAULT_DEPTH_CAP};

fn main() {
    let ks: Vec<usize> = (2..=12).step_by(2).collect();
    println!("{CSV_HEADER}");
    for row in bench::run(Family::Dup, &ks, &Variant::ALL, 0, DEFAULT_DEPTH_CAP).unwrap() {
        println!("{}", row.csv());
    }
}
