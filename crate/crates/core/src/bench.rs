//! Comparison workloads parameterised by a size `k`, and a runner that
//! records wall time and call counts per variant.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lpo::{Comparator, LpoError, Variant};
use crate::precedence::QuasiPrecedence;
use crate::term::{Signature, Symbol, Term};

pub const CSV_HEADER: &str = "family,k,variant,wall_ns,calls,memo_hits";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `d_0 = a`, `d_{k+1} = f(d_k, d_k)`, against the same tree over `b`.
    Dup,
    /// `w(a,...,a,a)` against `w(a,...,a,b)` for a `k`-ary `w`.
    Wide,
    /// Left comb against right comb of a binary symbol over `k` variables.
    Twin,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Dup, Family::Wide, Family::Twin];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Dup => "dup",
            Family::Wide => "wide",
            Family::Twin => "twin",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Family, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family {s:?} (expected dup, wide or twin)"))
    }
}

/// A comparison problem: is `left ≻ right` under `precedence`?
#[derive(Debug, Clone)]
pub struct Instance {
    pub precedence: QuasiPrecedence,
    pub left: Term,
    pub right: Term,
}

fn constant(name: &str) -> Term {
    Term::constant(Symbol::new(name, 0)).expect("nullary")
}

fn a_over_b(extra: Symbol) -> QuasiPrecedence {
    let (a, b) = (Symbol::new("a", 0), Symbol::new("b", 0));
    let sig = Signature::from_symbols([extra, a, b]).expect("distinct symbols");
    let mut p = QuasiPrecedence::empty(&sig);
    p.insert_gt(a, b).expect("fresh precedence");
    p
}

pub fn instance(family: Family, k: usize) -> Instance {
    match family {
        Family::Dup => {
            let f = Symbol::new("f", 2);
            let tower = |leaf: Term| (0..k).fold(leaf, |t, _| Term::app(f, vec![t.clone(), t]).expect("arity"));
            Instance {
                precedence: a_over_b(f),
                left: tower(constant("a")),
                right: tower(constant("b")),
            }
        }
        Family::Wide => {
            let w = Symbol::new(&format!("w{k}"), k.max(1));
            let row = |last: &str| {
                let mut args = vec![constant("a"); w.arity() - 1];
                args.push(constant(last));
                Term::app(w, args).expect("arity")
            };
            Instance {
                precedence: a_over_b(w),
                left: row("a"),
                right: row("b"),
            }
        }
        Family::Twin => {
            let star = Symbol::new("*", 2);
            let leaves: Vec<Term> = (0..k.max(1)).map(|i| Term::var(&format!("x{i}"))).collect();
            let join = |l: Term, r: Term| Term::app(star, vec![l, r]).expect("arity");
            let left = leaves[1..].iter().cloned().fold(leaves[0].clone(), join);
            let mut rev = leaves.iter().rev().cloned();
            let last = rev.next().expect("non-empty");
            let right = rev.fold(last, |acc, x| join(x, acc));
            let sig = Signature::from_symbols([star]).expect("one symbol");
            Instance {
                precedence: QuasiPrecedence::empty(&sig),
                left,
                right,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub family: Family,
    pub k: usize,
    pub variant: Variant,
    pub wall_ns: u128,
    pub calls: u64,
    pub memo_hits: u64,
    pub result: bool,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family,
            self.k,
            self.variant.as_str(),
            self.wall_ns,
            self.calls,
            self.memo_hits
        )
    }
}

/// Runs one strict comparison, timing only the comparison itself.
pub fn measure(family: Family, k: usize, variant: Variant, depth_cap: usize) -> Result<BenchRow, LpoError> {
    let inst = instance(family, k);
    let mut cmp = Comparator::new(&inst.precedence, variant).with_depth_cap(depth_cap);
    let start = Instant::now();
    let result = cmp.gt(&inst.left, &inst.right)?;
    let wall_ns = start.elapsed().as_nanos();
    let stats = cmp.stats();
    Ok(BenchRow {
        family,
        k,
        variant,
        wall_ns,
        calls: stats.calls,
        memo_hits: stats.memo_hits,
        result,
    })
}

/// Measures every `(k, variant)` pair one after another. The execution order
/// is shuffled by `seed`; the returned rows are sorted by `k`, then variant.
pub fn run(
    family: Family,
    ks: &[usize],
    variants: &[Variant],
    seed: u64,
    depth_cap: usize,
) -> Result<Vec<BenchRow>, LpoError> {
    let mut jobs: Vec<(usize, Variant)> = ks
        .iter()
        .flat_map(|&k| variants.iter().map(move |&v| (k, v)))
        .collect();
    jobs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut rows = jobs
        .into_iter()
        .map(|(k, v)| measure(family, k, v, depth_cap))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by_key(|r| (r.k, r.variant as u8));
    Ok(rows)
}
