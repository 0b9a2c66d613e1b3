//! Lexicographic path orders on first-order terms.
//!
//! * [`term`]: hash-consed terms, signatures, substitutions, embedding.
//! * [`precedence`]: partial quasi-precedences on function symbols.
//! * [`lpo`]: the order itself, in naive, improved and memoized variants.
//! * [`prover`]: searching for a precedence that orients a rewrite system.
//! * [`io`]: the TPDB `.trs` text format and precedence syntax.
//! * [`oracle`]: brute-force references used by the test suites.
//! * [`bench`] and [`cli`]: the `lpo` binary.

pub mod bench;
pub mod cli;
pub mod io;
pub mod lpo;
pub mod oracle;
pub mod precedence;
pub mod prover;
pub mod term;

pub use lpo::{compare, lpo_eq, lpo_geq, lpo_gt, Comparator, OrderResult, Variant};
pub use precedence::{QuasiPrecedence, SymCmp};
pub use prover::{solve, Rule, SolveResult, SolverConfig, Trs, Witness};
pub use term::{Signature, Substitution, Symbol, Term, Var};
