//! Brute-force references for testing: a definitional comparison written
//! independently of [`crate::lpo`], exhaustive enumerators, random
//! generators and a bounded check that rewrite steps decrease.

mod decrease;
mod enumerate;
mod naive;
mod random;

use thiserror::Error;

pub use decrease::{decrease_check, Counterexample, Decrease};
pub use enumerate::{enum_precedences, enum_terms, EnumSpec, TermEnumerator, MAX_ENUM_SIGNATURE};
pub use naive::{naive_lpo, NaiveOracle};
pub use random::{random_context, random_precedence, random_substitution, random_term, random_total_precedence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("recursion depth exceeded cap {cap}")]
    DepthExceeded { cap: usize },
    #[error("signature has {size} symbols, enumeration supports at most {max}")]
    SignatureTooLarge { size: usize, max: usize },
    #[error("rule {rule} is not oriented by the precedence")]
    PreconditionFailed { rule: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{Signature, Symbol, Var};

    fn sig(syms: &[(&str, usize)]) -> Signature {
        Signature::from_symbols(syms.iter().map(|&(n, a)| Symbol::new(n, a))).unwrap()
    }

    fn names(spec: EnumSpec) -> Vec<String> {
        enum_terms(spec).map(|t| t.to_string()).collect()
    }

    #[test]
    fn enumerates_small_sets() {
        assert_eq!(names(EnumSpec::new(sig(&[("a", 0)]), vec![Var::new("x")], 1)), ["a", "x"]);
        assert_eq!(names(EnumSpec::new(sig(&[("g", 1), ("a", 0)]), vec![], 2)), ["a", "g(a)"]);
    }

    #[test]
    fn binary_tree_count() {
        // full binary trees with n internal nodes have 2n+1 nodes: Catalan numbers
        fn catalan(n: u64) -> u64 {
            (0..n).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
        }
        let expected: u64 = (0..=2).map(catalan).sum();
        let got = enum_terms(EnumSpec::new(sig(&[("f", 2), ("a", 0)]), vec![], 5)).count();
        assert_eq!(got as u64, expected);
    }

    #[test]
    fn max_count_truncates() {
        let mut spec = EnumSpec::new(sig(&[("f", 2), ("a", 0)]), vec![Var::new("x")], 7);
        spec.max_count = Some(5);
        assert_eq!(enum_terms(spec).count(), 5);
    }

    #[test]
    fn precedence_counts() {
        assert_eq!(enum_precedences(&sig(&[("a", 0)])).unwrap().len(), 1);
        assert_eq!(enum_precedences(&sig(&[("f", 1), ("a", 0)])).unwrap().len(), 2);
        // ordered set partitions of three elements, counted by blocks:
        // one block 1, two blocks 3 * 2, three blocks 3!
        assert_eq!(enum_precedences(&sig(&[("a", 0), ("b", 0), ("c", 0)])).unwrap().len(), 1 + 6 + 6);
    }

    #[test]
    fn precedences_are_total_and_distinct() {
        let all = enum_precedences(&sig(&[("f", 2), ("g", 1), ("a", 0), ("b", 0)])).unwrap();
        assert!(all.iter().all(|p| p.is_total()));
        for (i, p) in all.iter().enumerate() {
            assert!(all[..i].iter().all(|q| q != p));
        }
    }

    #[test]
    fn large_signature_is_refused() {
        let names = ["a", "b", "c", "d", "e", "f"];
        let s = sig(&names.map(|n| (n, 0)));
        assert_eq!(
            enum_precedences(&s).unwrap_err(),
            OracleError::SignatureTooLarge { size: 6, max: 5 }
        );
    }

    #[test]
    fn naive_oracle_basics() {
        let s = sig(&[("a", 0), ("b", 0), ("f", 1)]);
        let mut p = crate::precedence::QuasiPrecedence::empty(&s);
        p.insert_gt(Symbol::new("a", 0), Symbol::new("b", 0)).unwrap();
        let a = crate::term::Term::constant(Symbol::new("a", 0)).unwrap();
        let b = crate::term::Term::constant(Symbol::new("b", 0)).unwrap();
        let fx = crate::term::Term::app(Symbol::new("f", 1), vec![crate::term::Term::var("x")]).unwrap();
        assert_eq!(naive_lpo(&p, &a, &b), Ok(true));
        assert_eq!(naive_lpo(&p, &b, &a), Ok(false));
        assert_eq!(naive_lpo(&p, &fx, &crate::term::Term::var("x")), Ok(true));
    }
}
