//! Orientability of rewrite systems by the lexicographic path order.
//!
//! [`solve`] builds one shared [`PrecConstraint`] for all rules and searches
//! for a quasi-precedence satisfying it. Any precedence it reports is
//! re-checked rule by rule with the naive comparison before it is returned.

mod constraint;
mod solver;

pub use constraint::{gen_constraints, Atom, ConstraintBuilder, FormulaId, PrecConstraint};

use std::fmt;

use thiserror::Error;

use crate::lpo::{Comparator, LpoError, Variant, DEFAULT_DEPTH_CAP};
use crate::precedence::QuasiPrecedence;
use crate::term::{Signature, Term, Var};
use solver::{Search, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("left-hand side is a variable")]
    VarLhs,
    #[error("variable {0} occurs on the right but not on the left")]
    ExtraVarRhs(Var),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("malformed rewrite system: {0}")]
    MalformedTrs(String),
    #[error("symbol {0} is not in the precedence's signature")]
    UnknownSymbol(String),
    #[error(transparent)]
    Lpo(#[from] LpoError),
    #[error("internal error: found precedence does not orient rule {rule}")]
    UnsoundWitness { rule: usize },
}

/// A rewrite rule `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    lhs: Term,
    rhs: Term,
}

impl Rule {
    pub fn new(lhs: Term, rhs: Term) -> Result<Rule, RuleError> {
        if lhs.is_var() {
            return Err(RuleError::VarLhs);
        }
        let lhs_vars = lhs.vars();
        if let Some(v) = rhs.vars().into_iter().find(|v| !lhs_vars.contains(v)) {
            return Err(RuleError::ExtraVarRhs(v));
        }
        Ok(Rule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// A finite list of rules over a common signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trs {
    signature: Signature,
    rules: Vec<Rule>,
}

impl Trs {
    /// Collects the signature in first-occurrence order (left side before
    /// right side, rule by rule).
    pub fn new(rules: Vec<Rule>) -> Result<Trs, ProverError> {
        let signature = Signature::from_terms(rules.iter().flat_map(|r| [&r.lhs, &r.rhs]))
            .map_err(|e| ProverError::MalformedTrs(e.to_string()))?;
        Ok(Trs { signature, rules })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.rules.iter().flat_map(|r| r.lhs.vars()).collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of branching decisions before giving up.
    pub budget: u64,
    pub depth_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: 1_000_000,
            depth_cap: DEFAULT_DEPTH_CAP,
        }
    }
}

/// A precedence together with the verified orientation of every rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub precedence: QuasiPrecedence,
    pub oriented: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Witness(Witness),
    Unsat,
    Timeout,
}

/// Per rule, whether `lhs ≻ rhs` under `p` (naive comparison).
pub fn check_witness(trs: &Trs, p: &QuasiPrecedence) -> Result<Vec<bool>, ProverError> {
    check_witness_with_cap(trs, p, DEFAULT_DEPTH_CAP)
}

pub fn check_witness_with_cap(
    trs: &Trs,
    p: &QuasiPrecedence,
    depth_cap: usize,
) -> Result<Vec<bool>, ProverError> {
    if let Some(s) = trs.signature.symbols().iter().find(|s| !p.signature().contains(**s)) {
        return Err(ProverError::UnknownSymbol(s.name().to_owned()));
    }
    let mut cmp = Comparator::new(p, Variant::Naive).with_depth_cap(depth_cap);
    trs.rules
        .iter()
        .map(|r| cmp.gt(&r.lhs, &r.rhs).map_err(ProverError::from))
        .collect()
}

/// The conjunction of per-rule constraints.
pub fn trs_constraint(trs: &Trs) -> PrecConstraint {
    let mut b = ConstraintBuilder::new();
    let per_rule: Vec<FormulaId> = trs.rules.iter().map(|r| b.gt(&r.lhs, &r.rhs)).collect();
    let root = b.and(per_rule);
    b.finish(root)
}

/// Searches for a precedence orienting every rule.
pub fn solve(trs: &Trs, cfg: &SolverConfig) -> Result<SolveResult, ProverError> {
    if trs.rules.iter().any(|r| r.lhs == r.rhs) {
        return Ok(SolveResult::Unsat);
    }
    let formula = trs_constraint(trs);
    let mut search = Search::new(&formula, &trs.signature, cfg.budget);
    match search.run(QuasiPrecedence::empty(&trs.signature)) {
        SearchOutcome::Sat(precedence) => {
            let oriented = check_witness_with_cap(trs, &precedence, cfg.depth_cap)?;
            if let Some(rule) = oriented.iter().position(|ok| !ok) {
                return Err(ProverError::UnsoundWitness { rule });
            }
            Ok(SolveResult::Witness(Witness { precedence, oriented }))
        }
        SearchOutcome::Unsat => Ok(SolveResult::Unsat),
        SearchOutcome::Timeout => Ok(SolveResult::Timeout),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_precedence, parse_term, parse_trs};
    use crate::oracle::{enum_precedences, naive_lpo};
    use crate::precedence::SymCmp;
    use crate::term::Symbol;

    fn t(text: &str) -> Term {
        parse_term(text, &["x", "y", "z"]).unwrap()
    }

    const DISTRIBUTIVITY: &str = "(VAR x y z) (RULES *(x,+(y,z)) -> +(*(x,y),*(x,z)) *(+(x,y),z) -> +(*(x,z),*(y,z)))";
    const ACKERMANN: &str =
        "(VAR x y) (RULES ack(0,y) -> s(y) ack(s(x),0) -> ack(x,s(0)) ack(s(x),s(y)) -> ack(x,ack(s(x),y)))";

    #[test]
    fn constraint_examples() {
        let c = gen_constraints(&t("a"), &t("b"));
        assert_eq!(c.as_atom(), Some(Atom::Gt(Symbol::new("a", 0), Symbol::new("b", 0))));
        assert_eq!(c.to_string(), "gt(a,b)");
        assert!(gen_constraints(&t("f(x)"), &t("x")).is_true());
        assert!(gen_constraints(&t("x"), &t("y")).is_false());
    }

    #[test]
    fn commutativity_constraint_has_no_model() {
        let (l, r) = (t("+(x,y)"), t("+(y,x)"));
        let c = gen_constraints(&l, &r);
        let sig = Signature::from_terms([&l]).unwrap();
        let all = enum_precedences(&sig).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|p| !c.evaluate(p)));
    }

    #[test]
    fn solve_examples() {
        let cfg = SolverConfig::default();
        match solve(&parse_trs("(VAR x) (RULES f(x) -> x)").unwrap(), &cfg).unwrap() {
            SolveResult::Witness(w) => {
                assert_eq!(w.precedence, QuasiPrecedence::empty(w.precedence.signature()));
                assert_eq!(w.oriented, [true]);
            }
            other => panic!("{other:?}"),
        }
        let comm = parse_trs("(VAR x y) (RULES +(x,y) -> +(y,x))").unwrap();
        assert_eq!(solve(&comm, &cfg).unwrap(), SolveResult::Unsat);
    }

    fn witness(text: &str) -> (Trs, Witness) {
        let trs = parse_trs(text).unwrap();
        match solve(&trs, &SolverConfig::default()).unwrap() {
            SolveResult::Witness(w) => (trs, w),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn distributivity_witness() {
        let (trs, w) = witness(DISTRIBUTIVITY);
        let sig = trs.signature();
        let (times, plus) = (sig.get("*").unwrap(), sig.get("+").unwrap());
        assert_eq!(w.precedence.cmp(times, plus), SymCmp::Greater);
        for r in trs.rules() {
            assert_eq!(naive_lpo(&w.precedence, r.lhs(), r.rhs()), Ok(true));
        }
    }

    #[test]
    fn ackermann_witness() {
        let (trs, w) = witness(ACKERMANN);
        let sig = trs.signature();
        assert_eq!(w.precedence.cmp(sig.get("ack").unwrap(), sig.get("s").unwrap()), SymCmp::Greater);
        for r in trs.rules() {
            assert_eq!(naive_lpo(&w.precedence, r.lhs(), r.rhs()), Ok(true));
        }
    }

    #[test]
    fn check_witness_examples() {
        let trs = parse_trs(DISTRIBUTIVITY).unwrap();
        let good = parse_precedence("* > +", trs.signature()).unwrap();
        let bad = parse_precedence("+ > *", trs.signature()).unwrap();
        let expected: Vec<bool> = trs
            .rules()
            .iter()
            .map(|r| naive_lpo(&good, r.lhs(), r.rhs()).unwrap())
            .collect();
        assert_eq!(expected, [true, true]);
        assert_eq!(check_witness(&trs, &good).unwrap(), expected);
        assert!(check_witness(&trs, &bad).unwrap().contains(&false));

        let empty = parse_trs("(RULES )").unwrap();
        assert_eq!(check_witness(&empty, &QuasiPrecedence::empty(empty.signature())).unwrap(), Vec::<bool>::new());
    }

    #[test]
    fn check_witness_needs_every_symbol() {
        let trs = parse_trs(DISTRIBUTIVITY).unwrap();
        let other = Signature::from_symbols([Symbol::new("*", 2)]).unwrap();
        assert_eq!(
            check_witness(&trs, &QuasiPrecedence::empty(&other)),
            Err(ProverError::UnknownSymbol("+".into()))
        );
    }

    #[test]
    fn trivial_rule_is_unsat() {
        let trs = parse_trs("(VAR x) (RULES f(x) -> f(x))").unwrap();
        assert_eq!(solve(&trs, &SolverConfig::default()).unwrap(), SolveResult::Unsat);
    }

    #[test]
    fn tiny_budget_times_out() {
        let trs = parse_trs(ACKERMANN).unwrap();
        let cfg = SolverConfig { budget: 1, ..SolverConfig::default() };
        assert!(matches!(solve(&trs, &cfg).unwrap(), SolveResult::Timeout | SolveResult::Witness(_)));
    }

    #[test]
    fn rule_invariants() {
        assert_eq!(Rule::new(t("x"), t("a")), Err(RuleError::VarLhs));
        assert_eq!(Rule::new(t("f(x)"), t("y")), Err(RuleError::ExtraVarRhs(Var::new("y"))));
    }
}
