//! Seedable generators for property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::precedence::QuasiPrecedence;
use crate::term::{Signature, Substitution, Term, Var};

/// A random term with at most `max_size` nodes. Needs at least one constant
/// or variable to close the term.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, vars: &[Var], max_size: usize) -> Term {
    let leaves = sig.constants().count() + vars.len();
    assert!(leaves > 0, "no constants or variables to build leaves from");
    let budget = rng.random_range(1..=max_size.max(1));
    grow(rng, sig, vars, budget)
}

fn leaf<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, vars: &[Var]) -> Term {
    let constants: Vec<_> = sig.constants().collect();
    let k = rng.random_range(0..constants.len() + vars.len());
    match constants.get(k) {
        Some(&c) => Term::constant(c).expect("nullary"),
        None => Term::from_var(vars[k - constants.len()]),
    }
}

fn grow<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, vars: &[Var], budget: usize) -> Term {
    let fitting: Vec<_> = sig
        .symbols()
        .iter()
        .copied()
        .filter(|f| f.arity() >= 1 && f.arity() < budget)
        .collect();
    if fitting.is_empty() || rng.random_bool(0.25) {
        return leaf(rng, sig, vars);
    }
    let f = fitting[rng.random_range(0..fitting.len())];
    // split budget - 1 into arity positive parts
    let mut shares = vec![1; f.arity()];
    for _ in 0..(budget - 1 - f.arity()) {
        let i = rng.random_range(0..shares.len());
        shares[i] += 1;
    }
    let args = shares.into_iter().map(|b| grow(rng, sig, vars, b)).collect();
    Term::app(f, args).expect("arity")
}

/// A random partial quasi-precedence (possibly empty).
pub fn random_precedence<R: Rng + ?Sized>(rng: &mut R, sig: &Signature) -> QuasiPrecedence {
    let mut p = QuasiPrecedence::empty(sig);
    let syms = sig.symbols();
    if syms.len() < 2 {
        return p;
    }
    for _ in 0..rng.random_range(0..=syms.len() * 2) {
        let f = syms[rng.random_range(0..syms.len())];
        let g = syms[rng.random_range(0..syms.len())];
        let _ = if rng.random_bool(0.2) {
            p.insert_eq(f, g)
        } else {
            p.insert_gt(f, g)
        };
    }
    p
}

/// A random total quasi-precedence: a shuffled chain of blocks, merging a
/// symbol into the previous block when arities allow and a coin says so.
pub fn random_total_precedence<R: Rng + ?Sized>(rng: &mut R, sig: &Signature) -> QuasiPrecedence {
    let mut syms = sig.symbols().to_vec();
    syms.shuffle(rng);
    let mut p = QuasiPrecedence::empty(sig);
    for pair in syms.windows(2) {
        let (above, below) = (pair[0], pair[1]);
        if above.arity() == below.arity() && rng.random_bool(0.3) {
            p.insert_eq(above, below).expect("adjacent blocks are unrelated");
        } else {
            p.insert_gt(above, below).expect("chain is acyclic");
        }
    }
    p
}

pub fn random_substitution<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    vars: &[Var],
    max_size: usize,
) -> Substitution {
    let mut sigma = Substitution::new();
    for &v in vars {
        if rng.random_bool(0.7) {
            sigma.insert(v, random_term(rng, sig, vars, max_size));
        }
    }
    sigma
}

/// A random one-hole context as a term and the position of its hole; the
/// hole is occupied by the variable `hole`.
pub fn random_context<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    vars: &[Var],
    max_depth: usize,
    hole: Var,
) -> (Term, Vec<usize>) {
    let wrappers: Vec<_> = sig.symbols().iter().copied().filter(|f| f.arity() >= 1).collect();
    let mut term = Term::from_var(hole);
    let mut pos = Vec::new();
    if wrappers.is_empty() {
        return (term, pos);
    }
    for _ in 0..rng.random_range(0..=max_depth) {
        let f = wrappers[rng.random_range(0..wrappers.len())];
        let at = rng.random_range(0..f.arity());
        let args = (0..f.arity())
            .map(|i| {
                if i == at {
                    term.clone()
                } else {
                    random_term(rng, sig, vars, 3)
                }
            })
            .collect();
        term = Term::app(f, args).expect("arity");
        pos.insert(0, at);
    }
    (term, pos)
}
