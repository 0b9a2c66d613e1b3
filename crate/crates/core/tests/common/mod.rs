#![allow(dead_code)]

use lpo::precedence::QuasiPrecedence;
use lpo::term::{Signature, Symbol, Term, TermView, Var};
use rand::Rng;

pub fn signature(symbols: &[(&str, usize)]) -> Signature {
    Signature::from_symbols(symbols.iter().map(|&(n, a)| Symbol::new(n, a))).unwrap()
}

pub fn vars(names: &[&str]) -> Vec<Var> {
    names.iter().map(|n| Var::new(n)).collect()
}

/// A term that `s` embeds: at each node either descend into one argument or
/// keep the head and shrink every argument.
pub fn shrink<R: Rng>(rng: &mut R, s: &Term) -> Term {
    match s.view() {
        TermView::Var(_) => s.clone(),
        TermView::App(f, args) => {
            if !args.is_empty() && rng.random_bool(0.3) {
                let i = rng.random_range(0..args.len());
                shrink(rng, &args[i])
            } else {
                let args = args.iter().map(|a| shrink(rng, a)).collect();
                Term::app(f, args).unwrap()
            }
        }
    }
}

/// Replaces symbols by random members of their equivalence class.
pub fn swap_equivalents<R: Rng>(rng: &mut R, p: &QuasiPrecedence, s: &Term) -> Term {
    match s.view() {
        TermView::Var(_) => s.clone(),
        TermView::App(f, args) => {
            let class = p.classes().into_iter().find(|c| c.contains(&f)).unwrap_or_else(|| vec![f]);
            let g = class[rng.random_range(0..class.len())];
            let args = args.iter().map(|a| swap_equivalents(rng, p, a)).collect();
            Term::app(g, args).unwrap()
        }
    }
}

/// Independent count of terms of size exactly `n` over the given arities,
/// with `leaves` nullary choices (constants plus variables).
pub fn count_terms(arities: &[usize], leaves: u64, n: usize) -> u64 {
    // forests[k][m]: ordered lists of k terms with total size m
    let mut exact = vec![0u64; n + 1];
    for size in 1..=n {
        if size == 1 {
            exact[1] = leaves;
            continue;
        }
        let mut total = 0;
        for &a in arities.iter().filter(|&&a| a > 0) {
            total += forests(&exact, a, size - 1);
        }
        exact[size] = total;
    }
    exact[n]
}

fn forests(exact: &[u64], k: usize, m: usize) -> u64 {
    if k == 0 {
        return u64::from(m == 0);
    }
    (1..=m).map(|first| exact[first] * forests(exact, k - 1, m - first)).sum()
}
