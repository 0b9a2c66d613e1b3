use crate::precedence::QuasiPrecedence;
use crate::term::{Signature, Symbol, Term, Var};

use super::OracleError;

/// What to enumerate: every term over `signature` and `vars` with at most
/// `max_size` nodes, optionally truncated after `max_count` terms.
#[derive(Debug, Clone)]
pub struct EnumSpec {
    pub signature: Signature,
    pub vars: Vec<Var>,
    pub max_size: usize,
    pub max_count: Option<usize>,
}

impl EnumSpec {
    pub fn new(signature: Signature, vars: Vec<Var>, max_size: usize) -> EnumSpec {
        EnumSpec {
            signature,
            vars,
            max_size,
            max_count: None,
        }
    }
}

/// Terms in canonical order: by size, then head (symbols in declaration
/// order, then variables), then arguments lexicographically.
pub struct TermEnumerator {
    spec: EnumSpec,
    // levels[n] holds the terms of size exactly n
    levels: Vec<Vec<Term>>,
    size: usize,
    index: usize,
    emitted: usize,
}

pub fn enum_terms(spec: EnumSpec) -> TermEnumerator {
    TermEnumerator {
        spec,
        levels: vec![Vec::new()],
        size: 0,
        index: 0,
        emitted: 0,
    }
}

fn tuples(levels: &[Vec<Term>], arity: usize, budget: usize) -> Vec<Vec<Term>> {
    if arity == 0 {
        return if budget == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=budget.saturating_sub(arity - 1) {
        let rests = tuples(levels, arity - 1, budget - first);
        if rests.is_empty() {
            continue;
        }
        for t in &levels[first] {
            for rest in &rests {
                let mut tuple = Vec::with_capacity(arity);
                tuple.push(t.clone());
                tuple.extend(rest.iter().cloned());
                out.push(tuple);
            }
        }
    }
    out
}

impl TermEnumerator {
    fn build_level(&mut self, n: usize) {
        let mut level = Vec::new();
        for &f in self.spec.signature.symbols() {
            if f.arity() == 0 {
                if n == 1 {
                    level.push(Term::constant(f).expect("nullary"));
                }
            } else if n > f.arity() {
                for args in tuples(&self.levels, f.arity(), n - 1) {
                    level.push(Term::app(f, args).expect("arity"));
                }
            }
        }
        if n == 1 {
            level.extend(self.spec.vars.iter().map(|&v| Term::from_var(v)));
        }
        self.levels.push(level);
    }
}

impl Iterator for TermEnumerator {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        if self.spec.max_count.is_some_and(|m| self.emitted >= m) {
            return None;
        }
        loop {
            if let Some(t) = self.levels.get(self.size).and_then(|l| l.get(self.index)) {
                self.index += 1;
                self.emitted += 1;
                return Some(t.clone());
            }
            if self.size >= self.spec.max_size {
                return None;
            }
            self.size += 1;
            self.index = 0;
            if self.levels.len() <= self.size {
                self.build_level(self.size);
            }
        }
    }
}

pub const MAX_ENUM_SIGNATURE: usize = 5;

/// Every total quasi-precedence over `sig`: ordered partitions of the
/// symbols into blocks of equal arity.
pub fn enum_precedences(sig: &Signature) -> Result<Vec<QuasiPrecedence>, OracleError> {
    if sig.len() > MAX_ENUM_SIGNATURE {
        return Err(OracleError::SignatureTooLarge {
            size: sig.len(),
            max: MAX_ENUM_SIGNATURE,
        });
    }
    let symbols = sig.symbols().to_vec();
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    ordered_partitions(&symbols, (1u32 << symbols.len()) - 1, &mut blocks, &mut |blocks| {
        out.push(precedence_from_blocks(sig, &symbols, blocks));
    });
    Ok(out)
}

fn ordered_partitions(
    symbols: &[Symbol],
    remaining: u32,
    blocks: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        emit(blocks);
        return;
    }
    // walk all non-empty submasks of `remaining` in increasing order
    let mut sub: u32 = 0;
    loop {
        sub = (sub.wrapping_sub(remaining)) & remaining;
        if sub == 0 {
            break;
        }
        let mut members = (0..symbols.len()).filter(|i| sub & (1 << i) != 0);
        let first = members.next().expect("non-empty");
        if members.all(|i| symbols[i].arity() == symbols[first].arity()) {
            blocks.push(sub);
            ordered_partitions(symbols, remaining & !sub, blocks, emit);
            blocks.pop();
        }
    }
}

fn precedence_from_blocks(sig: &Signature, symbols: &[Symbol], blocks: &[u32]) -> QuasiPrecedence {
    let mut p = QuasiPrecedence::empty(sig);
    let leader = |b: u32| symbols[b.trailing_zeros() as usize];
    for &b in blocks {
        for (i, &s) in symbols.iter().enumerate() {
            if b & (1 << i) != 0 {
                p.insert_eq(leader(b), s).expect("equal arity within a block");
            }
        }
    }
    for pair in blocks.windows(2) {
        p.insert_gt(leader(pair[0]), leader(pair[1])).expect("blocks form a chain");
    }
    p
}
