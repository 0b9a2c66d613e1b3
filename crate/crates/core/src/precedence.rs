//! Quasi-precedences: a strict partial order over equivalence classes of
//! function symbols.
//!
//! Classes are kept in a merge structure whose representative is always the
//! member with the smallest declaration index, and every class carries the
//! bitset of classes strictly below it (the transitive closure), so that
//! [`QuasiPrecedence::cmp`] is two lookups and a bit test.

use std::fmt;

use thiserror::Error;

use crate::term::{Signature, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrecedenceError {
    #[error("ordering {greater} above {smaller} would create a cycle")]
    Cycle { greater: Symbol, smaller: Symbol },
    #[error("cannot make {0} and {1} equivalent: arities differ")]
    Arity(Symbol, Symbol),
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
}

/// Outcome of comparing two symbols under a quasi-precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymCmp {
    Greater,
    Equivalent,
    Less,
    Incomparable,
}

impl SymCmp {
    pub fn reverse(self) -> SymCmp {
        match self {
            SymCmp::Greater => SymCmp::Less,
            SymCmp::Less => SymCmp::Greater,
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> BitSet {
        BitSet(vec![0; bits.div_ceil(64)])
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

/// A quasi-precedence over a fixed signature.
///
/// Values are persistent from the caller's point of view: [`assert_gt`] and
/// [`assert_eq`] return new precedences. The `insert_*` methods mutate in
/// place and leave the value untouched on error.
///
/// [`assert_gt`]: QuasiPrecedence::assert_gt
/// [`assert_eq`]: QuasiPrecedence::assert_eq
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPrecedence {
    signature: Signature,
    // (global symbol id, declaration index), sorted by id
    lookup: Vec<(u32, u32)>,
    class_of: Vec<usize>,
    below: Vec<BitSet>,
}

impl QuasiPrecedence {
    /// Every symbol in its own class, no strict edges.
    pub fn empty(signature: &Signature) -> QuasiPrecedence {
        let n = signature.len();
        let mut lookup: Vec<(u32, u32)> = signature
            .symbols()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id(), i as u32))
            .collect();
        lookup.sort_unstable();
        QuasiPrecedence {
            signature: signature.clone(),
            lookup,
            class_of: (0..n).collect(),
            below: vec![BitSet::new(n); n],
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    #[inline]
    fn local(&self, s: Symbol) -> Option<usize> {
        let id = s.id();
        if self.lookup.len() <= 8 {
            self.lookup.iter().find(|e| e.0 == id).map(|e| e.1 as usize)
        } else {
            self.lookup
                .binary_search_by_key(&id, |e| e.0)
                .ok()
                .map(|i| self.lookup[i].1 as usize)
        }
    }

    fn local_or_err(&self, s: Symbol) -> Result<usize, PrecedenceError> {
        self.local(s)
            .ok_or_else(|| PrecedenceError::UnknownSymbol(s.name().to_owned()))
    }

    /// Compares two symbols. Symbols outside the signature are equivalent
    /// only to themselves and incomparable to everything else.
    #[inline]
    pub fn cmp(&self, f: Symbol, g: Symbol) -> SymCmp {
        if f == g {
            return SymCmp::Equivalent;
        }
        let (Some(lf), Some(lg)) = (self.local(f), self.local(g)) else {
            return SymCmp::Incomparable;
        };
        let (cf, cg) = (self.class_of[lf], self.class_of[lg]);
        if cf == cg {
            SymCmp::Equivalent
        } else if self.below[cf].contains(cg) {
            SymCmp::Greater
        } else if self.below[cg].contains(cf) {
            SymCmp::Less
        } else {
            SymCmp::Incomparable
        }
    }

    /// Places the class of `f` strictly above the class of `g`.
    pub fn insert_gt(&mut self, f: Symbol, g: Symbol) -> Result<(), PrecedenceError> {
        let cf = self.class_of[self.local_or_err(f)?];
        let cg = self.class_of[self.local_or_err(g)?];
        if cf == cg || self.below[cg].contains(cf) {
            return Err(PrecedenceError::Cycle { greater: f, smaller: g });
        }
        if self.below[cf].contains(cg) {
            return Ok(());
        }
        let mut added = self.below[cg].clone();
        added.insert(cg);
        for c in self.reps() {
            if c == cf || self.below[c].contains(cf) {
                self.below[c].union_with(&added);
            }
        }
        Ok(())
    }

    /// Merges the classes of `f` and `g`.
    pub fn insert_eq(&mut self, f: Symbol, g: Symbol) -> Result<(), PrecedenceError> {
        let lf = self.local_or_err(f)?;
        let lg = self.local_or_err(g)?;
        if f.arity() != g.arity() {
            return Err(PrecedenceError::Arity(f, g));
        }
        let (cf, cg) = (self.class_of[lf], self.class_of[lg]);
        if cf == cg {
            return Ok(());
        }
        if self.below[cf].contains(cg) {
            return Err(PrecedenceError::Cycle { greater: f, smaller: g });
        }
        if self.below[cg].contains(cf) {
            return Err(PrecedenceError::Cycle { greater: g, smaller: f });
        }
        let (keep, gone) = (cf.min(cg), cf.max(cg));
        for c in self.class_of.iter_mut() {
            if *c == gone {
                *c = keep;
            }
        }
        let gone_below = std::mem::replace(&mut self.below[gone], BitSet::new(0));
        self.below[keep].union_with(&gone_below);
        self.below[gone] = BitSet::new(self.class_of.len());
        let mut added = self.below[keep].clone();
        added.insert(keep);
        for c in self.reps() {
            if c != keep && (self.below[c].contains(gone) || self.below[c].contains(keep)) {
                self.below[c].remove(gone);
                self.below[c].union_with(&added);
            }
        }
        Ok(())
    }

    pub fn assert_gt(&self, f: Symbol, g: Symbol) -> Result<QuasiPrecedence, PrecedenceError> {
        let mut next = self.clone();
        next.insert_gt(f, g)?;
        Ok(next)
    }

    pub fn assert_eq(&self, f: Symbol, g: Symbol) -> Result<QuasiPrecedence, PrecedenceError> {
        let mut next = self.clone();
        next.insert_eq(f, g)?;
        Ok(next)
    }

    fn reps(&self) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&i| self.class_of[i] == i).collect()
    }

    /// Equivalence classes, each listed in declaration order, ordered by their
    /// least member.
    pub fn classes(&self) -> Vec<Vec<Symbol>> {
        let syms = self.signature.symbols();
        self.reps()
            .into_iter()
            .map(|r| {
                (0..syms.len())
                    .filter(|&i| self.class_of[i] == r)
                    .map(|i| syms[i])
                    .collect()
            })
            .collect()
    }

    /// Whether every pair of symbols is related (no incomparable pair).
    pub fn is_total(&self) -> bool {
        let reps = self.reps();
        reps.iter().enumerate().all(|(i, &a)| {
            reps[i + 1..]
                .iter()
                .all(|&b| self.below[a].contains(b) || self.below[b].contains(a))
        })
    }

    /// Classes in topological order, ties broken by the least member's
    /// declaration index.
    fn topo_order(&self) -> Vec<usize> {
        let mut remaining = self.reps();
        let mut order = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let pick = remaining
                .iter()
                .position(|&r| !remaining.iter().any(|&c| self.below[c].contains(r)))
                .expect("strict part is acyclic");
            order.push(remaining.remove(pick));
        }
        order
    }

    /// Extends the precedence to a total quasi-order without merging classes.
    pub fn linearize(&self) -> QuasiPrecedence {
        let order = self.topo_order();
        let mut out = self.clone();
        let n = self.class_of.len();
        for (i, &c) in order.iter().enumerate() {
            let mut set = BitSet::new(n);
            for &d in &order[i + 1..] {
                set.insert(d);
            }
            out.below[c] = set;
        }
        out
    }

    /// Immediate strict edges between classes (the Hasse diagram), sorted by
    /// topological position of source then target.
    fn cover_edges(&self, order: &[usize]) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for &a in order {
            for &b in order {
                if self.below[a].contains(b)
                    && !order
                        .iter()
                        .any(|&m| self.below[a].contains(m) && self.below[m].contains(b))
                {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    fn write_class(&self, f: &mut fmt::Formatter<'_>, rep: usize) -> fmt::Result {
        let syms = self.signature.symbols();
        let mut first = true;
        for (i, s) in syms.iter().enumerate() {
            if self.class_of[i] == rep {
                if !first {
                    f.write_str(" ~ ")?;
                }
                f.write_str(s.name())?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Chain syntax: groups separated by `>`, symbols inside a group joined by
/// `~`, independent chains separated by `,`. A total precedence is a single
/// chain such as `ack > s ~ t > 0`.
impl fmt::Display for QuasiPrecedence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = self.topo_order();
        let mut edges = self.cover_edges(&order);
        let mut touched = vec![false; self.class_of.len()];
        let mut first_chain = true;
        let mut separator = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !std::mem::replace(&mut first_chain, false) {
                f.write_str(", ")?;
            }
            Ok(())
        };
        while let Some(start) = order
            .iter()
            .copied()
            .find(|&c| edges.iter().any(|e| e.0 == c))
        {
            separator(f)?;
            self.write_class(f, start)?;
            touched[start] = true;
            let mut current = start;
            while let Some(k) = edges.iter().position(|e| e.0 == current) {
                let (_, next) = edges.remove(k);
                f.write_str(" > ")?;
                self.write_class(f, next)?;
                touched[next] = true;
                current = next;
            }
        }
        for &c in &order {
            if !touched[c] {
                separator(f)?;
                self.write_class(f, c)?;
            }
        }
        Ok(())
    }
}
