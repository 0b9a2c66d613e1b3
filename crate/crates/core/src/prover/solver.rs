//! Backtracking search for a precedence satisfying a constraint.
//!
//! Atoms are decided true by inserting them into a [`QuasiPrecedence`], which
//! maintains the transitive closure and rejects cycles, or decided false by
//! excluding them. Formulas are monotone, so an excluded atom that later
//! becomes implied by the precedence simply counts as true.

use std::cmp::Reverse;
use std::collections::HashMap;

use super::constraint::{Atom, Node, PrecConstraint};
use crate::precedence::QuasiPrecedence;
use crate::term::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tri {
    False,
    Unknown,
    True,
}

#[derive(Debug)]
pub(crate) enum SearchOutcome {
    Sat(QuasiPrecedence),
    Unsat,
    Timeout,
}

struct Conflict;

pub(crate) struct Search<'a> {
    formula: &'a PrecConstraint,
    atom_index: HashMap<Atom, usize>,
    // atom indices, best first
    ranking: Vec<usize>,
    atoms: Vec<Atom>,
    excluded: Vec<bool>,
    decisions: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    pub(crate) fn new(formula: &'a PrecConstraint, signature: &Signature, budget: u64) -> Search<'a> {
        let atoms = formula.atoms();
        let atom_index: HashMap<Atom, usize> = atoms.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let mut occurrences = vec![0usize; atoms.len()];
        let nodes = formula.nodes();
        let count = |id: usize, occ: &mut Vec<usize>| {
            if let Node::Atom(a) = nodes[id] {
                occ[atom_index[&a]] += 1;
            }
        };
        count(formula.root().index(), &mut occurrences);
        for node in nodes {
            if let Node::And(cs) | Node::Or(cs) = node {
                for c in cs.iter() {
                    count(c.index(), &mut occurrences);
                }
            }
        }
        let decl = |s| signature.position(s).unwrap_or(usize::MAX);
        let mut ranking: Vec<usize> = (0..atoms.len()).collect();
        ranking.sort_by_key(|&i| {
            let (kind, f, g) = match atoms[i] {
                Atom::Gt(f, g) => (0, f, g),
                Atom::Eq(f, g) => {
                    let (a, b) = if decl(f) <= decl(g) { (f, g) } else { (g, f) };
                    (1, a, b)
                }
            };
            (Reverse(occurrences[i]), kind, decl(f), decl(g))
        });
        Search {
            formula,
            atom_index,
            ranking,
            excluded: vec![false; atoms.len()],
            atoms,
            decisions: 0,
            budget,
        }
    }

    fn atom_value(&self, a: Atom, p: &QuasiPrecedence) -> Tri {
        if a.holds(p) {
            Tri::True
        } else if a.refuted(p) || self.excluded[self.atom_index[&a]] {
            Tri::False
        } else {
            Tri::Unknown
        }
    }

    fn evaluate(&self, p: &QuasiPrecedence) -> Vec<Tri> {
        let nodes = self.formula.nodes();
        let mut value = Vec::with_capacity(nodes.len());
        for node in nodes {
            let v = match node {
                Node::True => Tri::True,
                Node::False => Tri::False,
                Node::Atom(a) => self.atom_value(*a, p),
                Node::And(cs) => cs
                    .iter()
                    .map(|c| value[c.index()])
                    .min_by_key(|t: &Tri| *t as u8)
                    .unwrap_or(Tri::True),
                Node::Or(cs) => cs
                    .iter()
                    .map(|c| value[c.index()])
                    .max_by_key(|t: &Tri| *t as u8)
                    .unwrap_or(Tri::False),
            };
            value.push(v);
        }
        value
    }

    /// Asserts atoms that every remaining model must contain.
    fn propagate(&self, p: &mut QuasiPrecedence) -> Result<Vec<Tri>, Conflict> {
        let nodes = self.formula.nodes();
        loop {
            let value = self.evaluate(p);
            let root = self.formula.root().index();
            if value[root] == Tri::False {
                return Err(Conflict);
            }
            let mut changed = false;
            let mut seen = vec![false; nodes.len()];
            let mut required = vec![root];
            while let Some(n) = required.pop() {
                if std::mem::replace(&mut seen[n], true) || value[n] == Tri::True {
                    continue;
                }
                match &nodes[n] {
                    Node::Atom(a) => {
                        let inserted = match *a {
                            Atom::Gt(f, g) => p.insert_gt(f, g),
                            Atom::Eq(f, g) => p.insert_eq(f, g),
                        };
                        inserted.map_err(|_| Conflict)?;
                        changed = true;
                    }
                    Node::And(cs) => required.extend(cs.iter().map(|c| c.index())),
                    Node::Or(cs) => {
                        let mut open = cs.iter().filter(|c| value[c.index()] != Tri::False);
                        match (open.next(), open.next()) {
                            (None, _) => return Err(Conflict),
                            (Some(only), None) => required.push(only.index()),
                            _ => {}
                        }
                    }
                    Node::False => return Err(Conflict),
                    Node::True => {}
                }
            }
            if !changed {
                return Ok(value);
            }
        }
    }

    /// Best-ranked undecided atom that can still influence the root.
    fn pick(&self, value: &[Tri]) -> Option<usize> {
        let nodes = self.formula.nodes();
        let mut relevant = vec![false; self.atoms.len()];
        let mut seen = vec![false; nodes.len()];
        let mut stack = vec![self.formula.root().index()];
        while let Some(n) = stack.pop() {
            if std::mem::replace(&mut seen[n], true) || value[n] != Tri::Unknown {
                continue;
            }
            match &nodes[n] {
                Node::Atom(a) => relevant[self.atom_index[a]] = true,
                Node::And(cs) | Node::Or(cs) => stack.extend(cs.iter().map(|c| c.index())),
                Node::True | Node::False => {}
            }
        }
        self.ranking.iter().copied().find(|&i| relevant[i])
    }

    pub(crate) fn run(&mut self, start: QuasiPrecedence) -> SearchOutcome {
        match self.dfs(start) {
            Ok(Some(p)) => SearchOutcome::Sat(p),
            Ok(None) => SearchOutcome::Unsat,
            Err(Timeout) => SearchOutcome::Timeout,
        }
    }

    fn dfs(&mut self, mut p: QuasiPrecedence) -> Result<Option<QuasiPrecedence>, Timeout> {
        let value = match self.propagate(&mut p) {
            Ok(v) => v,
            Err(Conflict) => return Ok(None),
        };
        if value[self.formula.root().index()] == Tri::True {
            return Ok(Some(p));
        }
        let Some(choice) = self.pick(&value) else {
            return Ok(None);
        };
        self.decisions += 1;
        if self.decisions > self.budget {
            return Err(Timeout);
        }
        let mut with_atom = p.clone();
        let inserted = match self.atoms[choice] {
            Atom::Gt(f, g) => with_atom.insert_gt(f, g),
            Atom::Eq(f, g) => with_atom.insert_eq(f, g),
        };
        if inserted.is_ok() {
            if let Some(found) = self.dfs(with_atom)? {
                return Ok(Some(found));
            }
        }
        self.excluded[choice] = true;
        let result = self.dfs(p);
        self.excluded[choice] = false;
        result
    }
}

struct Timeout;
