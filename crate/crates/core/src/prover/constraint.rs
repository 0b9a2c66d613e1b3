//! Symbolic lifting of the strict order: the same subterm / precedence /
//! lexicographic recursion as the naive comparison, with every head test
//! replaced by a propositional atom over the unknown precedence.

use std::collections::HashMap;
use std::fmt;

use crate::precedence::{QuasiPrecedence, SymCmp};
use crate::term::{Symbol, Term, TermId, TermView};

/// `gt(f,g)` holds when `f` is strictly above `g`; `eq(f,g)` when they are
/// equivalent. `Eq` atoms are stored with the lower interning id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    Gt(Symbol, Symbol),
    Eq(Symbol, Symbol),
}

impl Atom {
    pub fn eq(f: Symbol, g: Symbol) -> Atom {
        if f.id() <= g.id() {
            Atom::Eq(f, g)
        } else {
            Atom::Eq(g, f)
        }
    }

    pub fn holds(self, p: &QuasiPrecedence) -> bool {
        match self {
            Atom::Gt(f, g) => p.cmp(f, g) == SymCmp::Greater,
            Atom::Eq(f, g) => p.cmp(f, g) == SymCmp::Equivalent,
        }
    }

    /// True when no extension of `p` can make the atom hold.
    pub fn refuted(self, p: &QuasiPrecedence) -> bool {
        match self {
            Atom::Gt(f, g) => matches!(p.cmp(f, g), SymCmp::Equivalent | SymCmp::Less),
            Atom::Eq(f, g) => {
                f.arity() != g.arity() || matches!(p.cmp(f, g), SymCmp::Greater | SymCmp::Less)
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Gt(a, b) => write!(f, "gt({a},{b})"),
            Atom::Eq(a, b) => write!(f, "eq({a},{b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormulaId(u32);

impl FormulaId {
    pub const TRUE: FormulaId = FormulaId(0);
    pub const FALSE: FormulaId = FormulaId(1);

    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Node {
    True,
    False,
    Atom(Atom),
    And(Box<[FormulaId]>),
    Or(Box<[FormulaId]>),
}

/// Builds shared formulas; every child is created before its parent, so node
/// ids are a topological order.
pub struct ConstraintBuilder {
    nodes: Vec<Node>,
    index: HashMap<Node, FormulaId>,
    gt_memo: HashMap<(TermId, TermId), FormulaId>,
    eq_memo: HashMap<(TermId, TermId), FormulaId>,
}

impl Default for ConstraintBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl ConstraintBuilder {
    pub fn new() -> ConstraintBuilder {
        let mut b = ConstraintBuilder {
            nodes: Vec::new(),
            index: HashMap::new(),
            gt_memo: HashMap::new(),
            eq_memo: HashMap::new(),
        };
        b.intern(Node::True);
        b.intern(Node::False);
        b
    }

    fn intern(&mut self, node: Node) -> FormulaId {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = FormulaId(self.nodes.len() as u32);
        self.nodes.push(node.clone());
        self.index.insert(node, id);
        id
    }

    pub fn atom(&mut self, atom: Atom) -> FormulaId {
        match atom {
            Atom::Gt(f, g) if f == g => FormulaId::FALSE,
            Atom::Eq(f, g) if f == g => FormulaId::TRUE,
            Atom::Eq(f, g) if f.arity() != g.arity() => FormulaId::FALSE,
            _ => self.intern(Node::Atom(atom)),
        }
    }

    pub fn and(&mut self, parts: impl IntoIterator<Item = FormulaId>) -> FormulaId {
        let mut children = Vec::new();
        for p in parts {
            match &self.nodes[p.index()] {
                Node::False => return FormulaId::FALSE,
                Node::True => {}
                Node::And(cs) => children.extend_from_slice(cs),
                _ => children.push(p),
            }
        }
        self.junction(children, true)
    }

    pub fn or(&mut self, parts: impl IntoIterator<Item = FormulaId>) -> FormulaId {
        let mut children = Vec::new();
        for p in parts {
            match &self.nodes[p.index()] {
                Node::True => return FormulaId::TRUE,
                Node::False => {}
                Node::Or(cs) => children.extend_from_slice(cs),
                _ => children.push(p),
            }
        }
        self.junction(children, false)
    }

    fn junction(&mut self, mut children: Vec<FormulaId>, conjunction: bool) -> FormulaId {
        children.sort_unstable();
        children.dedup();
        match children.len() {
            0 if conjunction => FormulaId::TRUE,
            0 => FormulaId::FALSE,
            1 => children[0],
            _ if conjunction => self.intern(Node::And(children.into_boxed_slice())),
            _ => self.intern(Node::Or(children.into_boxed_slice())),
        }
    }

    /// Formula satisfied exactly by the precedences under which `s ≻ t`.
    pub fn gt(&mut self, s: &Term, t: &Term) -> FormulaId {
        let key = (s.id(), t.id());
        if let Some(&id) = self.gt_memo.get(&key) {
            return id;
        }
        let id = stacker::maybe_grow(crate::term::STACK_RED_ZONE, crate::term::STACK_GROWTH, || {
            self.gt_uncached(s, t)
        });
        self.gt_memo.insert(key, id);
        id
    }

    fn gt_uncached(&mut self, s: &Term, t: &Term) -> FormulaId {
        if s == t {
            return FormulaId::FALSE;
        }
        let TermView::App(f, ss) = s.view() else {
            return FormulaId::FALSE;
        };
        let (g, ts) = match t.view() {
            TermView::Var(x) => {
                return if s.contains_var(x) { FormulaId::TRUE } else { FormulaId::FALSE };
            }
            TermView::App(g, ts) => (g, ts),
        };
        let mut cases = Vec::with_capacity(ss.len() + 2);
        for si in ss {
            let strict = self.gt(si, t);
            let equiv = self.eq(si, t);
            cases.push(self.or([strict, equiv]));
        }
        let majorizes: Vec<FormulaId> = ts.iter().map(|tj| self.gt(s, tj)).collect();
        let majorizes = self.and(majorizes);

        let head_gt = self.atom(Atom::Gt(f, g));
        cases.push(self.and([head_gt, majorizes]));

        if f.arity() == g.arity() {
            let head_eq = self.atom(Atom::eq(f, g));
            let lex = self.lex(ss, ts);
            cases.push(self.and([head_eq, lex, majorizes]));
        }
        self.or(cases)
    }

    fn lex(&mut self, ss: &[Term], ts: &[Term]) -> FormulaId {
        let mut alternatives = Vec::with_capacity(ss.len());
        let mut prefix = Vec::with_capacity(ss.len());
        for (si, ti) in ss.iter().zip(ts) {
            let strict = self.gt(si, ti);
            let here = self.and(prefix.iter().copied().chain([strict]));
            alternatives.push(here);
            let equiv = self.eq(si, ti);
            if equiv == FormulaId::FALSE {
                break;
            }
            prefix.push(equiv);
        }
        self.or(alternatives)
    }

    /// Formula satisfied exactly by the precedences under which `s ∼ t`.
    pub fn eq(&mut self, s: &Term, t: &Term) -> FormulaId {
        if s == t {
            return FormulaId::TRUE;
        }
        let key = (s.id(), t.id());
        if let Some(&id) = self.eq_memo.get(&key) {
            return id;
        }
        let id = match (s.view(), t.view()) {
            (TermView::App(f, ss), TermView::App(g, ts)) if f.arity() == g.arity() => {
                let head = self.atom(Atom::eq(f, g));
                let mut parts = vec![head];
                for (si, ti) in ss.iter().zip(ts) {
                    parts.push(stacker::maybe_grow(
                        crate::term::STACK_RED_ZONE,
                        crate::term::STACK_GROWTH,
                        || self.eq(si, ti),
                    ));
                }
                self.and(parts)
            }
            _ => FormulaId::FALSE,
        };
        self.eq_memo.insert(key, id);
        id
    }

    pub fn finish(self, root: FormulaId) -> PrecConstraint {
        let mut nodes = self.nodes;
        nodes.truncate(root.index().max(1) + 1);
        PrecConstraint { nodes, root }
    }
}

/// A negation-free propositional formula over precedence atoms.
#[derive(Debug, Clone)]
pub struct PrecConstraint {
    nodes: Vec<Node>,
    root: FormulaId,
}

impl PrecConstraint {
    pub fn root(&self) -> FormulaId {
        self.root
    }

    pub(crate) fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn is_true(&self) -> bool {
        self.root == FormulaId::TRUE
    }

    pub fn is_false(&self) -> bool {
        self.root == FormulaId::FALSE
    }

    pub fn as_atom(&self) -> Option<Atom> {
        match self.nodes[self.root.index()] {
            Node::Atom(a) => Some(a),
            _ => None,
        }
    }

    /// Truth value when each atom is read off `p`.
    pub fn evaluate(&self, p: &QuasiPrecedence) -> bool {
        let mut value = vec![false; self.root.index() + 1];
        for (i, node) in self.nodes.iter().enumerate().take(self.root.index() + 1) {
            value[i] = match node {
                Node::True => true,
                Node::False => false,
                Node::Atom(a) => a.holds(p),
                Node::And(cs) => cs.iter().all(|c| value[c.index()]),
                Node::Or(cs) => cs.iter().any(|c| value[c.index()]),
            };
        }
        value[self.root.index()]
    }

    /// Distinct atoms, in creation order.
    pub fn atoms(&self) -> Vec<Atom> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Atom(a) => Some(*a),
                _ => None,
            })
            .collect()
    }

    fn write_node(&self, f: &mut fmt::Formatter<'_>, id: FormulaId) -> fmt::Result {
        let (name, cs) = match &self.nodes[id.index()] {
            Node::True => return f.write_str("TRUE"),
            Node::False => return f.write_str("FALSE"),
            Node::Atom(a) => return write!(f, "{a}"),
            Node::And(cs) => ("and", cs),
            Node::Or(cs) => ("or", cs),
        };
        write!(f, "{name}(")?;
        for (i, c) in cs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            self.write_node(f, *c)?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for PrecConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_node(f, self.root)
    }
}

/// Constraint under which `s ≻ t`.
pub fn gen_constraints(s: &Term, t: &Term) -> PrecConstraint {
    let mut b = ConstraintBuilder::new();
    let root = b.gt(s, t);
    b.finish(root)
}
