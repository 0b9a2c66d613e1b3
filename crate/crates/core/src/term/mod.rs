//! First-order terms with structural sharing.
//!
//! Every [`Term`] is hash-consed through a process-wide table, so two terms
//! are structurally equal exactly when they share an allocation. Equality and
//! hashing are therefore O(1) and [`TermId`]s can be used directly as memo
//! keys by the comparison engines.

mod embed;
mod signature;
mod subst;

pub use embed::{embed_geq, embed_gt};
pub use signature::{Signature, SignatureError};
pub use subst::Substitution;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock, Weak};

use thiserror::Error;

pub(crate) const STACK_RED_ZONE: usize = 64 * 1024;
pub(crate) const STACK_GROWTH: usize = 2 * 1024 * 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("symbol {symbol} expects {expected} argument(s), got {found}")]
    Arity {
        symbol: Symbol,
        expected: usize,
        found: usize,
    },
}

struct SymbolData {
    id: u32,
    name: &'static str,
    arity: usize,
}

/// A function symbol: a name together with a fixed arity.
///
/// Symbols are interned, so `f/1` and `f/2` are two distinct symbols and
/// copying a symbol is free.
#[derive(Clone, Copy)]
pub struct Symbol(&'static SymbolData);

fn symbol_table() -> &'static Mutex<HashMap<(String, usize), &'static SymbolData>> {
    static TABLE: OnceLock<Mutex<HashMap<(String, usize), &'static SymbolData>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

impl Symbol {
    /// Interns `name/arity`. Panics if `name` is empty.
    pub fn new(name: &str, arity: usize) -> Symbol {
        assert!(!name.is_empty(), "symbol names must be non-empty");
        let mut table = symbol_table().lock().unwrap_or_else(|e| e.into_inner());
        let next = table.len() as u32;
        let data = table.entry((name.to_owned(), arity)).or_insert_with(|| {
            Box::leak(Box::new(SymbolData {
                id: next,
                name: Box::leak(name.to_owned().into_boxed_str()),
                arity,
            }))
        });
        Symbol(data)
    }

    pub fn name(self) -> &'static str {
        self.0.name
    }

    pub fn arity(self) -> usize {
        self.0.arity
    }

    /// Process-wide interning index; stable for the lifetime of the process.
    pub fn id(self) -> u32 {
        self.0.id
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Symbol {}

impl Hash for Symbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name(), self.arity())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A variable, identified by its name only.
#[derive(Clone, Copy)]
pub struct Var(&'static str);

fn var_table() -> &'static Mutex<HashSet<&'static str>> {
    static TABLE: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

impl Var {
    pub fn new(name: &str) -> Var {
        let mut table = var_table().lock().unwrap_or_else(|e| e.into_inner());
        match table.get(name) {
            Some(&interned) => Var(interned),
            None => {
                let interned: &'static str = Box::leak(name.to_owned().into_boxed_str());
                table.insert(interned);
                Var(interned)
            }
        }
    }

    pub fn name(self) -> &'static str {
        self.0
    }

    fn key(self) -> usize {
        self.0.as_ptr() as usize
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Var {}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(other.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// Stable numeric identity of a hash-consed term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(u64);

impl TermId {
    pub fn as_u64(self) -> u64 {
        self.0
    }
}

struct Node {
    id: TermId,
    size: usize,
    kind: Kind,
}

enum Kind {
    Var(Var),
    App(Symbol, Box<[Term]>),
}

/// Borrowed view of a term's top-level structure.
#[derive(Debug, Clone, Copy)]
pub enum TermView<'a> {
    Var(Var),
    App(Symbol, &'a [Term]),
}

/// An immutable, hash-consed first-order term.
#[derive(Clone)]
pub struct Term(Arc<Node>);

#[derive(PartialEq, Eq, Hash)]
enum Key {
    Var(usize),
    App(u32, Vec<u64>),
}

struct Interner {
    map: HashMap<Key, Weak<Node>>,
    next_id: u64,
    purge_at: usize,
}

fn interner() -> &'static Mutex<Interner> {
    static INTERNER: OnceLock<Mutex<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        Mutex::new(Interner {
            map: HashMap::new(),
            next_id: 0,
            purge_at: 4096,
        })
    })
}

fn intern(key: Key, make: impl FnOnce() -> (usize, Kind)) -> Term {
    let mut table = interner().lock().unwrap_or_else(|e| e.into_inner());
    if let Some(node) = table.map.get(&key).and_then(Weak::upgrade) {
        return Term(node);
    }
    if table.map.len() >= table.purge_at {
        table.map.retain(|_, weak| weak.strong_count() > 0);
        table.purge_at = (table.map.len() * 2).max(4096);
    }
    let id = TermId(table.next_id);
    table.next_id += 1;
    let (size, kind) = make();
    let node = Arc::new(Node { id, size, kind });
    table.map.insert(key, Arc::downgrade(&node));
    Term(node)
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::from_var(Var::new(name))
    }

    pub fn from_var(var: Var) -> Term {
        intern(Key::Var(var.key()), || (1, Kind::Var(var)))
    }

    /// Builds `symbol(args...)`, checking the argument count against the arity.
    pub fn app(symbol: Symbol, args: Vec<Term>) -> Result<Term, TermError> {
        if args.len() != symbol.arity() {
            return Err(TermError::Arity {
                symbol,
                expected: symbol.arity(),
                found: args.len(),
            });
        }
        let key = Key::App(symbol.id(), args.iter().map(|a| a.id().0).collect());
        Ok(intern(key, move || {
            let size = 1 + args.iter().map(Term::size).sum::<usize>();
            (size, Kind::App(symbol, args.into_boxed_slice()))
        }))
    }

    pub fn constant(symbol: Symbol) -> Result<Term, TermError> {
        Term::app(symbol, Vec::new())
    }

    pub fn id(&self) -> TermId {
        self.0.id
    }

    /// Number of variable and application nodes.
    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn view(&self) -> TermView<'_> {
        match &self.0.kind {
            Kind::Var(v) => TermView::Var(*v),
            Kind::App(f, args) => TermView::App(*f, args),
        }
    }

    pub fn as_var(&self) -> Option<Var> {
        match self.0.kind {
            Kind::Var(v) => Some(v),
            Kind::App(..) => None,
        }
    }

    pub fn is_var(&self) -> bool {
        self.as_var().is_some()
    }

    pub fn head(&self) -> Option<Symbol> {
        match self.0.kind {
            Kind::App(f, _) => Some(f),
            Kind::Var(_) => None,
        }
    }

    pub fn args(&self) -> &[Term] {
        match &self.0.kind {
            Kind::App(_, args) => args,
            Kind::Var(_) => &[],
        }
    }

    /// Whether `var` occurs anywhere in `self`.
    pub fn contains_var(&self, var: Var) -> bool {
        match &self.0.kind {
            Kind::Var(v) => *v == var,
            Kind::App(_, args) => stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, || {
                args.iter().any(|a| a.contains_var(var))
            }),
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match &t.0.kind {
                Kind::Var(v) => {
                    out.insert(*v);
                }
                Kind::App(_, args) => stack.extend(args.iter()),
            }
        }
        out
    }

    pub fn is_ground(&self) -> bool {
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match &t.0.kind {
                Kind::Var(_) => return false,
                Kind::App(_, args) => stack.extend(args.iter()),
            }
        }
        true
    }

    /// Function symbols in first-occurrence (pre-order) order.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            if let Kind::App(f, args) = &t.0.kind {
                if seen.insert(*f) {
                    out.push(*f);
                }
                stack.extend(args.iter().rev());
            }
        }
        out
    }

    /// All subterms including `self`, pre-order.
    pub fn subterms(&self) -> Vec<Term> {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            stack.extend(t.args().iter().rev().cloned());
            out.push(t);
        }
        out
    }

    /// Positions of all subterms, pre-order, as argument index paths.
    pub fn positions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = vec![(self, Vec::new())];
        while let Some((t, pos)) = stack.pop() {
            for (i, a) in t.args().iter().enumerate().rev() {
                let mut p = pos.clone();
                p.push(i);
                stack.push((a, p));
            }
            out.push(pos);
        }
        out
    }

    pub fn subterm_at(&self, pos: &[usize]) -> Option<&Term> {
        pos.iter().try_fold(self, |t, &i| t.args().get(i))
    }

    /// Replaces the subterm at `pos` with `replacement`; `None` if `pos` is invalid.
    pub fn replace_at(&self, pos: &[usize], replacement: Term) -> Option<Term> {
        match pos.split_first() {
            None => Some(replacement),
            Some((&i, rest)) => {
                let Kind::App(f, args) = &self.0.kind else {
                    return None;
                };
                let inner = args.get(i)?.replace_at(rest, replacement)?;
                let mut new_args = args.to_vec();
                new_args[i] = inner;
                Some(Term::app(*f, new_args).expect("arity preserved"))
            }
        }
    }
}

impl Drop for Node {
    fn drop(&mut self) {
        // Unwind deep chains iteratively so that dropping a long spine does not
        // exhaust the native stack.
        let Kind::App(_, args) = &mut self.kind else {
            return;
        };
        let mut pending: Vec<Term> = std::mem::take(args).into_vec();
        while let Some(term) = pending.pop() {
            if let Ok(mut node) = Arc::try_unwrap(term.0) {
                if let Kind::App(_, args) = &mut node.kind {
                    pending.extend(std::mem::take(args).into_vec());
                }
            }
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Var(v) => f.write_str(v.name()),
            Kind::App(sym, args) if args.is_empty() => f.write_str(sym.name()),
            Kind::App(sym, args) => stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, || {
                write!(f, "{}(", sym.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Symbol {
        Symbol::new("f", 2)
    }

    #[test]
    fn app_checks_arity() {
        let a = Term::constant(Symbol::new("a", 0)).unwrap();
        assert_eq!(a.to_string(), "a");
        let fxy = Term::app(f2(), vec![Term::var("x"), Term::var("y")]).unwrap();
        assert_eq!(fxy.to_string(), "f(x,y)");
        assert!(matches!(
            Term::app(f2(), vec![Term::var("x")]),
            Err(TermError::Arity { expected: 2, found: 1, .. })
        ));
    }

    #[test]
    fn structurally_equal_terms_share_identity() {
        let t1 = Term::app(f2(), vec![Term::var("x"), Term::var("y")]).unwrap();
        let t2 = Term::app(f2(), vec![Term::var("x"), Term::var("y")]).unwrap();
        assert_eq!(t1, t2);
        assert_eq!(t1.id(), t2.id());
        let t3 = Term::app(f2(), vec![Term::var("y"), Term::var("x")]).unwrap();
        assert_ne!(t1.id(), t3.id());
    }

    #[test]
    fn symbols_with_different_arity_are_distinct() {
        assert_ne!(Symbol::new("f", 1), Symbol::new("f", 2));
        assert_eq!(Symbol::new("f", 1), Symbol::new("f", 1));
    }

    #[test]
    fn size_counts_nodes() {
        let a = Term::constant(Symbol::new("a", 0)).unwrap();
        let g = Symbol::new("g", 1);
        assert_eq!(Term::var("x").size(), 1);
        let fxy = Term::app(f2(), vec![Term::var("x"), Term::var("y")]).unwrap();
        assert_eq!(fxy.size(), 3);
        let t = Term::app(f2(), vec![Term::app(g, vec![a.clone()]).unwrap(), a]).unwrap();
        assert_eq!(t.size(), 4);
    }

    #[test]
    fn positions_and_replacement() {
        let g = Symbol::new("g", 1);
        let x = Term::var("x");
        let t = Term::app(f2(), vec![Term::app(g, vec![x.clone()]).unwrap(), x.clone()]).unwrap();
        assert_eq!(t.positions(), vec![vec![], vec![0], vec![0, 0], vec![1]]);
        assert_eq!(t.subterm_at(&[0, 0]), Some(&x));
        let y = Term::var("y");
        assert_eq!(t.replace_at(&[0, 0], y.clone()).unwrap().to_string(), "f(g(y),x)");
        assert!(t.replace_at(&[1, 0], y).is_none());
    }

    #[test]
    fn deep_terms_build_and_drop() {
        let g = Symbol::new("g", 1);
        let mut t = Term::var("x");
        for _ in 0..200_000 {
            t = Term::app(g, vec![t]).unwrap();
        }
        assert_eq!(t.size(), 200_001);
        assert!(t.contains_var(Var::new("x")));
        drop(t);
    }
}
