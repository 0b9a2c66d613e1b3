use std::collections::BTreeMap;
use std::fmt;

use super::{Kind, Term, Var, STACK_GROWTH, STACK_RED_ZONE};

/// A finite mapping from variables to terms; identity outside its domain.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<Var, Term>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn insert(&mut self, var: Var, term: Term) -> Option<Term> {
        self.map.insert(var, term)
    }

    pub fn get(&self, var: Var) -> Option<&Term> {
        self.map.get(&var)
    }

    pub fn domain(&self) -> impl Iterator<Item = Var> + '_ {
        self.map.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, t: &Term) -> Term {
        if self.map.is_empty() {
            return t.clone();
        }
        self.apply_inner(t)
    }

    fn apply_inner(&self, t: &Term) -> Term {
        match &t.0.kind {
            Kind::Var(v) => self.map.get(v).cloned().unwrap_or_else(|| t.clone()),
            Kind::App(_, args) if args.is_empty() => t.clone(),
            Kind::App(f, args) => stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, || {
                let new_args: Vec<Term> = args.iter().map(|a| self.apply_inner(a)).collect();
                if new_args.iter().zip(args.iter()).all(|(n, o)| n == o) {
                    t.clone()
                } else {
                    Term::app(*f, new_args).expect("arity preserved")
                }
            }),
        }
    }

    /// The substitution applying `self` first and then `after`.
    pub fn then(&self, after: &Substitution) -> Substitution {
        let mut map: BTreeMap<Var, Term> = self
            .map
            .iter()
            .map(|(v, t)| (*v, after.apply(t)))
            .collect();
        for (v, t) in &after.map {
            map.entry(*v).or_insert_with(|| t.clone());
        }
        Substitution { map }
    }
}

impl FromIterator<(Var, Term)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Var, Term)>>(iter: I) -> Self {
        Substitution {
            map: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, t)) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} -> {t}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Symbol;

    #[test]
    fn replaces_domain_variables_only() {
        let a = Term::constant(Symbol::new("a", 0)).unwrap();
        let b = Term::constant(Symbol::new("b", 0)).unwrap();
        let g = Symbol::new("g", 1);
        let f = Symbol::new("f", 2);
        let (x, y) = (Term::var("x"), Term::var("y"));

        let s: Substitution = [(Var::new("x"), a.clone())].into_iter().collect();
        assert_eq!(s.apply(&x), a);

        let s: Substitution = [(Var::new("x"), Term::app(g, vec![y.clone()]).unwrap())]
            .into_iter()
            .collect();
        let fxy = Term::app(f, vec![x.clone(), y.clone()]).unwrap();
        assert_eq!(s.apply(&fxy).to_string(), "f(g(y),y)");

        let s: Substitution = [(Var::new("x"), b)].into_iter().collect();
        assert_eq!(s.apply(&a), a);
    }

    #[test]
    fn composition_applies_left_then_right() {
        let g = Symbol::new("g", 1);
        let (x, y, z) = (Term::var("x"), Term::var("y"), Term::var("z"));
        let sigma: Substitution = [(Var::new("x"), Term::app(g, vec![y.clone()]).unwrap())]
            .into_iter()
            .collect();
        let tau: Substitution = [(Var::new("y"), z.clone()), (Var::new("x"), z.clone())]
            .into_iter()
            .collect();
        let both = sigma.then(&tau);
        for t in [&x, &y, &z] {
            assert_eq!(both.apply(t), tau.apply(&sigma.apply(t)));
        }
        assert_eq!(both.apply(&x).to_string(), "g(z)");
    }
}
