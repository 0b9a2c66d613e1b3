use std::collections::HashMap;

use thiserror::Error;

use super::{Symbol, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("symbol {name} used with arities {first} and {second}")]
    ArityClash {
        name: String,
        first: usize,
        second: usize,
    },
}

/// A finite set of function symbols in declaration order.
///
/// No two symbols share a name. Declaration order is significant: it drives
/// tie-breaking in precedence linearization, enumeration order and solver
/// branching.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    symbols: Vec<Symbol>,
    by_name: HashMap<&'static str, usize>,
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Result<Signature, SignatureError> {
        let mut sig = Signature::new();
        for s in symbols {
            sig.add(s)?;
        }
        Ok(sig)
    }

    /// Collects the symbols of `terms` in first-occurrence order.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = &'a Term>) -> Result<Signature, SignatureError> {
        let mut sig = Signature::new();
        for t in terms {
            for s in t.symbols() {
                sig.add(s)?;
            }
        }
        Ok(sig)
    }

    /// Adds `symbol`; re-adding a known symbol is a no-op.
    pub fn add(&mut self, symbol: Symbol) -> Result<(), SignatureError> {
        match self.by_name.get(symbol.name()) {
            Some(&i) if self.symbols[i] == symbol => Ok(()),
            Some(&i) => Err(SignatureError::ArityClash {
                name: symbol.name().to_owned(),
                first: self.symbols[i].arity(),
                second: symbol.arity(),
            }),
            None => {
                self.by_name.insert(symbol.name(), self.symbols.len());
                self.symbols.push(symbol);
                Ok(())
            }
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<Symbol> {
        self.by_name.get(name).map(|&i| self.symbols[i])
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.get(symbol.name()) == Some(symbol)
    }

    /// Declaration index of `symbol`.
    pub fn position(&self, symbol: Symbol) -> Option<usize> {
        self.by_name
            .get(symbol.name())
            .copied()
            .filter(|&i| self.symbols[i] == symbol)
    }

    pub fn constants(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().copied().filter(|s| s.arity() == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_same_name_different_arity() {
        let mut sig = Signature::new();
        sig.add(Symbol::new("f", 1)).unwrap();
        sig.add(Symbol::new("f", 1)).unwrap();
        assert_eq!(sig.len(), 1);
        assert!(matches!(
            sig.add(Symbol::new("f", 2)),
            Err(SignatureError::ArityClash { first: 1, second: 2, .. })
        ));
    }

    #[test]
    fn keeps_declaration_order() {
        let sig = Signature::from_symbols([Symbol::new("b", 0), Symbol::new("a", 0)]).unwrap();
        assert_eq!(sig.position(Symbol::new("b", 0)), Some(0));
        assert_eq!(sig.position(Symbol::new("a", 0)), Some(1));
        assert_eq!(sig.position(Symbol::new("a", 1)), None);
    }
}
