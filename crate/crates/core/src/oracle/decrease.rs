use crate::precedence::QuasiPrecedence;
use crate::prover::Trs;
use crate::term::{Signature, Substitution, Symbol, Term, Var};

use super::enumerate::{enum_terms, EnumSpec};
use super::naive::NaiveOracle;
use super::OracleError;

/// Ground images tried per variable.
const MAX_IMAGES: usize = 12;
/// Ground instances tried per rule.
const MAX_INSTANCES: usize = 2_000;

/// A rewrite step `context[lhs σ] → context[rhs σ]` that does not decrease.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub rule: usize,
    pub substitution: Substitution,
    pub context: Term,
    pub before: Term,
    pub after: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decrease {
    /// Every step checked decreased; `steps` is how many were checked.
    Holds { steps: usize },
    Violated(Counterexample),
}

impl Decrease {
    pub fn holds(&self) -> bool {
        matches!(self, Decrease::Holds { .. })
    }
}

/// Checks that ground rewrite steps decrease under `p`: instances of each
/// rule by ground terms of size at most `depth + 1`, placed in every one-hole
/// ground context of nesting at most `depth`.
///
/// Fails with [`OracleError::PreconditionFailed`] if some rule itself is not
/// oriented by `p`.
pub fn decrease_check(trs: &Trs, p: &QuasiPrecedence, depth: usize) -> Result<Decrease, OracleError> {
    let oracle = NaiveOracle::new(p);
    for (i, rule) in trs.rules().iter().enumerate() {
        if !oracle.greater(rule.lhs(), rule.rhs())? {
            return Err(OracleError::PreconditionFailed { rule: i });
        }
    }
    let sig = ground_signature(trs.signature());
    let filler = Term::constant(sig.constants().next().expect("ground signature has a constant")).expect("nullary");
    let images: Vec<Term> = enum_terms(EnumSpec {
        signature: sig.clone(),
        vars: Vec::new(),
        max_size: depth + 1,
        max_count: Some(MAX_IMAGES),
    })
    .collect();
    let hole = Var::new("□");
    let contexts = contexts(&sig, &filler, hole, depth);

    let mut steps = 0;
    for (i, rule) in trs.rules().iter().enumerate() {
        let vars: Vec<Var> = rule.lhs().vars().into_iter().collect();
        for sigma in instances(&vars, &images) {
            let (l, r) = (sigma.apply(rule.lhs()), sigma.apply(rule.rhs()));
            for ctx in &contexts {
                let plug = |t: &Term| Substitution::from_iter([(hole, t.clone())]).apply(ctx);
                let (before, after) = (plug(&l), plug(&r));
                steps += 1;
                if !oracle.greater(&before, &after)? {
                    return Ok(Decrease::Violated(Counterexample {
                        rule: i,
                        substitution: sigma,
                        context: ctx.clone(),
                        before,
                        after,
                    }));
                }
            }
        }
    }
    Ok(Decrease::Holds { steps })
}

// Adds a fresh constant when the signature has none, so ground terms exist.
fn ground_signature(sig: &Signature) -> Signature {
    let mut sig = sig.clone();
    if sig.constants().next().is_none() {
        let mut n = 0;
        let fresh = loop {
            let name = format!("c{n}");
            if sig.get(&name).is_none() {
                break Symbol::new(&name, 0);
            }
            n += 1;
        };
        sig.add(fresh).expect("fresh name");
    }
    sig
}

fn instances(vars: &[Var], images: &[Term]) -> Vec<Substitution> {
    let mut out = vec![Substitution::new()];
    for &v in vars {
        let mut next = Vec::new();
        'fill: for sigma in &out {
            for img in images {
                if next.len() >= MAX_INSTANCES {
                    break 'fill;
                }
                let mut s = sigma.clone();
                s.insert(v, img.clone());
                next.push(s);
            }
        }
        out = next;
    }
    out
}

// All contexts of nesting at most `depth` whose side arguments are `filler`.
fn contexts(sig: &Signature, filler: &Term, hole: Var, depth: usize) -> Vec<Term> {
    let mut all = vec![Term::from_var(hole)];
    let mut frontier = all.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for inner in &frontier {
            for &f in sig.symbols().iter().filter(|f| f.arity() > 0) {
                for at in 0..f.arity() {
                    let args = (0..f.arity())
                        .map(|i| if i == at { inner.clone() } else { filler.clone() })
                        .collect();
                    next.push(Term::app(f, args).expect("arity"));
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_precedence, parse_trs};

    #[test]
    fn distributivity_decreases() {
        let trs = parse_trs("(VAR x y z)(RULES *(x,+(y,z)) -> +(*(x,y),*(x,z)))").unwrap();
        let p = parse_precedence("* > +", trs.signature()).unwrap();
        let d = decrease_check(&trs, &p, 2).unwrap();
        assert!(d.holds(), "{d:?}");
    }

    #[test]
    fn empty_trs_is_vacuous() {
        let trs = parse_trs("(RULES )").unwrap();
        let p = QuasiPrecedence::empty(trs.signature());
        assert_eq!(decrease_check(&trs, &p, 2).unwrap(), Decrease::Holds { steps: 0 });
    }

    #[test]
    fn wrong_precedence_is_rejected_up_front() {
        let trs = parse_trs("(VAR x y z)(RULES *(x,+(y,z)) -> +(*(x,y),*(x,z)))").unwrap();
        let p = parse_precedence("+ > *", trs.signature()).unwrap();
        assert_eq!(
            decrease_check(&trs, &p, 2),
            Err(OracleError::PreconditionFailed { rule: 0 })
        );
    }
}
