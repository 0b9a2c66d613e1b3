mod common;

use lpo::lpo::{Comparator, OrderResult, Variant};
use lpo::oracle::{enum_precedences, enum_terms, random_precedence, random_term, EnumSpec, NaiveOracle};
use lpo::precedence::QuasiPrecedence;
use lpo::term::{Signature, Symbol, Term};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{signature, vars};

fn sig() -> Signature {
    signature(&[("f", 2), ("h", 2), ("g", 1), ("a", 0), ("b", 0)])
}

fn instance(seed: u64) -> (QuasiPrecedence, Term, Term) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sig = sig();
    let vs = vars(&["x", "y"]);
    let p = random_precedence(&mut rng, &sig);
    let s = random_term(&mut rng, &sig, &vs, 10);
    let t = random_term(&mut rng, &sig, &vs, 10);
    (p, s, t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3_000))]

    #[test]
    fn variants_agree_under_partial_precedences(seed in any::<u64>()) {
        let (p, s, t) = instance(seed);
        let o = NaiveOracle::new(&p);
        for v in Variant::ALL {
            let mut c = Comparator::new(&p, v);
            prop_assert_eq!(c.gt(&s, &t).unwrap(), o.greater(&s, &t).unwrap());
            prop_assert_eq!(c.eq(&s, &t).unwrap(), o.equivalent(&s, &t));
            prop_assert_eq!(c.geq(&s, &t).unwrap(), o.equivalent(&s, &t) || o.greater(&s, &t).unwrap());
        }
    }

    #[test]
    fn compare_is_antisymmetric(seed in any::<u64>()) {
        let (p, s, t) = instance(seed);
        for v in Variant::ALL {
            let mut c = Comparator::new(&p, v);
            let ab = c.compare(&s, &t).unwrap();
            let ba = c.compare(&t, &s).unwrap();
            prop_assert_eq!(ab.reverse(), ba);
        }
    }

    #[test]
    fn memo_entries_agree_with_oracle(seed in any::<u64>()) {
        let (p, s, t) = instance(seed);
        let mut c = Comparator::new(&p, Variant::Memoized);
        c.compare(&s, &t).unwrap();
        c.gt(&t, &s).unwrap();
        let o = NaiveOracle::new(&p);
        let subterms: Vec<Term> = s.subterms().into_iter().chain(t.subterms()).collect();
        for a in &subterms {
            for b in &subterms {
                if let Some(r) = c.memo().order(a.id(), b.id()) {
                    let want = if o.equivalent(a, b) {
                        OrderResult::Eqv
                    } else if o.greater(a, b).unwrap() {
                        OrderResult::Gt
                    } else if o.greater(b, a).unwrap() {
                        OrderResult::Lt
                    } else {
                        OrderResult::Inc
                    };
                    prop_assert_eq!(r, want, "{} vs {}", a, b);
                }
            }
        }
    }
}

#[test]
fn memoization_never_increases_calls() {
    let sig = signature(&[("f", 2), ("g", 1), ("a", 0)]);
    let terms: Vec<Term> = enum_terms(EnumSpec::new(sig.clone(), vars(&["x"]), 5)).collect();
    for p in enum_precedences(&sig).unwrap() {
        for s in &terms {
            for t in &terms {
                let mut improved = Comparator::new(&p, Variant::Improved);
                let mut memo = Comparator::new(&p, Variant::Memoized);
                assert_eq!(improved.gt(s, t), memo.gt(s, t));
                assert!(memo.stats().calls <= improved.stats().calls, "{s} {t}");
            }
        }
    }
}

#[test]
fn deep_terms_do_not_overflow_the_stack() {
    let g = Symbol::new("g", 1);
    let deep = |leaf: &str| (0..20_000).fold(Term::var(leaf), |t, _| Term::app(g, vec![t]).unwrap());
    let (s, t) = (deep("x"), deep("x").args()[0].clone());
    let p = QuasiPrecedence::empty(&Signature::from_symbols([g]).unwrap());
    for v in [Variant::Improved, Variant::Memoized] {
        assert_eq!(Comparator::new(&p, v).compare(&s, &t), Ok(OrderResult::Gt));
    }
}
