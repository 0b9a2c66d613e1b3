//! Literal transcription of the strict order, kept apart from the engine in
//! `crate::lpo`: it shares only the term and precedence types, compares
//! variables by name, and computes the weak order as "equivalent or greater".

use crate::lpo::DEFAULT_DEPTH_CAP;
use crate::precedence::{QuasiPrecedence, SymCmp};
use crate::term::{Term, TermView};

use super::OracleError;

pub struct NaiveOracle<'p> {
    prec: &'p QuasiPrecedence,
    cap: usize,
}

impl<'p> NaiveOracle<'p> {
    pub fn new(prec: &'p QuasiPrecedence) -> NaiveOracle<'p> {
        NaiveOracle {
            prec,
            cap: DEFAULT_DEPTH_CAP,
        }
    }

    pub fn with_cap(prec: &'p QuasiPrecedence, cap: usize) -> NaiveOracle<'p> {
        NaiveOracle { prec, cap }
    }

    pub fn greater(&self, s: &Term, t: &Term) -> Result<bool, OracleError> {
        self.gt_at(s, t, 0)
    }

    pub fn equivalent(&self, s: &Term, t: &Term) -> bool {
        match (s.view(), t.view()) {
            (TermView::Var(x), TermView::Var(y)) => x.name() == y.name(),
            (TermView::App(f, ss), TermView::App(g, ts)) => {
                self.prec.cmp(f, g) == SymCmp::Equivalent
                    && ss.len() == ts.len()
                    && ss.iter().zip(ts).all(|(a, b)| self.equivalent(a, b))
            }
            _ => false,
        }
    }

    fn geq_at(&self, s: &Term, t: &Term, depth: usize) -> Result<bool, OracleError> {
        Ok(self.equivalent(s, t) || self.gt_at(s, t, depth)?)
    }

    fn gt_at(&self, s: &Term, t: &Term, depth: usize) -> Result<bool, OracleError> {
        if depth > self.cap {
            return Err(OracleError::DepthExceeded { cap: self.cap });
        }
        stacker::maybe_grow(64 * 1024, 2 * 1024 * 1024, || {
            let TermView::App(f, ss) = s.view() else {
                return Ok(false);
            };
            // some argument is at least t
            for si in ss {
                if self.geq_at(si, t, depth + 1)? {
                    return Ok(true);
                }
            }
            let TermView::App(g, ts) = t.view() else {
                return Ok(false);
            };
            let head = self.prec.cmp(f, g);
            if head != SymCmp::Greater && head != SymCmp::Equivalent {
                return Ok(false);
            }
            for tj in ts {
                if !self.gt_at(s, tj, depth + 1)? {
                    return Ok(false);
                }
            }
            if head == SymCmp::Greater {
                return Ok(true);
            }
            // equivalent heads: the first non-equivalent argument decides
            match ss.iter().zip(ts).find(|(a, b)| !self.equivalent(a, b)) {
                Some((a, b)) => self.gt_at(a, b, depth + 1),
                None => Ok(false),
            }
        })
    }
}

/// `s ≻ t` by direct transcription of the definition.
pub fn naive_lpo(p: &QuasiPrecedence, s: &Term, t: &Term) -> Result<bool, OracleError> {
    NaiveOracle::new(p).greater(s, t)
}
