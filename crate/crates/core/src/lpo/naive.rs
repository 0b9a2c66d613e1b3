use super::{Comparator, LexResult, LpoError};
use crate::precedence::SymCmp;
use crate::term::{Term, TermView};

impl Comparator<'_> {
    pub(super) fn naive_gt(&mut self, s: &Term, t: &Term) -> Result<bool, LpoError> {
        self.step(|this| {
            let TermView::App(f, ss) = s.view() else {
                return Ok(false);
            };
            for si in ss {
                if this.naive_gt(si, t)? || this.naive_eq(si, t)? {
                    return Ok(true);
                }
            }
            let TermView::App(g, ts) = t.view() else {
                return Ok(false);
            };
            match this.prec.cmp(f, g) {
                SymCmp::Greater => this.naive_majorizes(s, ts),
                SymCmp::Equivalent => {
                    Ok(this.naive_lex(ss, ts)? == LexResult::Greater && this.naive_majorizes(s, ts)?)
                }
                SymCmp::Less | SymCmp::Incomparable => Ok(false),
            }
        })
    }

    fn naive_majorizes(&mut self, s: &Term, ts: &[Term]) -> Result<bool, LpoError> {
        for tj in ts {
            if !self.naive_gt(s, tj)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(super) fn naive_eq(&mut self, s: &Term, t: &Term) -> Result<bool, LpoError> {
        self.step(|this| match (s.view(), t.view()) {
            (TermView::Var(x), TermView::Var(y)) => Ok(x == y),
            (TermView::App(f, ss), TermView::App(g, ts)) => {
                if this.prec.cmp(f, g) != SymCmp::Equivalent || ss.len() != ts.len() {
                    return Ok(false);
                }
                for (si, ti) in ss.iter().zip(ts) {
                    if !this.naive_eq(si, ti)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Ok(false),
        })
    }

    pub(super) fn naive_lex(&mut self, ss: &[Term], ts: &[Term]) -> Result<LexResult, LpoError> {
        if ss.len() != ts.len() {
            return Err(LpoError::LengthMismatch {
                left: ss.len(),
                right: ts.len(),
            });
        }
        for (si, ti) in ss.iter().zip(ts) {
            if self.naive_eq(si, ti)? {
                continue;
            }
            return Ok(if self.naive_gt(si, ti)? {
                LexResult::Greater
            } else {
                LexResult::NotGreaterOrEqual
            });
        }
        Ok(LexResult::Equivalent)
    }
}
