//! Head-first comparison shared by the improved and memoized variants.
//!
//! The shortcuts below rely on standard facts about the order: it is
//! transitive, compatible with `∼`, and contains the strict subterm relation
//! and homeomorphic embedding. The exhaustive agreement tests against the
//! naive transcription check them extensionally.

use super::{Comparator, LexResult, LpoError, OrderResult};
use crate::precedence::SymCmp;
use crate::term::{embed_geq, Term, TermView};

impl Comparator<'_> {
    pub(super) fn fast_eq(&mut self, s: &Term, t: &Term) -> Result<bool, LpoError> {
        self.step(|this| {
            if s == t {
                return Ok(true);
            }
            if s.size() != t.size() {
                return Ok(false);
            }
            let key = (s.id(), t.id());
            if this.memoizing() {
                if let Some(&r) = this.memo.eq.get(&key) {
                    this.stats.memo_hits += 1;
                    return Ok(r);
                }
            }
            let r = match (s.view(), t.view()) {
                (TermView::App(f, ss), TermView::App(g, ts))
                    if this.prec.cmp(f, g) == SymCmp::Equivalent =>
                {
                    let mut all = true;
                    for (si, ti) in ss.iter().zip(ts) {
                        if !this.fast_eq(si, ti)? {
                            all = false;
                            break;
                        }
                    }
                    all
                }
                _ => false,
            };
            if this.memoizing() {
                this.memo.eq.insert(key, r);
                this.note_memo_size();
            }
            Ok(r)
        })
    }

    /// `s ≻ t`, or `s ≿ t` when `weak` is set.
    pub(super) fn fast_rel(&mut self, s: &Term, t: &Term, weak: bool) -> Result<bool, LpoError> {
        self.step(|this| {
            if s == t {
                return Ok(weak);
            }
            let key = (s.id(), t.id());
            if this.memoizing() {
                let table = if weak { &this.memo.geq } else { &this.memo.gt };
                if let Some(&r) = table.get(&key) {
                    this.stats.memo_hits += 1;
                    return Ok(r);
                }
            }
            let r = this.fast_rel_body(s, t, weak)?;
            if this.memoizing() {
                let table = if weak { &mut this.memo.geq } else { &mut this.memo.gt };
                table.insert(key, r);
                this.note_memo_size();
            }
            Ok(r)
        })
    }

    fn fast_rel_body(&mut self, s: &Term, t: &Term, weak: bool) -> Result<bool, LpoError> {
        let TermView::App(f, ss) = s.view() else {
            return Ok(false);
        };
        let (g, ts) = match t.view() {
            TermView::Var(x) => return Ok(s.contains_var(x)),
            TermView::App(g, ts) => (g, ts),
        };
        match self.prec.cmp(f, g) {
            SymCmp::Greater => self.fast_majorizes(s, ts),
            SymCmp::Equivalent => {
                let mut diff = None;
                for (k, (sk, tk)) in ss.iter().zip(ts).enumerate() {
                    if !self.fast_eq(sk, tk)? {
                        diff = Some(k);
                        break;
                    }
                }
                match diff {
                    None => Ok(weak),
                    Some(k) if self.fast_rel(&ss[k], &ts[k], false)? => {
                        self.fast_majorizes(s, &ts[k + 1..])
                    }
                    // the first k+1 arguments cannot reach t
                    Some(k) => self.fast_alpha(&ss[k + 1..], t),
                }
            }
            SymCmp::Less | SymCmp::Incomparable => self.fast_alpha(ss, t),
        }
    }

    fn fast_majorizes(&mut self, s: &Term, ts: &[Term]) -> Result<bool, LpoError> {
        for tj in ts {
            if !self.fast_rel(s, tj, false)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Subterm case: some argument is `≿ t`.
    fn fast_alpha(&mut self, ss: &[Term], t: &Term) -> Result<bool, LpoError> {
        for si in ss {
            if embed_geq(si, t) || self.fast_rel(si, t, true)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub(super) fn fast_lex(&mut self, ss: &[Term], ts: &[Term]) -> Result<LexResult, LpoError> {
        for (si, ti) in ss.iter().zip(ts) {
            if self.fast_eq(si, ti)? {
                continue;
            }
            return Ok(if self.fast_rel(si, ti, false)? {
                LexResult::Greater
            } else {
                LexResult::NotGreaterOrEqual
            });
        }
        Ok(LexResult::Equivalent)
    }

    pub(super) fn fast_compare(&mut self, s: &Term, t: &Term) -> Result<OrderResult, LpoError> {
        self.step(|this| {
            if s == t {
                return Ok(OrderResult::Eqv);
            }
            if this.memoizing() {
                let hit = this
                    .memo
                    .cmp
                    .get(&(s.id(), t.id()))
                    .copied()
                    .or_else(|| this.memo.cmp.get(&(t.id(), s.id())).map(|r| r.reverse()));
                if let Some(r) = hit {
                    this.stats.memo_hits += 1;
                    return Ok(r);
                }
            }
            let r = this.fast_compare_body(s, t)?;
            if this.memoizing() {
                this.memo.cmp.insert((s.id(), t.id()), r);
                this.note_memo_size();
            }
            Ok(r)
        })
    }

    fn fast_compare_body(&mut self, s: &Term, t: &Term) -> Result<OrderResult, LpoError> {
        let (f, ss, g, ts) = match (s.view(), t.view()) {
            (TermView::Var(_), TermView::Var(_)) => return Ok(OrderResult::Inc),
            (TermView::Var(x), TermView::App(..)) => {
                return Ok(if t.contains_var(x) { OrderResult::Lt } else { OrderResult::Inc })
            }
            (TermView::App(..), TermView::Var(x)) => {
                return Ok(if s.contains_var(x) { OrderResult::Gt } else { OrderResult::Inc })
            }
            (TermView::App(f, ss), TermView::App(g, ts)) => (f, ss, g, ts),
        };
        match self.prec.cmp(f, g) {
            SymCmp::Greater => self.majorize_cmp(s, ts),
            SymCmp::Less => self.minorize_cmp(ss, t),
            SymCmp::Equivalent => {
                for (k, (sk, tk)) in ss.iter().zip(ts).enumerate() {
                    match self.fast_compare(sk, tk)? {
                        OrderResult::Eqv => continue,
                        OrderResult::Gt => return self.majorize_cmp(s, &ts[k + 1..]),
                        OrderResult::Lt => return self.minorize_cmp(&ss[k + 1..], t),
                        OrderResult::Inc => return self.sub_cmp(&ss[k + 1..], t, s, &ts[k + 1..]),
                    }
                }
                Ok(OrderResult::Eqv)
            }
            SymCmp::Incomparable => self.sub_cmp(ss, t, s, ts),
        }
    }

    /// `s` beats `t = g(ts)` iff it beats every `tj`; any `tj ≿ s` flips it.
    fn majorize_cmp(&mut self, s: &Term, ts: &[Term]) -> Result<OrderResult, LpoError> {
        let mut undecided = false;
        for tj in ts {
            match self.fast_compare(s, tj)? {
                OrderResult::Gt => {}
                OrderResult::Lt | OrderResult::Eqv => return Ok(OrderResult::Lt),
                OrderResult::Inc => undecided = true,
            }
        }
        Ok(if undecided { OrderResult::Inc } else { OrderResult::Gt })
    }

    fn minorize_cmp(&mut self, ss: &[Term], t: &Term) -> Result<OrderResult, LpoError> {
        let mut undecided = false;
        for si in ss {
            match self.fast_compare(si, t)? {
                OrderResult::Lt => {}
                OrderResult::Gt | OrderResult::Eqv => return Ok(OrderResult::Gt),
                OrderResult::Inc => undecided = true,
            }
        }
        Ok(if undecided { OrderResult::Inc } else { OrderResult::Lt })
    }

    /// Only the subterm case can apply, in either direction.
    fn sub_cmp(
        &mut self,
        ss: &[Term],
        t: &Term,
        s: &Term,
        ts: &[Term],
    ) -> Result<OrderResult, LpoError> {
        for si in ss {
            if embed_geq(si, t)
                || matches!(self.fast_compare(si, t)?, OrderResult::Gt | OrderResult::Eqv)
            {
                return Ok(OrderResult::Gt);
            }
        }
        for tj in ts {
            if embed_geq(tj, s)
                || matches!(self.fast_compare(s, tj)?, OrderResult::Lt | OrderResult::Eqv)
            {
                return Ok(OrderResult::Lt);
            }
        }
        Ok(OrderResult::Inc)
    }
}
