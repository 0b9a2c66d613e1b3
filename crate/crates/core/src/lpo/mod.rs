//! Lexicographic path order over a quasi-precedence.
//!
//! Three relations are provided: the strict order `s ≻ t` ([`lpo_gt`]), the
//! equivalence `s ∼ t` induced by equivalent symbols ([`lpo_eq`]) and the
//! quasi-order `s ≿ t` ([`lpo_geq`]), plus a four-valued [`compare`].
//!
//! Each is available in three algorithmic variants that agree extensionally:
//!
//! * [`Variant::Naive`] follows the recursive definition literally: subterm
//!   case first, then the precedence and lexicographic cases, and derives
//!   `compare` from up to three independent traversals.
//! * [`Variant::Improved`] dispatches on the head comparison first, scans
//!   argument lists once in the lexicographic case, uses homeomorphic
//!   embedding as a pretest in the subterm case, handles variables on the
//!   right by an occurrence check, and computes `compare` in a single
//!   recursion that decides both directions at once.
//! * [`Variant::Memoized`] is `Improved` with a per-session table keyed by the
//!   hash-consed identities of both terms.

mod fast;
mod naive;

use std::collections::HashMap;

use thiserror::Error;

use crate::precedence::QuasiPrecedence;
use crate::term::{Term, TermId, STACK_GROWTH, STACK_RED_ZONE};

pub const DEFAULT_DEPTH_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpoError {
    #[error("comparison exceeded the recursion depth cap of {cap}")]
    DepthExceeded { cap: usize },
    #[error("lexicographic extension needs equal lengths, got {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// Joint outcome of comparing `s` with `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderResult {
    /// `s ≻ t`
    Gt,
    /// `t ≻ s`
    Lt,
    /// `s ∼ t`
    Eqv,
    /// none of the above
    Inc,
}

impl OrderResult {
    pub fn reverse(self) -> OrderResult {
        match self {
            OrderResult::Gt => OrderResult::Lt,
            OrderResult::Lt => OrderResult::Gt,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrderResult::Gt => "GT",
            OrderResult::Lt => "LT",
            OrderResult::Eqv => "EQV",
            OrderResult::Inc => "INC",
        }
    }
}

impl std::fmt::Display for OrderResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of the lexicographic extension on argument lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexResult {
    Greater,
    Equivalent,
    NotGreaterOrEqual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Naive,
    Improved,
    Memoized,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Naive, Variant::Improved, Variant::Memoized];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Naive => "naive",
            Variant::Improved => "improved",
            Variant::Memoized => "memoized",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Variant::Naive),
            "improved" => Ok(Variant::Improved),
            "memoized" => Ok(Variant::Memoized),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComparisonStats {
    /// Invocations of the recursive relation procedures.
    pub calls: u64,
    pub memo_hits: u64,
    pub peak_memo_size: usize,
}

type Pair = (TermId, TermId);

/// Results cached by the memoized variant within one session.
#[derive(Debug, Default)]
pub struct MemoTable {
    gt: HashMap<Pair, bool>,
    geq: HashMap<Pair, bool>,
    eq: HashMap<Pair, bool>,
    cmp: HashMap<Pair, OrderResult>,
}

impl MemoTable {
    pub fn len(&self) -> usize {
        self.gt.len() + self.geq.len() + self.eq.len() + self.cmp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The four-valued result recorded for `(s, t)`, if any.
    pub fn order(&self, s: TermId, t: TermId) -> Option<OrderResult> {
        self.cmp.get(&(s, t)).copied()
    }

    fn clear(&mut self) {
        self.gt.clear();
        self.geq.clear();
        self.eq.clear();
        self.cmp.clear();
    }
}

/// A comparison session over one precedence.
///
/// Statistics accumulate across calls until [`Comparator::reset`]; the memo
/// table of the memoized variant lives exactly as long as the session, which
/// borrows its precedence immutably.
pub struct Comparator<'p> {
    prec: &'p QuasiPrecedence,
    variant: Variant,
    depth_cap: usize,
    depth: usize,
    stats: ComparisonStats,
    memo: MemoTable,
}

impl<'p> Comparator<'p> {
    pub fn new(prec: &'p QuasiPrecedence, variant: Variant) -> Comparator<'p> {
        Comparator {
            prec,
            variant,
            depth_cap: DEFAULT_DEPTH_CAP,
            depth: 0,
            stats: ComparisonStats::default(),
            memo: MemoTable::default(),
        }
    }

    pub fn with_depth_cap(mut self, cap: usize) -> Self {
        self.depth_cap = cap;
        self
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn precedence(&self) -> &'p QuasiPrecedence {
        self.prec
    }

    pub fn stats(&self) -> ComparisonStats {
        self.stats
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    /// Clears statistics and the memo table.
    pub fn reset(&mut self) {
        self.stats = ComparisonStats::default();
        self.memo.clear();
        self.depth = 0;
    }

    /// `s ≻ t`
    pub fn gt(&mut self, s: &Term, t: &Term) -> Result<bool, LpoError> {
        self.depth = 0;
        match self.variant {
            Variant::Naive => self.naive_gt(s, t),
            Variant::Improved | Variant::Memoized => self.fast_rel(s, t, false),
        }
    }

    /// `s ≿ t`
    pub fn geq(&mut self, s: &Term, t: &Term) -> Result<bool, LpoError> {
        self.depth = 0;
        match self.variant {
            Variant::Naive => Ok(self.naive_eq(s, t)? || self.naive_gt(s, t)?),
            Variant::Improved | Variant::Memoized => self.fast_rel(s, t, true),
        }
    }

    /// `s ∼ t`
    pub fn eq(&mut self, s: &Term, t: &Term) -> Result<bool, LpoError> {
        self.depth = 0;
        match self.variant {
            Variant::Naive => self.naive_eq(s, t),
            Variant::Improved | Variant::Memoized => self.fast_eq(s, t),
        }
    }

    pub fn compare(&mut self, s: &Term, t: &Term) -> Result<OrderResult, LpoError> {
        self.depth = 0;
        match self.variant {
            Variant::Naive => {
                if self.naive_eq(s, t)? {
                    Ok(OrderResult::Eqv)
                } else if self.naive_gt(s, t)? {
                    Ok(OrderResult::Gt)
                } else if self.naive_gt(t, s)? {
                    Ok(OrderResult::Lt)
                } else {
                    Ok(OrderResult::Inc)
                }
            }
            Variant::Improved | Variant::Memoized => self.fast_compare(s, t),
        }
    }

    /// Lexicographic extension of (`≻`, `∼`) to equal-length lists.
    pub fn lex_ext(&mut self, ss: &[Term], ts: &[Term]) -> Result<LexResult, LpoError> {
        if ss.len() != ts.len() {
            return Err(LpoError::LengthMismatch {
                left: ss.len(),
                right: ts.len(),
            });
        }
        self.depth = 0;
        match self.variant {
            Variant::Naive => self.naive_lex(ss, ts),
            Variant::Improved | Variant::Memoized => self.fast_lex(ss, ts),
        }
    }

    /// Counts one relation invocation and runs `body` one level deeper.
    #[inline]
    fn step<R>(
        &mut self,
        body: impl FnOnce(&mut Self) -> Result<R, LpoError>,
    ) -> Result<R, LpoError> {
        self.stats.calls += 1;
        if self.depth >= self.depth_cap {
            return Err(LpoError::DepthExceeded { cap: self.depth_cap });
        }
        self.depth += 1;
        let r = stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, || body(self));
        self.depth -= 1;
        r
    }

    fn memoizing(&self) -> bool {
        self.variant == Variant::Memoized
    }

    fn note_memo_size(&mut self) {
        let size = self.memo.len();
        if size > self.stats.peak_memo_size {
            self.stats.peak_memo_size = size;
        }
    }
}

/// `s ≻ t` in a fresh session.
pub fn lpo_gt(p: &QuasiPrecedence, s: &Term, t: &Term, v: Variant) -> Result<bool, LpoError> {
    Comparator::new(p, v).gt(s, t)
}

/// `s ≿ t` in a fresh session.
pub fn lpo_geq(p: &QuasiPrecedence, s: &Term, t: &Term, v: Variant) -> Result<bool, LpoError> {
    Comparator::new(p, v).geq(s, t)
}

/// `s ∼ t`: both the same variable, or equivalent heads with pairwise
/// equivalent arguments.
pub fn lpo_eq(p: &QuasiPrecedence, s: &Term, t: &Term) -> bool {
    // linear in the smaller term; the depth cap is not a concern here
    Comparator::new(p, Variant::Improved)
        .with_depth_cap(usize::MAX)
        .eq(s, t)
        .expect("equivalence check has no depth cap")
}

pub fn lex_ext(
    p: &QuasiPrecedence,
    ss: &[Term],
    ts: &[Term],
    v: Variant,
) -> Result<LexResult, LpoError> {
    Comparator::new(p, v).lex_ext(ss, ts)
}

pub fn compare(p: &QuasiPrecedence, s: &Term, t: &Term, v: Variant) -> Result<OrderResult, LpoError> {
    Comparator::new(p, v).compare(s, t)
}
