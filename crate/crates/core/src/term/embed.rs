//! Homeomorphic embedding over syntactic symbol identity.

use super::{Term, TermView, STACK_GROWTH, STACK_RED_ZONE};

/// `s ⊵emb t`: `t` is obtained from `s` by deleting surrounding context.
pub fn embed_geq(s: &Term, t: &Term) -> bool {
    if s == t {
        return true;
    }
    // embedding never increases size
    if t.size() > s.size() {
        return false;
    }
    match s.view() {
        TermView::Var(_) => false,
        TermView::App(f, ss) => stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, || {
            ss.iter().any(|si| embed_geq(si, t))
                || match t.view() {
                    TermView::App(g, ts) if f == g => {
                        ss.iter().zip(ts).all(|(si, ti)| embed_geq(si, ti))
                    }
                    _ => false,
                }
        }),
    }
}

/// Strict part of [`embed_geq`].
pub fn embed_gt(s: &Term, t: &Term) -> bool {
    s != t && embed_geq(s, t)
}
