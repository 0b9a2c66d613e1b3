//! Text formats: terms, rewrite systems in the legacy TPDB syntax,
//! precedences in chain syntax, and witnesses.
//!
//! ```text
//! (VAR x y)
//! (RULES
//!   +(x, 0) -> x
//!   +(x, s(y)) -> s(+(x, y))
//! )
//! ```
//!
//! Symbols and arities are inferred from use. Identifiers may contain
//! `+ * - / _ '`, ASCII alphanumerics and any non-ASCII character; the tokens
//! `( ) , -> |` and whitespace separate them.

mod lexer;

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::precedence::{PrecedenceError, QuasiPrecedence};
use crate::prover::{ProverError, Rule, RuleError, Trs, Witness};
use crate::term::{Signature, Symbol, Term};
use lexer::{Lexer, Mode, Spanned, Tok};

/// A syntax error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrsError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("line {line}, column {column}: symbol {name} used with arities {first} and {second}")]
    Arity {
        name: String,
        first: usize,
        second: usize,
        line: usize,
        column: usize,
    },
    #[error("rule {rule}: left-hand side is a variable")]
    VarLhs { rule: usize },
    #[error("rule {rule}: variable {var} occurs only on the right-hand side")]
    ExtraVarRhs { rule: usize, var: String },
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("unsupported feature: {0}")]
    UnsupportedFeature(String),
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error(transparent)]
    Precedence(PrecedenceError),
}

fn unexpected(tok: &Spanned, expected: impl Into<String>) -> ParseError {
    ParseError {
        line: tok.line,
        column: tok.column,
        expected: expected.into(),
        found: tok.tok.describe(),
    }
}

struct TermParser<'v> {
    vars: &'v HashSet<String>,
    // name -> (arity, line, column of first use)
    arities: HashMap<String, usize>,
}

struct Frame {
    name: String,
    line: usize,
    column: usize,
    args: Vec<Term>,
}

impl TermParser<'_> {
    fn make(&mut self, name: String, line: usize, column: usize, args: Vec<Term>) -> Result<Term, TrsError> {
        let arity = args.len();
        match self.arities.get(&name) {
            Some(&first) if first != arity => {
                return Err(TrsError::Arity {
                    name,
                    first,
                    second: arity,
                    line,
                    column,
                })
            }
            Some(_) => {}
            None => {
                self.arities.insert(name.clone(), arity);
            }
        }
        Ok(Term::app(Symbol::new(&name, arity), args).expect("arity matches argument count"))
    }

    /// Iterative so that deeply nested input cannot exhaust the stack.
    fn term(&mut self, lex: &mut Lexer<'_>) -> Result<Term, TrsError> {
        let mut stack: Vec<Frame> = Vec::new();
        loop {
            let tok = lex.next()?;
            let Tok::Ident(name) = tok.tok.clone() else {
                return Err(unexpected(&tok, "a term").into());
            };
            let mut value = if lex.peek()?.tok == Tok::LParen {
                let open = lex.next()?;
                if self.vars.contains(&name) {
                    return Err(unexpected(&open, format!("no arguments after variable {name}")).into());
                }
                if lex.peek()?.tok == Tok::RParen {
                    lex.next()?;
                    self.make(name, tok.line, tok.column, Vec::new())?
                } else {
                    stack.push(Frame {
                        name,
                        line: tok.line,
                        column: tok.column,
                        args: Vec::new(),
                    });
                    continue;
                }
            } else if self.vars.contains(&name) {
                Term::var(&name)
            } else {
                self.make(name, tok.line, tok.column, Vec::new())?
            };
            loop {
                let Some(frame) = stack.last_mut() else {
                    return Ok(value);
                };
                frame.args.push(value);
                let sep = lex.next()?;
                match sep.tok {
                    Tok::Comma => break,
                    Tok::RParen => {
                        let frame = stack.pop().expect("non-empty");
                        value = self.make(frame.name, frame.line, frame.column, frame.args)?;
                    }
                    _ => return Err(unexpected(&sep, "\",\" or \")\"").into()),
                }
            }
        }
    }
}

/// Parses a single term; identifiers in `vars` become variables.
pub fn parse_term<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Term, TrsError> {
    let vars: HashSet<String> = vars.iter().map(|v| v.as_ref().to_owned()).collect();
    let mut lex = Lexer::new(text, Mode::Trs);
    let mut parser = TermParser {
        vars: &vars,
        arities: HashMap::new(),
    };
    let t = parser.term(&mut lex)?;
    let end = lex.next()?;
    if end.tok != Tok::Eof {
        return Err(unexpected(&end, "end of input").into());
    }
    Ok(t)
}

/// Parses the legacy TPDB subset: `(VAR ...)`, `(RULES ...)` and
/// `(COMMENT ...)` blocks.
pub fn parse_trs(text: &str) -> Result<Trs, TrsError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    if text.trim_start().starts_with('<') {
        return Err(TrsError::UnsupportedFormat(
            "XML problem files are not supported; use the legacy (VAR ...) (RULES ...) format".into(),
        ));
    }
    let mut lex = Lexer::new(text, Mode::Trs);
    let mut vars: HashSet<String> = HashSet::new();
    let mut arities: HashMap<String, usize> = HashMap::new();
    let mut rules = Vec::new();
    loop {
        let open = lex.next()?;
        match open.tok {
            Tok::Eof => break,
            Tok::LParen => {}
            _ => return Err(unexpected(&open, "\"(\"").into()),
        }
        let keyword = lex.next()?;
        let Tok::Ident(kw) = &keyword.tok else {
            return Err(unexpected(&keyword, "VAR, RULES or COMMENT").into());
        };
        match kw.as_str() {
            "COMMENT" => lex.skip_block()?,
            "VAR" => loop {
                let tok = lex.next()?;
                match &tok.tok {
                    Tok::Ident(name) => {
                        if arities.contains_key(name) {
                            return Err(unexpected(&tok, "a name not already used as a function symbol").into());
                        }
                        vars.insert(name.clone());
                    }
                    Tok::RParen => break,
                    _ => return Err(unexpected(&tok, "a variable name or \")\"").into()),
                }
            },
            "RULES" => {
                let mut parser = TermParser {
                    vars: &vars,
                    arities: std::mem::take(&mut arities),
                };
                loop {
                    if lex.peek()?.tok == Tok::RParen {
                        lex.next()?;
                        break;
                    }
                    let lhs = parser.term(&mut lex)?;
                    let arrow = lex.next()?;
                    if arrow.tok != Tok::Arrow {
                        return Err(unexpected(&arrow, "\"->\"").into());
                    }
                    let rhs = parser.term(&mut lex)?;
                    if lex.peek()?.tok == Tok::Bar {
                        return Err(TrsError::UnsupportedFeature("conditional rules".into()));
                    }
                    let index = rules.len() + 1;
                    rules.push(Rule::new(lhs, rhs).map_err(|e| match e {
                        RuleError::VarLhs => TrsError::VarLhs { rule: index },
                        RuleError::ExtraVarRhs(v) => TrsError::ExtraVarRhs {
                            rule: index,
                            var: v.name().to_owned(),
                        },
                    })?);
                }
                arities = parser.arities;
            }
            "THEORY" => return Err(TrsError::UnsupportedFeature("THEORY declarations".into())),
            "STRATEGY" => return Err(TrsError::UnsupportedFeature("STRATEGY annotations".into())),
            _ => return Err(unexpected(&keyword, "VAR, RULES or COMMENT").into()),
        }
    }
    Trs::new(rules).map_err(|e| match e {
        // arities are checked while parsing, so this is unreachable in practice
        ProverError::MalformedTrs(msg) => TrsError::UnsupportedFeature(msg),
        other => TrsError::UnsupportedFeature(other.to_string()),
    })
}

/// Canonical spelling: `f(t1,...,tn)`, bare names for constants and variables.
pub fn format_term(t: &Term) -> String {
    t.to_string()
}

pub fn format_trs(trs: &Trs) -> String {
    let mut out = String::new();
    let vars = trs.variables();
    if !vars.is_empty() {
        out.push_str("(VAR");
        for v in vars {
            let _ = write!(out, " {v}");
        }
        out.push_str(")\n");
    }
    out.push_str("(RULES\n");
    for r in trs.rules() {
        let _ = writeln!(out, "  {r}");
    }
    out.push_str(")\n");
    out
}

/// Parses chain syntax (`ack > s ~ t > 0`, chains separated by `,`) over `sig`.
pub fn parse_precedence(text: &str, sig: &Signature) -> Result<QuasiPrecedence, TrsError> {
    let mut lex = Lexer::new(text, Mode::Precedence);
    let mut p = QuasiPrecedence::empty(sig);
    if lex.peek()?.tok == Tok::Eof {
        return Ok(p);
    }
    let lookup = |tok: Spanned| -> Result<Symbol, TrsError> {
        match tok.tok {
            Tok::Ident(name) => sig.get(&name).ok_or(TrsError::UnknownSymbol(name)),
            _ => Err(unexpected(&tok, "a symbol name").into()),
        }
    };
    loop {
        let mut previous: Option<Symbol> = None;
        loop {
            let head = lookup(lex.next()?)?;
            while lex.peek()?.tok == Tok::Tilde {
                lex.next()?;
                let other = lookup(lex.next()?)?;
                p.insert_eq(head, other).map_err(TrsError::Precedence)?;
            }
            if let Some(above) = previous {
                p.insert_gt(above, head).map_err(TrsError::Precedence)?;
            }
            previous = Some(head);
            if lex.peek()?.tok != Tok::Gt {
                break;
            }
            lex.next()?;
        }
        let sep = lex.next()?;
        match sep.tok {
            Tok::Comma => continue,
            Tok::Eof => return Ok(p),
            _ => return Err(unexpected(&sep, "\">\", \"~\", \",\" or end of input").into()),
        }
    }
}

/// Precedence line followed by one `ORIENTED` line per rule.
pub fn format_witness(trs: &Trs, w: &Witness) -> String {
    let mut out = format!("{}\n", w.precedence);
    for (rule, ok) in trs.rules().iter().zip(&w.oriented) {
        let tag = if *ok { "ORIENTED" } else { "FAILED" };
        let _ = writeln!(out, "{tag} {rule}");
    }
    out
}

/// Reads back the precedence from [`format_witness`] output.
pub fn parse_witness(text: &str, sig: &Signature) -> Result<QuasiPrecedence, TrsError> {
    parse_precedence(text.lines().next().unwrap_or(""), sig)
}
