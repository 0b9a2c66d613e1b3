use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    LParen,
    RParen,
    Comma,
    Arrow,
    Bar,
    Gt,
    Tilde,
    Ident(String),
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::Comma => "\",\"".into(),
            Tok::Arrow => "\"->\"".into(),
            Tok::Bar => "\"|\"".into(),
            Tok::Gt => "\">\"".into(),
            Tok::Tilde => "\"~\"".into(),
            Tok::Ident(s) => format!("\"{s}\""),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Trs,
    Precedence,
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric()
        || matches!(c, '_' | '\'' | '+' | '*' | '/' | '-')
        || (!c.is_ascii() && !c.is_whitespace())
}

pub(crate) struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
    mode: Mode,
    peeked: Option<Spanned>,
}

impl<'a> Lexer<'a> {
    pub(crate) fn new(src: &'a str, mode: Mode) -> Lexer<'a> {
        Lexer {
            src,
            pos: 0,
            line: 1,
            column: 1,
            mode,
            peeked: None,
        }
    }

    fn current(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn lookahead(&self) -> Option<char> {
        let mut it = self.src[self.pos..].chars();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.current()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    pub(crate) fn peek(&mut self) -> Result<&Spanned, ParseError> {
        if self.peeked.is_none() {
            let t = self.scan()?;
            self.peeked = Some(t);
        }
        Ok(self.peeked.as_ref().expect("just filled"))
    }

    pub(crate) fn next(&mut self) -> Result<Spanned, ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.scan(),
        }
    }

    fn scan(&mut self) -> Result<Spanned, ParseError> {
        while self.current().is_some_and(char::is_whitespace) {
            self.bump();
        }
        let (line, column) = (self.line, self.column);
        let at = |tok| Ok(Spanned { tok, line, column });
        let Some(c) = self.current() else {
            return at(Tok::Eof);
        };
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '|' if self.mode == Mode::Trs => Some(Tok::Bar),
            '>' if self.mode == Mode::Precedence => Some(Tok::Gt),
            '~' if self.mode == Mode::Precedence => Some(Tok::Tilde),
            _ => None,
        };
        if let Some(tok) = single {
            self.bump();
            return at(tok);
        }
        if c == '-' && self.lookahead() == Some('>') && self.mode == Mode::Trs {
            self.bump();
            self.bump();
            return at(Tok::Arrow);
        }
        if !is_ident_char(c) {
            return Err(ParseError {
                line,
                column,
                expected: "identifier or punctuation".into(),
                found: format!("character {c:?}"),
            });
        }
        let start = self.pos;
        while let Some(c) = self.current() {
            if !is_ident_char(c) || (c == '-' && self.lookahead() == Some('>') && self.mode == Mode::Trs) {
                break;
            }
            self.bump();
        }
        at(Tok::Ident(self.src[start..self.pos].to_owned()))
    }

    /// Skips raw text up to and including the `)` closing the current block.
    pub(crate) fn skip_block(&mut self) -> Result<(), ParseError> {
        debug_assert!(self.peeked.is_none());
        let mut depth = 1usize;
        while let Some(c) = self.bump() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(());
                    }
                }
                _ => {}
            }
        }
        Err(ParseError {
            line: self.line,
            column: self.column,
            expected: "\")\"".into(),
            found: Tok::Eof.describe(),
        })
    }
}
