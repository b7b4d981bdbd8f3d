//! Text form of polynomials and matrices.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := rational | 'X' uint | '(' expr ')' | '[' expr ',' expr ']'
//! rational := uint ('/' uint)?
//! ```
//!
//! Whitespace is ignored, multiplication is explicit, and `[a, b]` means
//! `a*b - b*a`. Printing emits terms in graded lexicographic order.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::MatrixQ;
use crate::poly::{NcPolynomial, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: exponents must be nonnegative integers")]
    ExponentNegative { line: usize, col: usize },
}

impl SyntaxError {
    pub fn line(&self) -> usize {
        match self {
            SyntaxError::Syntax { line, .. } | SyntaxError::ExponentNegative { line, .. } => *line,
        }
    }

    fn shift_line(self, by: usize) -> Self {
        match self {
            SyntaxError::Syntax { line, col, message } => SyntaxError::Syntax {
                line: line + by,
                col,
                message,
            },
            SyntaxError::ExponentNegative { line, col } => SyntaxError::ExponentNegative {
                line: line + by,
                col,
            },
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn location(&self, at: usize) -> (usize, usize) {
        let before = &self.src[..at.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = at
            - before
                .iter()
                .rposition(|&b| b == b'\n')
                .map_or(0, |p| p + 1)
            + 1;
        (line, col)
    }

    fn error_at<T>(&self, at: usize, message: impl Into<String>) -> Result<T, SyntaxError> {
        let (line, col) = self.location(at);
        Err(SyntaxError::Syntax {
            line,
            col,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.describe_here();
            self.error_at(self.pos, format!("expected '{}', found {found}", c as char))
        }
    }

    fn describe_here(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        }
    }

    /// Digits at the cursor, without skipping whitespace first.
    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn uint(&mut self) -> Result<BigInt, SyntaxError> {
        self.skip_ws();
        let at = self.pos;
        match self.digits() {
            Some(s) => Ok(s.parse().expect("ascii digits")),
            None => {
                let found = self.describe_here();
                self.error_at(at, format!("expected an integer, found {found}"))
            }
        }
    }

    fn parse_all(&mut self) -> Result<NcPolynomial, SyntaxError> {
        let f = self.expr()?;
        if self.peek().is_some() {
            let found = self.describe_here();
            return self.error_at(self.pos, format!("unexpected {found}"));
        }
        Ok(f)
    }

    fn expr(&mut self) -> Result<NcPolynomial, SyntaxError> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NcPolynomial, SyntaxError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcPolynomial, SyntaxError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        if self.peek() == Some(b'-') {
            let (line, col) = self.location(at);
            return Err(SyntaxError::ExponentNegative { line, col });
        }
        let k = self.uint()?;
        match u32::try_from(k) {
            Ok(k) => Ok(base.pow(k)),
            Err(_) => self.error_at(at, "exponent too large"),
        }
    }

    fn atom(&mut self) -> Result<NcPolynomial, SyntaxError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                Ok(a.commutator(&b))
            }
            Some(b'X') => {
                let at = self.pos;
                self.pos += 1;
                let Some(s) = self.digits() else {
                    return self.error_at(self.pos, "expected a variable index after 'X'");
                };
                match s.parse::<Var>() {
                    Ok(v) if v >= 1 => Ok(NcPolynomial::var(v)),
                    Ok(_) => self.error_at(at, "variable indices start at 1"),
                    Err(_) => self.error_at(at, "variable index too large"),
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(NcPolynomial::constant(self.rational()?)),
            _ => {
                let found = self.describe_here();
                self.error_at(
                    self.pos,
                    format!("expected a number, variable, '(' or '[', found {found}"),
                )
            }
        }
    }

    fn rational(&mut self) -> Result<Rational, SyntaxError> {
        let num = self.uint()?;
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.skip_ws();
        let at = self.pos;
        let den = self.uint()?;
        if den.is_zero() {
            return self.error_at(at, "zero denominator");
        }
        Ok(Rational::new(num, den))
    }

    fn signed_rational(&mut self) -> Result<Rational, SyntaxError> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let r = self.rational()?;
        Ok(if neg { -r } else { r })
    }
}

pub fn parse(text: &str) -> Result<NcPolynomial, SyntaxError> {
    Parser::new(text).parse_all()
}

/// Canonical text; `parse(&print(f)) == f`.
pub fn print(f: &NcPolynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (word, coeff)) in f.terms().enumerate() {
        let negative = coeff.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = coeff.abs();
        if word.is_empty() {
            write!(out, "{magnitude}").expect("write to String");
        } else if magnitude.is_one() {
            write!(out, "{word}").expect("write to String");
        } else {
            write!(out, "{magnitude}*{word}").expect("write to String");
        }
    }
    out
}

/// Matrix literal: rows separated by `;`, entries by `,`, e.g. `1,0;0,-1`.
pub fn parse_matrix(text: &str) -> Result<MatrixQ, SyntaxError> {
    let mut p = Parser::new(text);
    let mut rows = vec![vec![p.signed_rational()?]];
    loop {
        if p.eat(b',') {
            let r = p.signed_rational()?;
            rows.last_mut().expect("nonempty").push(r);
        } else if p.eat(b';') {
            rows.push(vec![p.signed_rational()?]);
        } else if p.peek().is_none() {
            break;
        } else {
            let found = p.describe_here();
            return p.error_at(p.pos, format!("expected ',' or ';', found {found}"));
        }
    }
    let n = rows.len();
    if let Some(bad) = rows.iter().position(|r| r.len() != n) {
        return p.error_at(
            0,
            format!(
                "matrix is not square: {n} rows but row {} has {} entries",
                bad + 1,
                rows[bad].len()
            ),
        );
    }
    Ok(MatrixQ::from_rows(rows).expect("square and nonempty"))
}

/// One polynomial per line; `#` starts a comment, blank lines are skipped.
/// Returns `(line_number, polynomial, source_text)`.
pub fn parse_corpus(text: &str) -> Result<Vec<(usize, NcPolynomial, String)>, SyntaxError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f = parse(line).map_err(|e| e.shift_line(idx))?;
        out.push((idx + 1, f, line.to_string()));
    }
    Ok(out)
}

/// Rational as text: `p` or `p/q`.
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational, SyntaxError> {
    let mut p = Parser::new(text);
    let r = p.signed_rational()?;
    if p.peek().is_some() {
        let found = p.describe_here();
        return p.error_at(p.pos, format!("unexpected {found}"));
    }
    Ok(r)
}
