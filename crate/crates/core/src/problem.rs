//! Problem-file parsing and canonical printing.
//!
//! ```text
//! vars: x y
//! objective: x^2 + y^2
//! constraints:
//!   x + y - 1
//! expect:
//!   status: attained
//!   value: 1/2
//! ```

use crate::arith::{parse_rational, Interval, Rational, UPoly};
use crate::mpoly::{MPoly, Ring};
use num_traits::One;
use std::fmt;
use thiserror::Error;

/// A parsed optimization problem: minimize `objective` over the common real
/// zeros of `constraints`.
#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: Ring,
    pub objective: MPoly,
    pub constraints: Vec<MPoly>,
    pub expect: Option<Expectation>,
}

/// Self-validation block carried by corpus files.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub status: ExpectedStatus,
    pub value: Option<ExpectedValue>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedStatus {
    Attained,
    NotAttained,
    Empty,
    Unbounded,
}

impl ExpectedStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExpectedStatus::Attained => "attained",
            ExpectedStatus::NotAttained => "not_attained",
            ExpectedStatus::Empty => "empty",
            ExpectedStatus::Unbounded => "unbounded",
        }
    }
}

#[derive(Clone, Debug)]
pub enum ExpectedValue {
    Rational(Rational),
    Root { annihilator: UPoly, interval: Interval },
}

#[derive(Debug, Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// Parses the `.pop` problem format. Coefficients are exact rationals;
/// variables must be declared on the `vars:` line before use.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut objective: Option<(usize, String)> = None;
    let mut constraints: Vec<(usize, String)> = Vec::new();
    let mut expect_status: Option<(usize, String)> = None;
    let mut expect_value: Option<(usize, String)> = None;

    #[derive(PartialEq)]
    enum Section {
        Top,
        Constraints,
        Expect,
    }
    let mut section = Section::Top;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let indented = line.starts_with(' ') || line.starts_with('\t');
        let trimmed = line.trim();
        if !indented {
            if let Some(rest) = trimmed.strip_prefix("vars:") {
                vars = Some(rest.split_whitespace().map(|s| s.to_string()).collect());
                section = Section::Top;
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("objective:") {
                objective = Some((lineno, rest.to_string()));
                section = Section::Top;
                continue;
            }
            if trimmed == "constraints:" {
                section = Section::Constraints;
                continue;
            }
            if trimmed == "expect:" {
                section = Section::Expect;
                continue;
            }
            return Err(ParseError::new(lineno, 1, format!("unrecognized line: {trimmed}")));
        }
        match section {
            Section::Constraints => constraints.push((lineno, trimmed.to_string())),
            Section::Expect => {
                if let Some(rest) = trimmed.strip_prefix("status:") {
                    expect_status = Some((lineno, rest.trim().to_string()));
                } else if let Some(rest) = trimmed.strip_prefix("value:") {
                    expect_value = Some((lineno, rest.trim().to_string()));
                } else {
                    return Err(ParseError::new(lineno, 1, "expected status: or value:"));
                }
            }
            Section::Top => {
                return Err(ParseError::new(lineno, 1, "indented line outside a block"));
            }
        }
    }

    let vars = vars.ok_or_else(|| ParseError::new(1, 1, "missing vars: line"))?;
    if vars.is_empty() {
        return Err(ParseError::new(1, 1, "vars: line declares no variables"));
    }
    for v in &vars {
        if !is_identifier(v) {
            return Err(ParseError::new(1, 1, format!("invalid variable name {v}")));
        }
    }
    let ring = Ring::new(vars);
    let (obj_line, obj_text) =
        objective.ok_or_else(|| ParseError::new(1, 1, "missing objective: line"))?;
    let objective = parse_polynomial(&ring, &obj_text, obj_line)?;

    let mut cons = Vec::new();
    for (lineno, text) in constraints {
        let p = parse_polynomial(&ring, &text, lineno)?;
        if p.is_zero() {
            return Err(ParseError::new(lineno, 1, "zero constraint polynomial"));
        }
        cons.push(p);
    }

    let expect = match expect_status {
        None => None,
        Some((lineno, status)) => {
            let status = match status.as_str() {
                "attained" => ExpectedStatus::Attained,
                "not_attained" => ExpectedStatus::NotAttained,
                "empty" => ExpectedStatus::Empty,
                "unbounded" => ExpectedStatus::Unbounded,
                other => {
                    return Err(ParseError::new(lineno, 1, format!("unknown status {other}")))
                }
            };
            let value = match expect_value {
                None => None,
                Some((vline, vtext)) => Some(parse_expected_value(&vtext, vline)?),
            };
            Some(Expectation { status, value })
        }
    };

    Ok(ProblemFile { ring, objective, constraints: cons, expect })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `value:` is either a rational or `root of <polynomial in T> in [lo, hi]`.
fn parse_expected_value(text: &str, line: usize) -> Result<ExpectedValue, ParseError> {
    if let Some(rest) = text.strip_prefix("root of") {
        let (poly_text, interval_text) = rest
            .rsplit_once(" in ")
            .ok_or_else(|| ParseError::new(line, 1, "expected `root of <poly> in [lo, hi]`"))?;
        let ring = Ring::new(vec!["T"]);
        let p = parse_polynomial(&ring, poly_text.trim(), line)?;
        let upoly = p.to_upoly(0);
        let interval_text = interval_text.trim();
        let inner = interval_text
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| ParseError::new(line, 1, "interval must be [lo, hi]"))?;
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| ParseError::new(line, 1, "interval must be [lo, hi]"))?;
        let lo = parse_rational(lo)
            .ok_or_else(|| ParseError::new(line, 1, "bad interval endpoint"))?;
        let hi = parse_rational(hi)
            .ok_or_else(|| ParseError::new(line, 1, "bad interval endpoint"))?;
        Ok(ExpectedValue::Root { annihilator: upoly, interval: Interval::new(lo, hi) })
    } else {
        let r = parse_rational(text)
            .ok_or_else(|| ParseError::new(line, 1, format!("bad rational {text}")))?;
        Ok(ExpectedValue::Rational(r))
    }
}

/// Recursive-descent parser for infix polynomial expressions: integers and
/// `a/b` rationals, `+ - * ^`, parentheses.
pub fn parse_polynomial(ring: &Ring, text: &str, line: usize) -> Result<MPoly, ParseError> {
    let tokens = tokenize(text, line)?;
    let mut parser = Parser { ring, tokens, pos: 0, line };
    let p = parser.expression()?;
    if parser.pos != parser.tokens.len() {
        let (col, _) = parser.tokens[parser.pos];
        return Err(ParseError::new(line, col, "trailing input"));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str, line: usize) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((col, Token::Plus));
                i += 1;
            }
            '-' | '−' => {
                out.push((col, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((col, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((col, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((col, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((col, Token::RParen));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                // optional /denominator for rational literals
                if i < chars.len() && chars[i] == '/' {
                    let mut j = i + 1;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j > i + 1 {
                        let lit: String = chars[start..j].iter().collect();
                        let r = parse_rational(&lit).ok_or_else(|| {
                            ParseError::new(line, col, format!("bad rational {lit}"))
                        })?;
                        out.push((col, Token::Number(r)));
                        i = j;
                        continue;
                    }
                }
                let lit: String = chars[start..i].iter().collect();
                let r = parse_rational(&lit)
                    .ok_or_else(|| ParseError::new(line, col, format!("bad integer {lit}")))?;
                out.push((col, Token::Number(r)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((col, Token::Ident(chars[start..i].iter().collect())));
            }
            other => {
                return Err(ParseError::new(line, col, format!("unexpected character {other:?}")))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map(|(c, _)| *c).unwrap_or(self.tokens.len() + 1)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expression(&mut self) -> Result<MPoly, ParseError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.advance();
            negate = true;
        } else if self.peek() == Some(&Token::Plus) {
            self.advance();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Token::Star) {
            self.advance();
            let f = self.power()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MPoly, ParseError> {
        let base = self.factor()?;
        if self.peek() == Some(&Token::Caret) {
            self.advance();
            let col = self.col();
            match self.advance() {
                Some(Token::Number(r)) if r.denom().is_one() && r >= Rational::from_integer(0.into()) => {
                    let e: usize = r.numer().try_into().map_err(|_| {
                        ParseError::new(self.line, col, "exponent too large")
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::new(self.line, col, "exponent must be a nonnegative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn factor(&mut self) -> Result<MPoly, ParseError> {
        let col = self.col();
        match self.advance() {
            Some(Token::Number(r)) => Ok(MPoly::constant(self.ring, r)),
            Some(Token::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(MPoly::var(self.ring, i)),
                None => Err(ParseError::new(self.line, col, format!("undeclared variable {name}"))),
            },
            Some(Token::LParen) => {
                let inner = self.expression()?;
                if self.advance() != Some(Token::RParen) {
                    return Err(ParseError::new(self.line, col, "unbalanced parenthesis"));
                }
                Ok(inner)
            }
            Some(Token::Minus) => {
                let inner = self.factor()?;
                Ok(inner.neg())
            }
            _ => Err(ParseError::new(self.line, col, "expected a factor")),
        }
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.ring.var_names().join(" "))?;
        writeln!(f, "objective: {}", self.objective.format_with_names())?;
        writeln!(f, "constraints:")?;
        for c in &self.constraints {
            writeln!(f, "  {}", c.format_with_names())?;
        }
        if let Some(e) = &self.expect {
            writeln!(f, "expect:")?;
            writeln!(f, "  status: {}", e.status.as_str())?;
            if let Some(v) = &e.value {
                match v {
                    ExpectedValue::Rational(r) => writeln!(f, "  value: {r}")?,
                    ExpectedValue::Root { annihilator, interval } => writeln!(
                        f,
                        "  value: root of {} in [{}, {}]",
                        annihilator, interval.lo, interval.hi
                    )?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_i};

    #[test]
    fn basic_parse() {
        let p = parse_problem("vars: x y\nobjective: x^2 + y^2\nconstraints:\n  x + y - 1\n")
            .unwrap();
        assert_eq!(p.ring.nvars(), 2);
        assert_eq!(p.constraints.len(), 1);
        assert_eq!(p.objective.total_degree(), 2);
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_problem("vars: x\nobjective: 1/3*x\nconstraints:\n").unwrap();
        let c = p.objective.terms().next().unwrap().1.clone();
        assert_eq!(c, rat(1, 3));
    }

    #[test]
    fn undeclared_variable_rejected() {
        let e = parse_problem("vars: x\nobjective: x*z\nconstraints:\n").unwrap_err();
        assert!(e.message.contains("undeclared"));
    }

    #[test]
    fn zero_constraint_rejected() {
        let e = parse_problem("vars: x\nobjective: x\nconstraints:\n  x - x\n").unwrap_err();
        assert!(e.message.contains("zero constraint"));
    }

    #[test]
    fn expect_block() {
        let text = "vars: x\nobjective: x^2\nconstraints:\nexpect:\n  status: attained\n  value: root of T^2 - 2 in [1, 2]\n";
        let p = parse_problem(text).unwrap();
        let e = p.expect.unwrap();
        assert_eq!(e.status, ExpectedStatus::Attained);
        match e.value.unwrap() {
            ExpectedValue::Root { annihilator, interval } => {
                assert_eq!(annihilator, UPoly::from_i64(&[-2, 0, 1]));
                assert_eq!(interval.lo, rat_i(1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn print_parse_fixed_point() {
        let text = "vars: x y\nobjective: x^2 - 1/2*y\nconstraints:\n  x*y - 1\n  x + y\nexpect:\n  status: attained\n  value: 3/2\n";
        let p1 = parse_problem(text).unwrap();
        let printed = p1.to_string();
        let p2 = parse_problem(&printed).unwrap();
        assert_eq!(printed, p2.to_string());
        assert_eq!(p1.objective, p2.objective);
        assert_eq!(p1.constraints, p2.constraints);
    }

    #[test]
    fn unary_minus_and_parens() {
        let p = parse_problem("vars: x y\nobjective: -(x - y)^2 + -3*x\nconstraints:\n").unwrap();
        let q = parse_problem("vars: x y\nobjective: -x^2 + 2*x*y - y^2 - 3*x\nconstraints:\n")
            .unwrap();
        assert_eq!(p.objective, q.objective);
    }
}
