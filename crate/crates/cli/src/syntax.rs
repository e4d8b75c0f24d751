//! Surface syntax: scalars in the field, algebra words, bundle points
//! `u[q^k*u0, v0]` / `v[q^k*v0, u0]`, and pairings `<a | b>`.
//!
//! ```text
//! expr    ::= product (('+' | '-') product)*
//! product ::= unary (('*' | '/') unary | unary)*
//! unary   ::= '-' unary | power
//! power   ::= atom ('^' '-'? INT)?
//! atom    ::= INT | IDENT | 'U' | 'V' | 'I' | '(' expr ')'
//!           | 'u[' expr ',' expr ']' | 'v[' expr ',' expr ']'
//!           | '<' expr '|' expr '>'
//! ```

use std::fmt;

use num_bigint::BigInt;
use qtorus_core::bundle::Sort;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    U,
    V,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    Sym(String),
    Gen(Gen),
    Identity,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Point(Sort, Box<Expr>, Box<Expr>),
    Pair(Box<Expr>, Box<Expr>),
    /// An algebra element applied to a vector.
    Apply(Box<Expr>, Box<Expr>),
}

/// Static sort of a well-formed expression.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Scalar,
    Algebra,
    Vector(Sort),
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Scalar => f.write_str("scalar"),
            Kind::Algebra => f.write_str("algebra element"),
            Kind::Vector(s) => write!(f, "{s}-sort vector"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },
    #[error("sort error: {0}")]
    Sort(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Ident(String),
    U,
    V,
    I,
    PointU,
    PointV,
    Comma,
    RBracket,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LAngle,
    Bar,
    RAngle,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::U => "'U'".into(),
            Tok::V => "'V'".into(),
            Tok::I => "'I'".into(),
            Tok::PointU => "'u['".into(),
            Tok::PointV => "'v['".into(),
            Tok::Comma => "','".into(),
            Tok::RBracket => "']'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LAngle => "'<'".into(),
            Tok::Bar => "'|'".into(),
            Tok::RAngle => "'>'".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self,
            Tok::Int(_)
                | Tok::Ident(_)
                | Tok::U
                | Tok::V
                | Tok::I
                | Tok::PointU
                | Tok::PointV
                | Tok::LParen
                | Tok::LAngle
        )
    }
}

const ATOM_START: &str = "integer, identifier, 'U', 'V', 'I', 'u[', 'v[', '(' or '<'";

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        let push = |out: &mut Vec<Spanned>, tok| {
            out.push(Spanned {
                tok,
                line: start_line,
                column: start_col,
            })
        };
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            push(&mut out, Tok::Int(s.parse().expect("digits")));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            let next_bracket = chars.get(i) == Some(&'[');
            let tok = match s.as_str() {
                "u" if next_bracket => Tok::PointU,
                "v" if next_bracket => Tok::PointV,
                "U" => Tok::U,
                "V" => Tok::V,
                "I" => Tok::I,
                _ if c.is_ascii_lowercase() => Tok::Ident(s),
                _ => {
                    return Err(ParseError::Syntax {
                        line: start_line,
                        column: start_col,
                        expected: ATOM_START.into(),
                        found: format!("'{s}'"),
                    })
                }
            };
            if matches!(tok, Tok::PointU | Tok::PointV) {
                i += 1;
                column += 1;
            }
            push(&mut out, tok);
            continue;
        }
        let tok = match c {
            ',' => Tok::Comma,
            ']' => Tok::RBracket,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '<' => Tok::LAngle,
            '|' => Tok::Bar,
            '>' => Tok::RAngle,
            _ => {
                return Err(ParseError::Syntax {
                    line,
                    column,
                    expected: "a token".into(),
                    found: format!("'{c}'"),
                })
            }
        };
        push(&mut out, tok);
        i += 1;
        column += 1;
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError::Syntax {
            line: s.line,
            column: s.column,
            expected: expected.into(),
            found: s.tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&tok.describe()))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                t if t.starts_atom() => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Int(n) => {
                let n = i64::try_from(&n).map_err(|_| self.error("an exponent that fits in 64 bits"))?;
                self.bump();
                Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }))
            }
            _ => Err(self.error("integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Sym(s))
            }
            Tok::U => {
                self.bump();
                Ok(Expr::Gen(Gen::U))
            }
            Tok::V => {
                self.bump();
                Ok(Expr::Gen(Gen::V))
            }
            Tok::I => {
                self.bump();
                Ok(Expr::Identity)
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::PointU | Tok::PointV => {
                let sort = if self.bump() == Tok::PointU { Sort::U } else { Sort::V };
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::Point(sort, Box::new(a), Box::new(b)))
            }
            Tok::LAngle => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Bar)?;
                let b = self.expr()?;
                self.expect(Tok::RAngle)?;
                Ok(Expr::Pair(Box::new(a), Box::new(b)))
            }
            _ => Err(self.error(ATOM_START)),
        }
    }
}

/// Parses and sort-checks an expression. Products of an algebra element with
/// a vector become [`Expr::Apply`].
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error("an operator or end of input"));
    }
    Ok(check(e)?.0)
}

fn sort_err(msg: String) -> ParseError {
    ParseError::Sort(msg)
}

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

/// Sort pass: computes each node's kind and rewrites algebra-times-vector
/// products.
pub fn check(e: Expr) -> Result<(Expr, Kind), ParseError> {
    use Kind::*;
    Ok(match e {
        Expr::Int(_) | Expr::Sym(_) => (e, Scalar),
        Expr::Gen(_) | Expr::Identity => (e, Algebra),
        Expr::Neg(a) => {
            let (a, k) = check(*a)?;
            (Expr::Neg(bx(a)), k)
        }
        Expr::Add(a, b) => {
            let (a, b, k) = additive(*a, *b, "+")?;
            (Expr::Add(bx(a), bx(b)), k)
        }
        Expr::Sub(a, b) => {
            let (a, b, k) = additive(*a, *b, "-")?;
            (Expr::Sub(bx(a), bx(b)), k)
        }
        Expr::Mul(a, b) | Expr::Apply(a, b) => {
            let (a, ka) = check(*a)?;
            let (b, kb) = check(*b)?;
            match (ka, kb) {
                (Scalar, Scalar) => (Expr::Mul(bx(a), bx(b)), Scalar),
                (Scalar | Algebra, Scalar | Algebra) => (Expr::Mul(bx(a), bx(b)), Algebra),
                (Scalar, Vector(s)) | (Vector(s), Scalar) => (Expr::Mul(bx(a), bx(b)), Vector(s)),
                (Algebra, Vector(s)) => (Expr::Apply(bx(a), bx(b)), Vector(s)),
                (x, y) => return Err(sort_err(format!("cannot multiply {x} by {y}"))),
            }
        }
        Expr::Div(a, b) => {
            let (a, ka) = check(*a)?;
            let (b, kb) = check(*b)?;
            if kb != Scalar {
                return Err(sort_err(format!("cannot divide by {kb}")));
            }
            (Expr::Div(bx(a), bx(b)), ka)
        }
        Expr::Pow(a, n) => {
            let (a, k) = check(*a)?;
            if let Vector(_) = k {
                return Err(sort_err(format!("cannot raise {k} to a power")));
            }
            (Expr::Pow(bx(a), n), k)
        }
        Expr::Point(s, a, b) => {
            let (a, ka) = check(*a)?;
            let (b, kb) = check(*b)?;
            if ka != Scalar || kb != Scalar {
                return Err(sort_err(format!("point coordinates must be scalars, got {ka} and {kb}")));
            }
            (Expr::Point(s, bx(a), bx(b)), Vector(s))
        }
        Expr::Pair(a, b) => {
            let (a, ka) = check(*a)?;
            let (b, kb) = check(*b)?;
            match (ka, kb) {
                (Vector(x), Vector(y)) if x != y => (Expr::Pair(bx(a), bx(b)), Scalar),
                (Vector(x), Vector(_)) => {
                    return Err(sort_err(format!("pairing needs opposite sorts, got {x} and {x}")))
                }
                (x, y) => return Err(sort_err(format!("pairing needs two vectors, got {x} and {y}"))),
            }
        }
    })
}

fn additive(a: Expr, b: Expr, op: &str) -> Result<(Expr, Expr, Kind), ParseError> {
    use Kind::*;
    let (a, ka) = check(a)?;
    let (b, kb) = check(b)?;
    let k = match (ka, kb) {
        (x, y) if x == y => x,
        (Scalar | Algebra, Scalar | Algebra) => Algebra,
        (x, y) => return Err(sort_err(format!("cannot combine {x} {op} {y}"))),
    };
    Ok((a, b, k))
}

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const ATOM: u8 = 5;

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) | Expr::Div(..) | Expr::Apply(..) => PRODUCT,
        Expr::Neg(_) => UNARY,
        Expr::Pow(..) => 4,
        _ => ATOM,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the fewest parentheses that still re-parse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, lvl: u8| {
            write_at(f, a, lvl)?;
            write!(f, " {op} ")?;
            write_at(f, b, lvl + 1)
        };
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sym(s) => f.write_str(s),
            Expr::Gen(Gen::U) => f.write_str("U"),
            Expr::Gen(Gen::V) => f.write_str("V"),
            Expr::Identity => f.write_str("I"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, UNARY)
            }
            Expr::Add(a, b) => binary(f, a, "+", b, SUM),
            Expr::Sub(a, b) => binary(f, a, "-", b, SUM),
            Expr::Mul(a, b) | Expr::Apply(a, b) => binary(f, a, "*", b, PRODUCT),
            Expr::Div(a, b) => binary(f, a, "/", b, PRODUCT),
            Expr::Pow(a, n) => {
                write_at(f, a, ATOM)?;
                write!(f, "^{n}")
            }
            Expr::Point(s, a, b) => {
                let head = match s {
                    Sort::U => 'u',
                    Sort::V => 'v',
                };
                write!(f, "{head}[{a}, {b}]")
            }
            Expr::Pair(a, b) => write!(f, "<{a} | {b}>"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn application_node() {
        let e = parse("V*U * u[u0, v0]").unwrap();
        match &e {
            Expr::Apply(w, p) => {
                assert_eq!(w.to_string(), "V * U");
                assert!(matches!(**p, Expr::Point(Sort::U, _, _)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pairing_node() {
        assert!(matches!(parse("< v[v0,u0] | u[u0,v0] >").unwrap(), Expr::Pair(..)));
    }

    #[test]
    fn same_sort_pairing_is_a_sort_error() {
        let e = parse("< u[u0,v0] | u[u0,v0] >").unwrap_err();
        assert!(matches!(e, ParseError::Sort(_)), "{e}");
    }

    #[test]
    fn syntax_error_position() {
        let e = parse("u0 +\n  * 2").unwrap_err();
        match e {
            ParseError::Syntax { line, column, .. } => assert_eq!((line, column), (2, 3)),
            other => panic!("{other}"),
        }
        assert!(matches!(parse("u[u0 v0]"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("W"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn juxtaposition_and_powers() {
        let e = parse("2 q^-3 u0").unwrap();
        assert_eq!(e.to_string(), "2 * q^-3 * u0");
        assert_eq!(parse("-x^2").unwrap(), Expr::Neg(bx(Expr::Pow(bx(Expr::Sym("x".into())), 2))));
    }

    #[test]
    fn minimal_parentheses() {
        for s in ["a - (b - c)", "(a + b) * c", "a / (b * c)", "(-a)^2", "-a^2", "a * -b", "(a^2)^3"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
        assert_eq!(parse("((a)) + (b * c)").unwrap().to_string(), "a + b * c");
    }

    #[test]
    fn vector_times_algebra_is_rejected() {
        assert!(matches!(parse("u[u0, v0] * U"), Err(ParseError::Sort(_))));
        assert!(matches!(parse("u[u0, v0] + v[v0, u0]"), Err(ParseError::Sort(_))));
    }
}
