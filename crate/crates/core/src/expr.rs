//! Operator expressions: syntax tree, parser and printer.
//!
//! Grammar (whitespace ignored between tokens):
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := unary ("*" unary)*
//! unary    := "-" unary | power
//! power    := atom ("^" exponent)?
//! exponent := int | "-" int | "(" "-"? int ")"
//! atom     := int | int "/" int | "c" | "x" | "D" | "e+" | "e-" | "s" | "(" expr ")"
//! ```
//!
//! `*` is composition and is never implicit. A rational literal `a/b` is a
//! single token. Negative exponents are accepted only on `x` and on nonzero
//! number literals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::mode::DunklMode;
use crate::opalgebra::Operator;
use crate::poly::{fmt_scalar, CoefPoly, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    /// A nonnegative rational literal.
    Num(Scalar),
    C,
    X,
    D,
    EPlus,
    EMinus,
    S,
    Neg(Box<Word>),
    Add(Box<Word>, Box<Word>),
    Sub(Box<Word>, Box<Word>),
    Mul(Box<Word>, Box<Word>),
    Pow(Box<Word>, i64),
}

impl Word {
    pub fn num(n: i64) -> Word {
        Word::Num(Scalar::from_integer(n.into()))
    }

    pub fn neg(a: Word) -> Word {
        Word::Neg(Box::new(a))
    }

    pub fn add(a: Word, b: Word) -> Word {
        Word::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Word, b: Word) -> Word {
        Word::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Word, b: Word) -> Word {
        Word::Mul(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Word, e: i64) -> Word {
        Word::Pow(Box::new(a), e)
    }

    /// Grading degree if the word is homogeneous (x ↦ 1, D ↦ −1, all else 0).
    pub fn degree(&self) -> Option<i64> {
        match self {
            Word::Num(_) | Word::C | Word::EPlus | Word::EMinus | Word::S => Some(0),
            Word::X => Some(1),
            Word::D => Some(-1),
            Word::Neg(a) => a.degree(),
            Word::Add(a, b) | Word::Sub(a, b) => {
                let (da, db) = (a.degree()?, b.degree()?);
                (da == db).then_some(da)
            }
            Word::Mul(a, b) => Some(a.degree()? + b.degree()?),
            Word::Pow(a, e) => Some(a.degree()? * e),
        }
    }

    /// Evaluates the word to its normal form.
    pub fn to_operator(&self, mode: &DunklMode) -> Operator {
        match self {
            Word::Num(q) => Operator::scalar(mode, CoefPoly::constant(q.clone())),
            Word::C => Operator::c(mode),
            Word::X => Operator::x(mode),
            Word::D => Operator::dunkl(mode),
            Word::EPlus => Operator::e_plus(mode),
            Word::EMinus => Operator::e_minus(mode),
            Word::S => Operator::reflection(mode),
            Word::Neg(a) => -&a.to_operator(mode),
            Word::Add(a, b) => &a.to_operator(mode) + &b.to_operator(mode),
            Word::Sub(a, b) => &a.to_operator(mode) - &b.to_operator(mode),
            Word::Mul(a, b) => &a.to_operator(mode) * &b.to_operator(mode),
            Word::Pow(a, e) if *e >= 0 => a.to_operator(mode).pow(*e as u32),
            Word::Pow(a, e) => match a.as_ref() {
                Word::X => Operator::x_pow(mode, *e),
                Word::Num(q) => {
                    let inv = q.recip().pow((-e) as i32);
                    Operator::scalar(mode, CoefPoly::constant(inv))
                }
                _ => unreachable!("negative exponents are rejected by the parser"),
            },
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Word::Add(..) | Word::Sub(..) => 1,
            Word::Mul(..) => 2,
            Word::Neg(_) => 3,
            Word::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Word::Num(q) => write!(f, "{}", fmt_scalar(q)),
            Word::C => write!(f, "c"),
            Word::X => write!(f, "x"),
            Word::D => write!(f, "D"),
            Word::EPlus => write!(f, "e+"),
            Word::EMinus => write!(f, "e-"),
            Word::S => write!(f, "s"),
            Word::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, 3)
            }
            Word::Add(a, b) | Word::Sub(a, b) => {
                a.write_at(f, 1)?;
                write!(f, " {} ", if matches!(self, Word::Add(..)) { '+' } else { '-' })?;
                b.write_at(f, 2)
            }
            Word::Mul(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "*")?;
                b.write_at(f, 3)
            }
            Word::Pow(a, e) => {
                a.write_at(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Rat(Scalar),
    C,
    X,
    D,
    EPlus,
    EMinus,
    S,
    LParen,
    RParen,
    Caret,
    Star,
    Plus,
    Minus,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Rat(q) => write!(f, "`{q}`"),
            Tok::C => write!(f, "`c`"),
            Tok::X => write!(f, "`x`"),
            Tok::D => write!(f, "`D`"),
            Tok::EPlus => write!(f, "`e+`"),
            Tok::EMinus => write!(f, "`e-`"),
            Tok::S => write!(f, "`s`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

const ATOM: &[&str] = &["number", "c", "x", "D", "e+", "e-", "s", "(", "-"];
const AFTER_ATOM: &[&str] = &["^", "*", "+", "-", ")", "end of input"];

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match b {
            b'0'..=b'9' => {
                let end = digits(i);
                let num: BigInt = input[i..end].parse().expect("ascii digits");
                i = end;
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    let end = digits(i + 1);
                    let den: BigInt = input[i + 1..end].parse().expect("ascii digits");
                    if den.is_zero() {
                        return Err(ParseError {
                            offset: i + 1,
                            expected: vec!["nonzero denominator"],
                            found: "`0`".into(),
                        });
                    }
                    i = end;
                    Tok::Rat(Scalar::new(num, den))
                } else {
                    Tok::Int(num)
                }
            }
            b'e' => match bytes.get(i + 1) {
                Some(b'+') => {
                    i += 2;
                    Tok::EPlus
                }
                Some(b'-') => {
                    i += 2;
                    Tok::EMinus
                }
                _ => {
                    return Err(ParseError {
                        offset: i,
                        expected: vec!["e+", "e-"],
                        found: "`e`".into(),
                    })
                }
            },
            _ => {
                i += 1;
                match b {
                    b'c' => Tok::C,
                    b'x' => Tok::X,
                    b'D' => Tok::D,
                    b's' => Tok::S,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b'^' => Tok::Caret,
                    b'*' => Tok::Star,
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    _ => {
                        let ch = input[start..].chars().next().unwrap_or('?');
                        return Err(ParseError {
                            offset: start,
                            expected: ATOM.to_vec(),
                            found: format!("`{ch}`"),
                        });
                    }
                }
            }
        };
        out.push((start, tok));
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().to_string(),
        }
    }

    fn expr(&mut self) -> Result<Word, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Word::add(acc, self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = Word::sub(acc, self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Word, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Word::mul(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Word, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Word::neg(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let e = self.exponent()?;
        let invertible = match &base {
            Word::X => true,
            Word::Num(q) => !q.is_zero(),
            _ => false,
        };
        if e < 0 && !invertible {
            return Err(ParseError {
                offset: at,
                expected: vec!["nonnegative exponent (negative powers need base x or a nonzero number)"],
                found: format!("`{e}`"),
            });
        }
        Ok(Word::pow(base, e))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = *self.peek() == Tok::LParen;
        if paren {
            self.bump();
        }
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        let at = self.offset();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(self.error(&["integer exponent"]));
        };
        let Ok(mut e) = i64::try_from(&n) else {
            return Err(ParseError {
                offset: at,
                expected: vec!["exponent in 64-bit range"],
                found: format!("`{n}`"),
            });
        };
        self.bump();
        if neg {
            e = -e;
        }
        if paren {
            if *self.peek() != Tok::RParen {
                return Err(self.error(&[")"]));
            }
            self.bump();
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        let w = match self.peek().clone() {
            Tok::Int(n) => Word::Num(Scalar::from_integer(n)),
            Tok::Rat(q) => Word::Num(q),
            Tok::C => Word::C,
            Tok::X => Word::X,
            Tok::D => Word::D,
            Tok::EPlus => Word::EPlus,
            Tok::EMinus => Word::EMinus,
            Tok::S => Word::S,
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["*", "+", "-", ")"]));
                }
                self.bump();
                return Ok(inner);
            }
            _ => return Err(self.error(ATOM)),
        };
        self.bump();
        Ok(w)
    }
}

/// Parses an operator expression.
pub fn parse(input: &str) -> Result<Word, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let w = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(AFTER_ATOM));
    }
    Ok(w)
}

/// Parses and evaluates an expression.
pub fn evaluate(input: &str, mode: &DunklMode) -> Result<Operator, ParseError> {
    Ok(parse(input)?.to_operator(mode))
}

/// A word is printable-and-reparseable when its literals are nonnegative and
/// negative exponents sit on `x` or nonzero literals.
pub fn is_canonical(w: &Word) -> bool {
    match w {
        Word::Num(q) => !q.is_negative(),
        Word::C | Word::X | Word::D | Word::EPlus | Word::EMinus | Word::S => true,
        Word::Neg(a) => is_canonical(a),
        Word::Add(a, b) | Word::Sub(a, b) | Word::Mul(a, b) => is_canonical(a) && is_canonical(b),
        Word::Pow(a, e) => {
            is_canonical(a)
                && (*e >= 0 || matches!(a.as_ref(), Word::X) || matches!(a.as_ref(), Word::Num(q) if !q.is_zero()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn commutator_parses() {
        let w = parse("D*x - x*D").unwrap();
        assert_eq!(
            w,
            Word::sub(Word::mul(Word::D, Word::X), Word::mul(Word::X, Word::D))
        );
        let m = DunklMode::Symbolic;
        let expect = &Operator::identity(&m)
            - &(&Operator::c(&m) * &Operator::reflection(&m)).scale_scalar(&rat(2, 1));
        assert_eq!(w.to_operator(&m), expect);
    }

    #[test]
    fn scaled_word() {
        let w = parse("1/2 * D^2 * e+").unwrap();
        assert_eq!(
            w,
            Word::mul(
                Word::mul(Word::Num(rat(1, 2)), Word::pow(Word::D, 2)),
                Word::EPlus
            )
        );
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        let err = parse("e+ e-").unwrap_err();
        assert_eq!(err.offset, 3);
        assert!(err.expected.contains(&"*"));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("-x^2").unwrap(), Word::neg(Word::pow(Word::X, 2)));
        assert_eq!(
            parse("-x*D").unwrap(),
            Word::mul(Word::neg(Word::X), Word::D)
        );
        assert_eq!(
            parse("x - D - s").unwrap(),
            Word::sub(Word::sub(Word::X, Word::D), Word::S)
        );
    }

    #[test]
    fn negative_exponents() {
        let m = DunklMode::Symbolic;
        assert_eq!(parse("x^-1").unwrap().to_operator(&m), Operator::x_pow(&m, -1));
        assert_eq!(parse("x^(-3)").unwrap(), Word::pow(Word::X, -3));
        assert_eq!(
            parse("2^-2").unwrap().to_operator(&m),
            Operator::scalar(&m, CoefPoly::constant(rat(1, 4)))
        );
        let err = parse("D^-1").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(parse("0^-1").is_err());
    }

    #[test]
    fn lexical_errors() {
        assert_eq!(parse("x + y").unwrap_err().offset, 4);
        assert_eq!(parse("e").unwrap_err().expected, vec!["e+", "e-"]);
        assert_eq!(parse("1/0").unwrap_err().offset, 2);
        assert_eq!(parse("(x").unwrap_err().offset, 2);
        assert_eq!(parse("").unwrap_err().found, "end of input");
    }

    #[test]
    fn printing() {
        for s in ["D*x - x*D", "1/2*D^2*e+", "-x^2", "(x + D)^3", "x - (D - s)", "-(x*D)", "x^-1*e-"] {
            let w = parse(s).unwrap();
            assert_eq!(w.to_string(), s);
            assert_eq!(parse(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn degree_of_words() {
        assert_eq!(parse("x*D + D*x").unwrap().degree(), Some(0));
        assert_eq!(parse("x + D").unwrap().degree(), None);
        assert_eq!(parse("D^3*e+").unwrap().degree(), Some(-3));
    }
}
