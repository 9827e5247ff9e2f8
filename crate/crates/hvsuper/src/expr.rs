//! Expression grammar shared by the CLI: generators `L[m] H[m] G[p] Q[p]`,
//! polynomials in `x,y` (even sector) and `s,t` (odd sector), Laurent
//! scalars `L^k` (λ in unicode mode), supervectors `even: P | odd: Q` and
//! brackets `[A, B]`. Rendering is canonical and `parse ∘ render` is the
//! identity on every rendered value.

use crate::algebra::{bracket, AlgebraElement, GenKind, Generator};
use crate::omega::SuperVector;
use crate::poly::{BiPoly, UniPoly};
use crate::scalar::{HalfInt, Rat, Scalar, ScalarError};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

const MAX_POLY_EXP: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: found {found}, expected {}", expected.join(", "))]
    Syntax {
        offset: usize,
        found: String,
        expected: Vec<String>,
    },
    #[error("index parity error at byte {offset}: {kind:?} does not admit index {index}")]
    IndexParity {
        offset: usize,
        kind: GenKind,
        index: String,
    },
    #[error("{0}")]
    Eval(String),
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Kind(GenKind),
    VarX,
    VarY,
    VarS,
    VarT,
    Lambda,
    Even,
    Odd,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Colon,
    Pipe,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Kind(k) => format!("`{k:?}`"),
            Tok::VarX => "`x`".into(),
            Tok::VarY => "`y`".into(),
            Tok::VarS => "`s`".into(),
            Tok::VarT => "`t`".into(),
            Tok::Lambda => "`λ`".into(),
            Tok::Even => "`even`".into(),
            Tok::Odd => "`odd`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Pipe => "`|`".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < src.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'/' => Some(Tok::Slash),
            b'[' => Some(Tok::LBrack),
            b']' => Some(Tok::RBrack),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b':' => Some(Tok::Colon),
            b'|' => Some(Tok::Pipe),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((i, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < src.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < src.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word = &src[start..i];
            let tok = match word {
                "L" => Tok::Kind(GenKind::L),
                "H" => Tok::Kind(GenKind::H),
                "G" => Tok::Kind(GenKind::G),
                "Q" => Tok::Kind(GenKind::Q),
                "x" => Tok::VarX,
                "y" => Tok::VarY,
                "s" => Tok::VarS,
                "t" => Tok::VarT,
                "even" => Tok::Even,
                "odd" => Tok::Odd,
                _ => {
                    return Err(ParseError::Syntax {
                        offset: start,
                        found: format!("`{word}`"),
                        expected: vec![
                            "generator kind".into(),
                            "variable".into(),
                            "`even`".into(),
                            "`odd`".into(),
                        ],
                    })
                }
            };
            out.push((start, tok));
            continue;
        }
        if src[i..].starts_with('λ') {
            out.push((i, Tok::Lambda));
            i += 'λ'.len_utf8();
            continue;
        }
        return Err(ParseError::Syntax {
            offset: i,
            found: format!("byte 0x{c:02x}"),
            expected: vec!["token".into()],
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// AST

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Rational(Rat),
    VarX,
    VarY,
    VarS,
    VarT,
    Lambda,
    Gen(Generator),
    Neg(Box<Ast>),
    Sum(Box<Ast>, Box<Ast>),
    Prod(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, BigInt),
    Bracket(Box<Ast>, Box<Ast>),
    Super {
        even: Option<Box<Ast>>,
        odd: Option<Box<Ast>>,
    },
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    src_len: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.src_len)
    }

    fn found(&self) -> String {
        self.peek()
            .map(|t| t.describe())
            .unwrap_or_else(|| "end of input".into())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            found: self.found(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&[name]))
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if neg { -n } else { n }),
            _ => {
                self.pos -= 1;
                Err(self.err(&["integer"]))
            }
        }
    }

    /// `kind` already consumed; parses `[ a ]` or `[ a/b ]` and checks the
    /// index parity against the generator kind.
    fn parse_generator(&mut self, kind: GenKind) -> Result<Ast, ParseError> {
        self.expect(Tok::LBrack, "`[`")?;
        let idx_offset = self.offset();
        let num = self.parse_int()?;
        let den = if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            match self.bump() {
                Some(Tok::Int(d)) => d,
                _ => {
                    self.pos -= 1;
                    return Err(self.err(&["integer denominator"]));
                }
            }
        } else {
            BigInt::one()
        };
        self.expect(Tok::RBrack, "`]`")?;
        let index_text = if den.is_one() {
            num.to_string()
        } else {
            format!("{num}/{den}")
        };
        let parity_err = || ParseError::IndexParity {
            offset: idx_offset,
            kind,
            index: index_text.clone(),
        };
        let doubled = if den.is_one() {
            &num * BigInt::from(2)
        } else if den == BigInt::from(2) {
            num.clone()
        } else {
            return Err(parity_err());
        };
        let g = Generator::new(kind, HalfInt::from_doubled(doubled)).map_err(|_| parity_err())?;
        Ok(Ast::Gen(g))
    }

    fn parse_primary(&mut self) -> Result<Ast, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let num = self.parse_int()?;
                // `a/b` rational literal (but not `a/b]` inside an index)
                if self.peek() == Some(&Tok::Slash) {
                    if let Some(Tok::Int(_)) = self.peek2() {
                        self.pos += 1;
                        let den = match self.bump() {
                            Some(Tok::Int(d)) => d,
                            _ => unreachable!("peeked"),
                        };
                        if den.is_zero() {
                            return Err(ParseError::Eval("zero denominator".into()));
                        }
                        return Ok(Ast::Rational(Rat::new(num, den)));
                    }
                }
                Ok(Ast::Rational(Rat::from_integer(num)))
            }
            Some(Tok::Kind(k)) => {
                let k = *k;
                // `L` doubles as λ when not followed by `[`
                if self.peek2() == Some(&Tok::LBrack) {
                    self.pos += 1;
                    self.parse_generator(k)
                } else if k == GenKind::L {
                    self.pos += 1;
                    Ok(Ast::Lambda)
                } else {
                    self.pos += 1;
                    Err(self.err(&["`[`"]))
                }
            }
            Some(Tok::Lambda) => {
                self.pos += 1;
                Ok(Ast::Lambda)
            }
            Some(Tok::VarX) => {
                self.pos += 1;
                Ok(Ast::VarX)
            }
            Some(Tok::VarY) => {
                self.pos += 1;
                Ok(Ast::VarY)
            }
            Some(Tok::VarS) => {
                self.pos += 1;
                Ok(Ast::VarS)
            }
            Some(Tok::VarT) => {
                self.pos += 1;
                Ok(Ast::VarT)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.parse_sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::LBrack) => {
                self.pos += 1;
                let a = self.parse_sum()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.parse_sum()?;
                self.expect(Tok::RBrack, "`]`")?;
                Ok(Ast::Bracket(Box::new(a), Box::new(b)))
            }
            _ => Err(self.err(&[
                "number",
                "variable",
                "generator",
                "`(`",
                "`[`",
            ])),
        }
    }

    fn parse_factor(&mut self) -> Result<Ast, ParseError> {
        let base = self.parse_primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = self.parse_int()?;
            Ok(Ast::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn parse_unary(&mut self) -> Result<Ast, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Ok(Ast::Neg(Box::new(self.parse_unary()?)))
        } else {
            self.parse_factor()
        }
    }

    fn parse_term(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.parse_unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.parse_unary()?;
            acc = Ast::Prod(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_sum(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Ast::Sum(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Ast::Sum(Box::new(acc), Box::new(Ast::Neg(Box::new(rhs))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_expr(&mut self) -> Result<Ast, ParseError> {
        match self.peek() {
            Some(Tok::Even) => {
                self.pos += 1;
                self.expect(Tok::Colon, "`:`")?;
                let even = self.parse_sum()?;
                let odd = if self.peek() == Some(&Tok::Pipe) {
                    self.pos += 1;
                    match self.peek() {
                        Some(Tok::Odd) => self.pos += 1,
                        _ => return Err(self.err(&["`odd`"])),
                    }
                    self.expect(Tok::Colon, "`:`")?;
                    Some(Box::new(self.parse_sum()?))
                } else {
                    None
                };
                Ok(Ast::Super {
                    even: Some(Box::new(even)),
                    odd,
                })
            }
            Some(Tok::Odd) => {
                self.pos += 1;
                self.expect(Tok::Colon, "`:`")?;
                let odd = self.parse_sum()?;
                Ok(Ast::Super {
                    even: None,
                    odd: Some(Box::new(odd)),
                })
            }
            _ => self.parse_sum(),
        }
    }
}

pub fn parse(src: &str) -> Result<Ast, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        src_len: src.len(),
        _src: src,
    };
    let ast = p.parse_expr()?;
    if p.peek().is_some() {
        return Err(p.err(&["end of input", "operator"]));
    }
    Ok(ast)
}

// ---------------------------------------------------------------------------
// Evaluation

/// A fully evaluated expression: one of the domain value shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    /// polynomial in `x,y`
    Even(BiPoly),
    /// polynomial in `s,t`
    Odd(BiPoly),
    Algebra(AlgebraElement),
    Super(SuperVector),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(s) => s.is_zero(),
            Value::Even(p) | Value::Odd(p) => p.is_zero(),
            Value::Algebra(a) => a.is_zero(),
            Value::Super(v) => v.is_zero(),
        }
    }

    /// Coerce any non-algebra value to a supervector.
    pub fn into_supervector(self) -> Result<SuperVector, ParseError> {
        match self {
            Value::Scalar(s) => Ok(SuperVector::even(BiPoly::constant(s))),
            Value::Even(p) => Ok(SuperVector::even(p)),
            Value::Odd(p) => Ok(SuperVector::odd(p)),
            Value::Super(v) => Ok(v),
            Value::Algebra(_) => Err(ParseError::Eval(
                "expected a module vector, found an algebra element".into(),
            )),
        }
    }

    pub fn into_algebra(self) -> Result<AlgebraElement, ParseError> {
        match self {
            Value::Algebra(a) => Ok(a),
            _ => Err(ParseError::Eval(
                "expected an algebra element".into(),
            )),
        }
    }

    /// Substitute a rational value for λ in every coefficient.
    pub fn eval_lambda(&self, lam: &Rat) -> Result<Value, ScalarError> {
        let subst = |s: &Scalar| s.eval(lam).map(Scalar::from_rat);
        let poly = |p: &BiPoly| -> Result<BiPoly, ScalarError> {
            let mut out = BiPoly::zero();
            for ((i, j), c) in p.iter() {
                out = &out + &BiPoly::term(*i, *j, subst(c)?);
            }
            Ok(out)
        };
        Ok(match self {
            Value::Scalar(s) => Value::Scalar(subst(s)?),
            Value::Even(p) => Value::Even(poly(p)?),
            Value::Odd(p) => Value::Odd(poly(p)?),
            Value::Super(v) => Value::Super(SuperVector::new(poly(&v.even)?, poly(&v.odd)?)),
            Value::Algebra(a) => {
                let mut out = AlgebraElement::zero();
                for (g, c) in a.iter() {
                    out = &out + &AlgebraElement::term(g.clone(), subst(c)?);
                }
                Value::Algebra(out)
            }
        })
    }
}

fn add_values(a: Value, b: Value) -> Result<Value, ParseError> {
    use Value::*;
    let mix = |e: BiPoly, o: BiPoly| Super(SuperVector::new(e, o));
    Ok(match (a, b) {
        (Scalar(a), Scalar(b)) => Scalar(&a + &b),
        (Scalar(a), Even(b)) | (Even(b), Scalar(a)) => Even(&BiPoly::constant(a) + &b),
        (Scalar(a), Odd(b)) | (Odd(b), Scalar(a)) => Odd(&BiPoly::constant(a) + &b),
        (Even(a), Even(b)) => Even(&a + &b),
        (Odd(a), Odd(b)) => Odd(&a + &b),
        (Even(e), Odd(o)) | (Odd(o), Even(e)) => mix(e, o),
        (Super(v), Even(e)) | (Even(e), Super(v)) => Super(SuperVector::new(&v.even + &e, v.odd)),
        (Super(v), Odd(o)) | (Odd(o), Super(v)) => Super(SuperVector::new(v.even, &v.odd + &o)),
        (Super(v), Scalar(s)) | (Scalar(s), Super(v)) => {
            Super(SuperVector::new(&v.even + &BiPoly::constant(s), v.odd))
        }
        (Super(a), Super(b)) => Super(&a + &b),
        (Algebra(a), Algebra(b)) => Algebra(&a + &b),
        (Algebra(_), _) | (_, Algebra(_)) => {
            return Err(ParseError::Eval(
                "cannot add an algebra element to a non-algebra value".into(),
            ))
        }
    })
}

fn mul_values(a: Value, b: Value) -> Result<Value, ParseError> {
    use Value::*;
    Ok(match (a, b) {
        (Scalar(a), Scalar(b)) => Scalar(&a * &b),
        (Scalar(c), Even(p)) | (Even(p), Scalar(c)) => Even(p.scale(&c)),
        (Scalar(c), Odd(p)) | (Odd(p), Scalar(c)) => Odd(p.scale(&c)),
        (Scalar(c), Super(v)) | (Super(v), Scalar(c)) => Super(v.scale(&c)),
        (Scalar(c), Algebra(a)) | (Algebra(a), Scalar(c)) => Algebra(a.scale(&c)),
        (Even(a), Even(b)) => Even(&a * &b),
        (Odd(a), Odd(b)) => Odd(&a * &b),
        (Even(_), Odd(_)) | (Odd(_), Even(_)) => {
            return Err(ParseError::Eval(
                "cannot multiply even-sector and odd-sector polynomials".into(),
            ))
        }
        (Algebra(_), Algebra(_)) => {
            return Err(ParseError::Eval(
                "algebra elements multiply via the bracket `[A, B]`".into(),
            ))
        }
        (Super(_), _) | (_, Super(_)) => {
            return Err(ParseError::Eval(
                "supervectors only scale by scalars".into(),
            ))
        }
        (Algebra(_), _) | (_, Algebra(_)) => {
            return Err(ParseError::Eval(
                "algebra elements only scale by scalars".into(),
            ))
        }
    })
}

fn neg_value(a: Value) -> Value {
    match a {
        Value::Scalar(s) => Value::Scalar(-&s),
        Value::Even(p) => Value::Even(-&p),
        Value::Odd(p) => Value::Odd(-&p),
        Value::Super(v) => Value::Super(-&v),
        Value::Algebra(a) => Value::Algebra(-&a),
    }
}

fn pow_value(base: Value, exp: &BigInt) -> Result<Value, ParseError> {
    if let Value::Scalar(s) = &base {
        // λ-monomials admit any integer exponent
        if let Some((k, c)) = single_term(s) {
            if c.is_one() {
                return Ok(Value::Scalar(Scalar::lambda_pow(k * exp)));
            }
        }
    }
    if exp.is_negative() {
        return Err(ParseError::Eval(
            "negative exponents are only defined for λ powers".into(),
        ));
    }
    let e = exp
        .to_u32()
        .filter(|e| *e <= MAX_POLY_EXP)
        .ok_or_else(|| ParseError::Eval(format!("exponent exceeds {MAX_POLY_EXP}")))?;
    let mut acc = Value::Scalar(Scalar::one());
    for _ in 0..e {
        acc = mul_values(acc, base.clone())?;
    }
    Ok(acc)
}

fn single_term(s: &Scalar) -> Option<(&BigInt, &Rat)> {
    let mut it = s.iter();
    let first = it.next()?;
    if it.next().is_some() {
        None
    } else {
        Some(first)
    }
}

pub fn eval(ast: &Ast) -> Result<Value, ParseError> {
    Ok(match ast {
        Ast::Rational(r) => Value::Scalar(Scalar::from_rat(r.clone())),
        Ast::Lambda => Value::Scalar(Scalar::lambda_pow(1)),
        Ast::VarX => Value::Even(BiPoly::var_u()),
        Ast::VarY => Value::Even(BiPoly::var_v()),
        Ast::VarS => Value::Odd(BiPoly::var_u()),
        Ast::VarT => Value::Odd(BiPoly::var_v()),
        Ast::Gen(g) => Value::Algebra(AlgebraElement::basis(g.clone())),
        Ast::Neg(a) => neg_value(eval(a)?),
        Ast::Sum(a, b) => add_values(eval(a)?, eval(b)?)?,
        Ast::Prod(a, b) => mul_values(eval(a)?, eval(b)?)?,
        Ast::Pow(a, e) => pow_value(eval(a)?, e)?,
        Ast::Bracket(a, b) => {
            let x = eval(a)?.into_algebra()?;
            let y = eval(b)?.into_algebra()?;
            Value::Algebra(bracket(&x, &y))
        }
        Ast::Super { even, odd } => {
            let e = match even {
                Some(a) => match eval(a)? {
                    Value::Even(p) => p,
                    Value::Scalar(s) => BiPoly::constant(s),
                    _ => {
                        return Err(ParseError::Eval(
                            "even component must be a polynomial in x, y".into(),
                        ))
                    }
                },
                None => BiPoly::zero(),
            };
            let o = match odd {
                Some(a) => match eval(a)? {
                    Value::Odd(p) => p,
                    Value::Scalar(s) => BiPoly::constant(s),
                    _ => {
                        return Err(ParseError::Eval(
                            "odd component must be a polynomial in s, t".into(),
                        ))
                    }
                },
                None => BiPoly::zero(),
            };
            Value::Super(SuperVector::new(e, o))
        }
    })
}

pub fn parse_value(src: &str) -> Result<Value, ParseError> {
    eval(&parse(src)?)
}

// ---------------------------------------------------------------------------
// Rendering

fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn lambda_head(unicode: bool) -> &'static str {
    if unicode {
        "λ"
    } else {
        "L"
    }
}

/// One scalar term `c·λ^k` as a signed string, without surrounding context.
fn scalar_term_str(k: &BigInt, c: &Rat, unicode: bool) -> String {
    if k.is_zero() {
        return rat_str(c);
    }
    let lam = format!("{}^{}", lambda_head(unicode), k);
    if c.is_one() {
        lam
    } else if (-c).is_one() {
        format!("-{lam}")
    } else {
        format!("{}*{}", rat_str(c), lam)
    }
}

/// Join signed term strings with ` + ` / ` - `.
fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(t);
        } else if let Some(stripped) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    out
}

pub fn render_scalar(s: &Scalar, unicode: bool) -> String {
    let mut terms: Vec<(&BigInt, &Rat)> = s.iter().collect();
    terms.reverse(); // descending λ exponent
    join_terms(
        terms
            .into_iter()
            .map(|(k, c)| scalar_term_str(k, c, unicode))
            .collect(),
    )
}

fn mono_str(vars: (char, char), i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    for (v, e) in [(vars.0, i), (vars.1, j)] {
        if e == 1 {
            parts.push(v.to_string());
        } else if e > 1 {
            parts.push(format!("{v}^{e}"));
        }
    }
    parts.join("*")
}

/// Coefficient-times-monomial with sign folded into the string.
fn coef_mono_str(c: &Scalar, mono: String, unicode: bool) -> String {
    if mono.is_empty() {
        return render_scalar(c, unicode);
    }
    match single_term(c) {
        Some((k, r)) => {
            if k.is_zero() {
                if r.is_one() {
                    mono
                } else if (-r).is_one() {
                    format!("-{mono}")
                } else {
                    format!("{}*{}", rat_str(r), mono)
                }
            } else {
                format!("{}*{}", scalar_term_str(k, r, unicode), mono)
            }
        }
        None => format!("({})*{}", render_scalar(c, unicode), mono),
    }
}

pub fn render_bipoly(p: &BiPoly, vars: (char, char), unicode: bool) -> String {
    let mut terms: Vec<(&(u32, u32), &Scalar)> = p.iter().collect();
    terms.reverse(); // descending (deg_u, deg_v)
    join_terms(
        terms
            .into_iter()
            .map(|((i, j), c)| coef_mono_str(c, mono_str(vars, *i, *j), unicode))
            .collect(),
    )
}

pub fn render_unipoly(p: &UniPoly, var: char, unicode: bool) -> String {
    let mut terms: Vec<(&u32, &Scalar)> = p.iter().collect();
    terms.reverse();
    join_terms(
        terms
            .into_iter()
            .map(|(d, c)| coef_mono_str(c, mono_str((var, '_'), *d, 0), unicode))
            .collect(),
    )
}

pub fn render_super(v: &SuperVector, unicode: bool) -> String {
    let mut parts = Vec::new();
    if !v.even.is_zero() {
        parts.push(format!("even: {}", render_bipoly(&v.even, ('x', 'y'), unicode)));
    }
    if !v.odd.is_zero() {
        parts.push(format!("odd: {}", render_bipoly(&v.odd, ('s', 't'), unicode)));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" | ")
    }
}

pub fn render_algebra(a: &AlgebraElement, unicode: bool) -> String {
    join_terms(
        a.iter()
            .map(|(g, c)| coef_mono_str(c, g.to_string(), unicode))
            .collect(),
    )
}

pub fn render_value(v: &Value, unicode: bool) -> String {
    match v {
        Value::Scalar(s) => render_scalar(s, unicode),
        Value::Even(p) => render_bipoly(p, ('x', 'y'), unicode),
        Value::Odd(p) => {
            if p.is_zero() {
                "0".into()
            } else {
                format!("odd: {}", render_bipoly(p, ('s', 't'), unicode))
            }
        }
        Value::Super(sv) => render_super(sv, unicode),
        Value::Algebra(a) => render_algebra(a, unicode),
    }
}

// ---------------------------------------------------------------------------
// JSON

pub fn scalar_json(s: &Scalar) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = s
        .iter()
        .map(|(k, c)| (k.to_string(), serde_json::Value::String(rat_str(c))))
        .collect();
    serde_json::Value::Object(map)
}

pub fn bipoly_json(p: &BiPoly, unicode: bool) -> serde_json::Value {
    serde_json::Value::Array(
        p.iter()
            .map(|((i, j), c)| {
                serde_json::json!([i, j, render_scalar(c, unicode)])
            })
            .collect(),
    )
}

pub fn super_json(v: &SuperVector, unicode: bool) -> serde_json::Value {
    serde_json::json!({
        "even": bipoly_json(&v.even, unicode),
        "odd": bipoly_json(&v.odd, unicode),
    })
}

pub fn algebra_json(a: &AlgebraElement, unicode: bool) -> serde_json::Value {
    serde_json::Value::Array(
        a.iter()
            .map(|(g, c)| {
                serde_json::json!([
                    format!("{:?}", g.kind()),
                    g.index().to_string(),
                    render_scalar(c, unicode)
                ])
            })
            .collect(),
    )
}

pub fn value_json(v: &Value, unicode: bool) -> serde_json::Value {
    match v {
        Value::Scalar(s) => scalar_json(s),
        Value::Even(p) => serde_json::json!({ "even": bipoly_json(p, unicode) }),
        Value::Odd(p) => serde_json::json!({ "odd": bipoly_json(p, unicode) }),
        Value::Super(sv) => super_json(sv, unicode),
        Value::Algebra(a) => algebra_json(a, unicode),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    #[test]
    fn parse_generator_literals() {
        assert_eq!(
            parse_value("G[3/2]").unwrap(),
            Value::Algebra(AlgebraElement::basis(Generator::odd(GenKind::G, 3)))
        );
        assert_eq!(
            parse_value("-L[5]").unwrap(),
            Value::Algebra(AlgebraElement::basis(Generator::even(GenKind::L, 5)).scale(&Scalar::from_int(-1)))
        );
        assert!(matches!(
            parse_value("G[1]"),
            Err(ParseError::IndexParity { .. })
        ));
        assert!(matches!(
            parse_value("L[1/2]"),
            Err(ParseError::IndexParity { .. })
        ));
        assert!(matches!(
            parse_value("G[1/3]"),
            Err(ParseError::IndexParity { .. })
        ));
    }

    #[test]
    fn parse_bracket_node() {
        let v = parse_value("[L[2], L[3]]").unwrap();
        let expect = bracket(
            &AlgebraElement::basis(Generator::even(GenKind::L, 2)),
            &AlgebraElement::basis(Generator::even(GenKind::L, 3)),
        );
        assert_eq!(v, Value::Algebra(expect));
    }

    #[test]
    fn parse_polynomials_and_scalars() {
        assert_eq!(
            parse_value("x^2*y - 1/2").unwrap(),
            Value::Even(
                &(&(&BiPoly::var_u() * &BiPoly::var_u()) * &BiPoly::var_v())
                    - &BiPoly::constant(Scalar::from_rat(rat(1, 2)))
            )
        );
        assert_eq!(
            parse_value("L^2 + 2").unwrap(),
            Value::Scalar(&Scalar::lambda_pow(2) + &Scalar::from_int(2))
        );
        assert_eq!(
            parse_value("λ^-1").unwrap(),
            Value::Scalar(Scalar::lambda_pow(-1))
        );
        assert_eq!(
            parse_value("even: L^1*x + L^1*y").unwrap(),
            Value::Super(SuperVector::even(
                (&BiPoly::var_u() + &BiPoly::var_v()).scale(&Scalar::lambda_pow(1))
            ))
        );
        assert_eq!(
            parse_value("odd: s*t").unwrap(),
            Value::Super(SuperVector::odd(&BiPoly::var_u() * &BiPoly::var_v()))
        );
    }

    #[test]
    fn syntax_errors_have_offsets() {
        match parse_value("x + + y") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_value("x + ") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_value("x * s").is_err());
    }

    #[test]
    fn render_examples() {
        let neg_l5 = parse_value("-L[5]").unwrap();
        assert_eq!(render_value(&neg_l5, false), "-L[5]");

        let v = parse_value("even: L^1*x + L^1*y").unwrap();
        assert_eq!(render_value(&v, false), "even: L^1*x + L^1*y");
        assert_eq!(render_value(&v, true), "even: λ^1*x + λ^1*y");

        assert_eq!(render_value(&Value::Super(SuperVector::zero()), false), "0");

        let s = parse_value("2*L^2 - 1/2").unwrap();
        assert_eq!(render_value(&s, false), "2*L^2 - 1/2");
    }

    #[test]
    fn round_trip_samples() {
        for src in [
            "2*L[2]",
            "G[3/2] + 2*Q[-1/2] - H[0]",
            "even: x^2*y - 3*x + 1/2 | odd: t^2 - s",
            "odd: L^-2*s*t",
            "3/4",
            "L^3 - L^-3",
            "x^2 + (L^1 + 1)*y",
        ] {
            let v = parse_value(src).unwrap();
            let rendered = render_value(&v, false);
            let re = parse_value(&rendered).unwrap();
            assert_eq!(v, re, "round trip through {rendered:?}");
            // canonical: rendering is a fixed point
            assert_eq!(render_value(&re, false), rendered);
        }
    }

    #[test]
    fn lambda_substitution() {
        let v = parse_value("L^2 + L^-1").unwrap();
        let at2 = v.eval_lambda(&rint(2)).unwrap();
        assert_eq!(at2, Value::Scalar(Scalar::from_rat(rat(9, 2))));
        assert!(v.eval_lambda(&rint(0)).is_err());
    }

    #[test]
    fn json_shapes() {
        let v = parse_value("even: 2*x | odd: t").unwrap();
        let j = value_json(&v, false);
        assert_eq!(
            j,
            serde_json::json!({
                "even": [[1, 0, "2"]],
                "odd": [[0, 1, "1"]],
            })
        );
        let s = parse_value("L^2 + 1/2").unwrap();
        assert_eq!(
            value_json(&s, false),
            serde_json::json!({"0": "1/2", "2": "1"})
        );
    }
}
