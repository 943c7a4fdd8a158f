//! A small expression language for building sequences at the command line
//! and in tests.
//!
//! Grammar (whitespace free between tokens, `INT` is a digit run):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | 'ox' | '⊗' | 'os' | '⊛') unary)*
//! unary := '-' unary | atom
//! atom  := RAT | 'P' '(' INT ')' | 'AP' '(' INT ')' | 'T' '(' INT ')'
//!        | 'G' '(' SIGNED_RAT ')' | 'e' '(' INT ')' | 'H' | '(' expr ')'
//! RAT   := INT ('/' INT)?
//! ```
//!
//! `*`/`ox`/`⊗` all mean the Cauchy product, `os`/`⊛` the
//! index-multiplicative product.  The named atoms are the standard zoo:
//! `P(n)` the power sequence `((k+1)^n)`, `AP(n)` its alternating twin,
//! `T(n)` the alternating binomial sequence, `G(q)` the geometric sequence
//! `(q^k)`, `e(k)` the basis sequence.  `H` is the harmonic sequence
//! `(1/(k+1))` — it has no rational generating function, so it is *only*
//! accepted in the fixed demonstration form `H os (e(0) - e(1))` handled
//! by the floating-point oracle; anywhere else elaboration refuses it.
//!
//! Every node carries its source span in character offsets.  Equality of
//! expressions ignores spans and parenthesization, which gives the
//! round-trip law `parse(pretty(e)) == e`.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::{format_rat, Int, Rat};
use crate::seq::{cauchy_product, dirichlet_product, FiniteSeq, GfSeq};

pub type Span = std::ops::Range<usize>;

/// Parsed sequence expression.  `Paren` nodes are kept so that spans and
/// pretty-printing stay faithful to the input, but comparisons see through
/// them.
#[derive(Debug, Clone, Eq)]
pub enum SeqExpr {
    /// A rational literal, standing for the finite sequence `value * e_0`.
    Literal { value: Rat, span: Span },
    /// `P(n)`: the power sequence `((k+1)^n)`.
    Powers { order: usize, span: Span },
    /// `AP(n)`: the alternating power sequence `((-1)^k (k+1)^n)`.
    AlternatingPowers { order: usize, span: Span },
    /// `T(n)`: the alternating binomial sequence `((-1)^k C(n+k, n))`.
    AlternatingBinomial { order: usize, span: Span },
    /// `G(q)`: the geometric sequence `(q^k)`.
    Geometric { ratio: Rat, span: Span },
    /// `e(k)`: the basis sequence.
    Basis { index: usize, span: Span },
    /// `H`: the harmonic sequence, demo-only.
    Harmonic { span: Span },
    Neg { operand: Box<SeqExpr>, span: Span },
    Add { lhs: Box<SeqExpr>, rhs: Box<SeqExpr>, span: Span },
    Sub { lhs: Box<SeqExpr>, rhs: Box<SeqExpr>, span: Span },
    /// Cauchy product (`*`, `ox`, `⊗`).
    Cauchy { lhs: Box<SeqExpr>, rhs: Box<SeqExpr>, span: Span },
    /// Index-multiplicative product (`os`, `⊛`).
    Dirichlet { lhs: Box<SeqExpr>, rhs: Box<SeqExpr>, span: Span },
    Paren { inner: Box<SeqExpr>, span: Span },
}

impl SeqExpr {
    pub fn span(&self) -> Span {
        match self {
            SeqExpr::Literal { span, .. }
            | SeqExpr::Powers { span, .. }
            | SeqExpr::AlternatingPowers { span, .. }
            | SeqExpr::AlternatingBinomial { span, .. }
            | SeqExpr::Geometric { span, .. }
            | SeqExpr::Basis { span, .. }
            | SeqExpr::Harmonic { span }
            | SeqExpr::Neg { span, .. }
            | SeqExpr::Add { span, .. }
            | SeqExpr::Sub { span, .. }
            | SeqExpr::Cauchy { span, .. }
            | SeqExpr::Dirichlet { span, .. }
            | SeqExpr::Paren { span, .. } => span.clone(),
        }
    }

    /// The expression with parenthesization stripped.
    fn strip(&self) -> &SeqExpr {
        match self {
            SeqExpr::Paren { inner, .. } => inner.strip(),
            e => e,
        }
    }
}

/// Structural equality, ignoring spans and parentheses.
impl PartialEq for SeqExpr {
    fn eq(&self, other: &Self) -> bool {
        use SeqExpr::*;
        match (self.strip(), other.strip()) {
            (Literal { value: a, .. }, Literal { value: b, .. }) => a == b,
            (Powers { order: a, .. }, Powers { order: b, .. }) => a == b,
            (AlternatingPowers { order: a, .. }, AlternatingPowers { order: b, .. }) => a == b,
            (AlternatingBinomial { order: a, .. }, AlternatingBinomial { order: b, .. }) => a == b,
            (Geometric { ratio: a, .. }, Geometric { ratio: b, .. }) => a == b,
            (Basis { index: a, .. }, Basis { index: b, .. }) => a == b,
            (Harmonic { .. }, Harmonic { .. }) => true,
            (Neg { operand: a, .. }, Neg { operand: b, .. }) => a == b,
            (Add { lhs: a, rhs: b, .. }, Add { lhs: c, rhs: d, .. })
            | (Sub { lhs: a, rhs: b, .. }, Sub { lhs: c, rhs: d, .. })
            | (Cauchy { lhs: a, rhs: b, .. }, Cauchy { lhs: c, rhs: d, .. })
            | (Dirichlet { lhs: a, rhs: b, .. }, Dirichlet { lhs: c, rhs: d, .. }) => {
                a == c && b == d
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: {message}")]
pub struct ParseError {
    /// Character offset of the offending input (input length for
    /// unexpected end).
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Number(Int),
    Plus,
    Minus,
    Star,
    Slash,
    CauchyWord,
    DirichletWord,
    LParen,
    RParen,
    Name(String),
}

fn tokenize(input: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, start..i + 1));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, start..i + 1));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, start..i + 1));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, start..i + 1));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, start..i + 1));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, start..i + 1));
                i += 1;
            }
            '\u{2297}' => {
                // ⊗
                toks.push((Tok::CauchyWord, start..i + 1));
                i += 1;
            }
            '\u{229b}' => {
                // ⊛
                toks.push((Tok::DirichletWord, start..i + 1));
                i += 1;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    i += 1;
                }
                let n: Int = digits.parse().expect("digit run");
                toks.push((Tok::Number(n), start..i));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    name.push(chars[i]);
                    i += 1;
                }
                let tok = match name.as_str() {
                    "ox" => Tok::CauchyWord,
                    "os" => Tok::DirichletWord,
                    "P" | "AP" | "T" | "G" | "e" | "H" => Tok::Name(name),
                    _ => {
                        return Err(ParseError {
                            position: start,
                            message: format!("unknown name '{name}'"),
                        })
                    }
                };
                toks.push((tok, start..i));
            }
            other => {
                return Err(ParseError {
                    position: start,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map_or(self.input_len, |(_, s)| s.start)
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.here(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Span, ParseError> {
        if self.peek() == Some(&tok) {
            Ok(self.bump().1)
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<SeqExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let add = match self.peek() {
                Some(Tok::Plus) => true,
                Some(Tok::Minus) => false,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span().start..rhs.span().end;
            let (lhs_b, rhs_b) = (Box::new(lhs), Box::new(rhs));
            lhs = if add {
                SeqExpr::Add { lhs: lhs_b, rhs: rhs_b, span }
            } else {
                SeqExpr::Sub { lhs: lhs_b, rhs: rhs_b, span }
            };
        }
    }

    fn term(&mut self) -> Result<SeqExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let cauchy = match self.peek() {
                Some(Tok::Star | Tok::CauchyWord) => true,
                Some(Tok::DirichletWord) => false,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            let span = lhs.span().start..rhs.span().end;
            let (lhs_b, rhs_b) = (Box::new(lhs), Box::new(rhs));
            lhs = if cauchy {
                SeqExpr::Cauchy { lhs: lhs_b, rhs: rhs_b, span }
            } else {
                SeqExpr::Dirichlet { lhs: lhs_b, rhs: rhs_b, span }
            };
        }
    }

    fn unary(&mut self) -> Result<SeqExpr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            let (_, minus_span) = self.bump();
            let operand = self.unary()?;
            let span = minus_span.start..operand.span().end;
            return Ok(SeqExpr::Neg {
                operand: Box::new(operand),
                span,
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<SeqExpr, ParseError> {
        match self.peek() {
            Some(Tok::Number(_)) => {
                let (value, span) = self.rational_literal()?;
                Ok(SeqExpr::Literal { value, span })
            }
            Some(Tok::LParen) => {
                let (_, open) = self.bump();
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "')'")?;
                Ok(SeqExpr::Paren {
                    inner: Box::new(inner),
                    span: open.start..close.end,
                })
            }
            Some(Tok::Name(_)) => {
                let (tok, span) = self.bump();
                let Tok::Name(name) = tok else { unreachable!() };
                match name.as_str() {
                    "H" => Ok(SeqExpr::Harmonic { span }),
                    "G" => {
                        self.expect(Tok::LParen, "'('")?;
                        let negative = if self.peek() == Some(&Tok::Minus) {
                            self.bump();
                            true
                        } else {
                            false
                        };
                        let (mut ratio, _) = self.rational_literal()?;
                        if negative {
                            ratio = -ratio;
                        }
                        let close = self.expect(Tok::RParen, "')'")?;
                        Ok(SeqExpr::Geometric {
                            ratio,
                            span: span.start..close.end,
                        })
                    }
                    _ => {
                        self.expect(Tok::LParen, "'('")?;
                        let index = self.index()?;
                        let close = self.expect(Tok::RParen, "')'")?;
                        let span = span.start..close.end;
                        Ok(match name.as_str() {
                            "P" => SeqExpr::Powers { order: index, span },
                            "AP" => SeqExpr::AlternatingPowers { order: index, span },
                            "T" => SeqExpr::AlternatingBinomial { order: index, span },
                            "e" => SeqExpr::Basis { index, span },
                            _ => unreachable!(),
                        })
                    }
                }
            }
            _ => self.fail("expected a sequence expression"),
        }
    }

    /// A nonnegative rational literal: `INT` or `INT/INT`.
    fn rational_literal(&mut self) -> Result<(Rat, Span), ParseError> {
        let (tok, span) = match self.peek() {
            Some(Tok::Number(_)) => self.bump(),
            _ => return self.fail("expected a number"),
        };
        let Tok::Number(numer) = tok else { unreachable!() };
        if self.peek() != Some(&Tok::Slash) {
            return Ok((Rat::from_integer(numer), span));
        }
        self.bump();
        let denom_pos = self.here();
        let (tok, dspan) = match self.peek() {
            Some(Tok::Number(_)) => self.bump(),
            _ => return self.fail("expected a denominator"),
        };
        let Tok::Number(denom) = tok else { unreachable!() };
        if denom.is_zero() {
            return Err(ParseError {
                position: denom_pos,
                message: "zero denominator in literal".into(),
            });
        }
        Ok((Rat::new(numer, denom), span.start..dspan.end))
    }

    /// A nonnegative machine integer (sequence-family index).
    fn index(&mut self) -> Result<usize, ParseError> {
        let pos = self.here();
        let (tok, _) = match self.peek() {
            Some(Tok::Number(_)) => self.bump(),
            _ => return self.fail("expected a number"),
        };
        let Tok::Number(n) = tok else { unreachable!() };
        n.to_usize().ok_or(ParseError {
            position: pos,
            message: "index too large".into(),
        })
    }
}

/// Parse an expression, requiring the whole input to be consumed.
pub fn parse(input: &str) -> Result<SeqExpr, ParseError> {
    let toks = tokenize(input)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        input_len: input.chars().count(),
    };
    let expr = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.fail("expected an operator or end of input");
    }
    Ok(expr)
}

/// What an expression denotes.
#[derive(Debug, Clone, PartialEq)]
pub enum Elaborated {
    /// An honest member of the class: a sequence with rational generating
    /// function.
    Sequence(GfSeq),
    /// The one sanctioned appearance of `H`: the demonstration transform
    /// `H os (e(0) - e(1))`, which only the numeric oracle can evaluate.
    HarmonicDemo,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElaborateError {
    #[error("'H' has no rational generating function; it is only accepted as 'H os (e(0) - e(1))'")]
    HarmonicOutsideDemo { span: Span },
    #[error("'os' needs one finitely supported operand")]
    DirichletNeedsFiniteOperand { span: Span },
}

/// Turn an expression into the sequence it denotes (or recognize the
/// harmonic demonstration).  The map is a homomorphism: `+`/`-`/`*`/`os`
/// on expressions become the corresponding exact sequence operations.
pub fn elaborate(expr: &SeqExpr) -> Result<Elaborated, ElaborateError> {
    if let SeqExpr::Dirichlet { lhs, rhs, .. } = expr.strip() {
        if matches!(lhs.strip(), SeqExpr::Harmonic { .. }) {
            let p = elaborate_seq(rhs)?;
            if p.as_finite() == Some(FiniteSeq::from_ints(&[1, -1])) {
                return Ok(Elaborated::HarmonicDemo);
            }
            // any other right factor is outside what we can do exactly
            return Err(ElaborateError::HarmonicOutsideDemo {
                span: lhs.span(),
            });
        }
    }
    Ok(Elaborated::Sequence(elaborate_seq(expr)?))
}

fn elaborate_seq(expr: &SeqExpr) -> Result<GfSeq, ElaborateError> {
    match expr {
        SeqExpr::Literal { value, .. } => {
            Ok(GfSeq::from(&FiniteSeq::from_coeffs(vec![value.clone()])))
        }
        SeqExpr::Powers { order, .. } => Ok(crate::seq::powers(*order)),
        SeqExpr::AlternatingPowers { order, .. } => Ok(crate::seq::alternating_powers(*order)),
        SeqExpr::AlternatingBinomial { order, .. } => Ok(crate::seq::alternating_binomial(*order)),
        SeqExpr::Geometric { ratio, .. } => Ok(crate::seq::geometric(ratio)),
        SeqExpr::Basis { index, .. } => Ok(GfSeq::from(&FiniteSeq::basis(*index))),
        SeqExpr::Harmonic { span } => Err(ElaborateError::HarmonicOutsideDemo { span: span.clone() }),
        SeqExpr::Neg { operand, .. } => Ok(-&elaborate_seq(operand)?),
        SeqExpr::Add { lhs, rhs, .. } => Ok(&elaborate_seq(lhs)? + &elaborate_seq(rhs)?),
        SeqExpr::Sub { lhs, rhs, .. } => Ok(&elaborate_seq(lhs)? - &elaborate_seq(rhs)?),
        SeqExpr::Cauchy { lhs, rhs, .. } => {
            Ok(cauchy_product(&elaborate_seq(lhs)?, &elaborate_seq(rhs)?))
        }
        SeqExpr::Dirichlet { lhs, rhs, span } => {
            let l = elaborate_seq(lhs)?;
            let r = elaborate_seq(rhs)?;
            // the product is commutative, so either side may be the finite one
            if let Some(p) = r.as_finite() {
                Ok(dirichlet_product(&l, &p))
            } else if let Some(p) = l.as_finite() {
                Ok(dirichlet_product(&r, &p))
            } else {
                Err(ElaborateError::DirichletNeedsFiniteOperand { span: span.clone() })
            }
        }
        SeqExpr::Paren { inner, .. } => elaborate_seq(inner),
    }
}

/// Canonical rendering; `parse(pretty(e)) == e` for every expression.
pub fn pretty(expr: &SeqExpr) -> String {
    let mut out = String::new();
    render(expr, &mut out);
    out
}

fn render(expr: &SeqExpr, out: &mut String) {
    match expr {
        SeqExpr::Literal { value, .. } => out.push_str(&format_rat(value)),
        SeqExpr::Powers { order, .. } => {
            out.push_str(&format!("P({order})"));
        }
        SeqExpr::AlternatingPowers { order, .. } => {
            out.push_str(&format!("AP({order})"));
        }
        SeqExpr::AlternatingBinomial { order, .. } => {
            out.push_str(&format!("T({order})"));
        }
        SeqExpr::Geometric { ratio, .. } => {
            out.push_str(&format!("G({})", format_rat(ratio)));
        }
        SeqExpr::Basis { index, .. } => {
            out.push_str(&format!("e({index})"));
        }
        SeqExpr::Harmonic { .. } => out.push('H'),
        SeqExpr::Neg { operand, .. } => {
            out.push('-');
            render_at_unary(operand, out);
        }
        SeqExpr::Add { lhs, rhs, .. } => {
            render(lhs, out);
            out.push_str(" + ");
            render_at_term(rhs, out, false);
        }
        SeqExpr::Sub { lhs, rhs, .. } => {
            render(lhs, out);
            out.push_str(" - ");
            render_at_term(rhs, out, false);
        }
        SeqExpr::Cauchy { lhs, rhs, .. } => {
            render_at_term(lhs, out, false);
            out.push_str(" * ");
            render_at_unary(rhs, out);
        }
        SeqExpr::Dirichlet { lhs, rhs, .. } => {
            render_at_term(lhs, out, false);
            out.push_str(" os ");
            render_at_unary(rhs, out);
        }
        SeqExpr::Paren { inner, .. } => {
            out.push('(');
            render(inner, out);
            out.push(')');
        }
    }
}

/// Render in a position that grammatically holds a `term`: additive
/// children get parentheses.
fn render_at_term(expr: &SeqExpr, out: &mut String, _strict: bool) {
    match expr.strip() {
        // render the stripped node so an explicit Paren doesn't double up
        SeqExpr::Add { .. } | SeqExpr::Sub { .. } => {
            out.push('(');
            render(expr.strip(), out);
            out.push(')');
        }
        _ => render(expr, out),
    }
}

/// Render in a position that grammatically holds a `unary`: additive and
/// multiplicative children get parentheses (a leading `-` is fine).
fn render_at_unary(expr: &SeqExpr, out: &mut String) {
    match expr.strip() {
        SeqExpr::Add { .. }
        | SeqExpr::Sub { .. }
        | SeqExpr::Cauchy { .. }
        | SeqExpr::Dirichlet { .. } => {
            out.push('(');
            render(expr.strip(), out);
            out.push(')');
        }
        _ => render(expr, out),
    }
}

impl fmt::Display for SeqExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", pretty(self))
    }
}
