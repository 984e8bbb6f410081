//! A tiny expression language over the bounded classes.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr  := mul ('+' mul)*
//! mul   := unary ('*' unary)*
//! unary := '-' unary | atom
//! atom  := number | 'M' | '(' expr ')'
//! ```
//!
//! Numbers are nonnegative rationals: integers (`3`), fractions (`7/10`),
//! or finite decimals (`2.5`), all read exactly. `M` denotes the carrier's
//! top element. Both binary operators associate to the left, which is not
//! a cosmetic detail here: in the signed class the result depends on it.
//!
//! Literals must lie in the carrier — an expression denotes a computation
//! inside a class, not a projection into it (see
//! [`crate::clamp::am_coproject`] and friends for that). Negation is only
//! meaningful in the signed class; elsewhere it is a class error.

use std::fmt;
use std::str::FromStr;

use crate::clamp::{am_add, am_mul, amm_add, amm_mul, AmValue, AmmValue};
use crate::config::{ClassContext, RunConfig};
use crate::error::{Error, Result};
use crate::projective::{bm_add, bm_mul, BmValue};
use crate::scalar::{BmMagnitude, EvalMode, ExactScalar, Magnitude};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(ExactScalar),
    /// The top element `M` of whatever class the expression is evaluated in.
    MConst,
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Literal(_) | Expr::MConst => 4,
        }
    }

    fn fmt_child(child: &Expr, parent_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if child.precedence() < parent_prec {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(v) => write!(f, "{v}"),
            Expr::MConst => f.write_str("M"),
            Expr::Add(a, b) => {
                Expr::fmt_child(a, 1, f)?;
                f.write_str(" + ")?;
                // The right child needs parens at equal precedence to keep
                // left associativity through a print/parse round trip.
                Expr::fmt_child(b, 2, f)
            }
            Expr::Mul(a, b) => {
                Expr::fmt_child(a, 2, f)?;
                f.write_str(" * ")?;
                Expr::fmt_child(b, 3, f)
            }
            Expr::Neg(inner) => {
                f.write_str("-")?;
                Expr::fmt_child(inner, 3, f)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(ExactScalar),
    M,
    Plus,
    Star,
    Minus,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(v) => format!("number {v}"),
            Tok::M => "'M'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Star => "'*'".into(),
            Tok::Minus => "'-'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((Tok::Plus, i));
                i += 1;
            }
            '*' => {
                tokens.push((Tok::Star, i));
                i += 1;
            }
            '-' => {
                tokens.push((Tok::Minus, i));
                i += 1;
            }
            '(' => {
                tokens.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                tokens.push((Tok::RParen, i));
                i += 1;
            }
            'M' => {
                tokens.push((Tok::M, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'/') {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text = &src[start..i];
                let value = crate::scalar::parse_exact(text, start)?;
                tokens.push((Tok::Number(value), start));
            }
            other => {
                return Err(Error::Parse {
                    offset: i,
                    expected: "a number, 'M', '+', '*', '-', '(' or ')'".into(),
                    found: other.to_string(),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.tokens.get(self.pos)
    }

    fn unexpected(&self, expected: &str) -> Error {
        match self.peek() {
            Some((tok, offset)) => Error::Parse {
                offset: *offset,
                expected: expected.into(),
                found: tok.describe(),
            },
            None => Error::Parse {
                offset: self.end,
                expected: expected.into(),
                found: "end of input".into(),
            },
        }
    }

    fn eat(&mut self, tok: &Tok, expected: &str) -> Result<()> {
        match self.peek() {
            Some((t, _)) if t == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut node = self.mul()?;
        while matches!(self.peek(), Some((Tok::Plus, _))) {
            self.pos += 1;
            let rhs = self.mul()?;
            node = Expr::Add(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn mul(&mut self) -> Result<Expr> {
        let mut node = self.unary()?;
        while matches!(self.peek(), Some((Tok::Star, _))) {
            self.pos += 1;
            let rhs = self.unary()?;
            node = Expr::Mul(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some((Tok::Minus, _))) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some((Tok::Number(v), _)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(Expr::Literal(v))
            }
            Some((Tok::M, _)) => {
                self.pos += 1;
                Ok(Expr::MConst)
            }
            Some((Tok::LParen, _)) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, 'M', '-' or '('")),
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut parser = Parser { tokens: &tokens, pos: 0, end: src.len() };
        let expr = parser.expr()?;
        if parser.peek().is_some() {
            return Err(parser.unexpected("end of input"));
        }
        Ok(expr)
    }
}

/// Evaluation result, tagged by class.
#[derive(Clone, Debug, PartialEq)]
pub enum EvalOutcome {
    Am(AmValue),
    Amm(AmmValue),
    Bm(BmValue),
}

impl EvalOutcome {
    /// The carrier value in display form.
    pub fn value_string(&self) -> String {
        match self {
            EvalOutcome::Am(v) => v.to_string(),
            EvalOutcome::Amm(v) => v.to_string(),
            EvalOutcome::Bm(v) => v.to_string(),
        }
    }
}

impl fmt::Display for EvalOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value_string())
    }
}

/// Evaluates `expr` in the class selected by `config`.
pub fn eval_expression(expr: &Expr, config: &RunConfig) -> Result<EvalOutcome> {
    match &config.context {
        ClassContext::Am(m) => Ok(EvalOutcome::Am(eval_am(expr, m)?)),
        ClassContext::Amm(m) => Ok(EvalOutcome::Amm(eval_amm(expr, m)?)),
        ClassContext::Bm(m) => Ok(EvalOutcome::Bm(eval_bm(expr, *m, config.mode)?)),
    }
}

fn eval_am(expr: &Expr, m: &Magnitude) -> Result<AmValue> {
    match expr {
        Expr::Literal(v) => AmValue::new(v.clone(), m.clone()),
        Expr::MConst => Ok(AmValue::top(m.clone())),
        Expr::Add(a, b) => am_add(&eval_am(a, m)?, &eval_am(b, m)?),
        Expr::Mul(a, b) => am_mul(&eval_am(a, m)?, &eval_am(b, m)?),
        Expr::Neg(_) => Err(Error::ClassError {
            class: "am".into(),
            operation: "negation".into(),
        }),
    }
}

fn eval_amm(expr: &Expr, m: &Magnitude) -> Result<AmmValue> {
    match expr {
        Expr::Literal(v) => AmmValue::new(v.clone(), m.clone()),
        Expr::MConst => Ok(AmmValue::top(m.clone())),
        Expr::Add(a, b) => amm_add(&eval_amm(a, m)?, &eval_amm(b, m)?),
        Expr::Mul(a, b) => amm_mul(&eval_amm(a, m)?, &eval_amm(b, m)?),
        Expr::Neg(inner) => Ok(eval_amm(inner, m)?.neg()),
    }
}

fn eval_bm(expr: &Expr, m: BmMagnitude, mode: EvalMode) -> Result<BmValue> {
    match expr {
        Expr::Literal(v) => BmValue::new(v.to_f64(), m),
        Expr::MConst => Ok(BmValue::top(m)),
        Expr::Add(a, b) => bm_add(&eval_bm(a, m, mode)?, &eval_bm(b, m, mode)?, mode),
        Expr::Mul(a, b) => bm_mul(&eval_bm(a, m, mode)?, &eval_bm(b, m, mode)?, mode),
        Expr::Neg(_) => Err(Error::ClassError {
            class: "bm".into(),
            operation: "negation".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ArithClass;

    fn parse(src: &str) -> Expr {
        src.parse().unwrap()
    }

    fn config(class: ArithClass, magnitude: &str, mode: EvalMode) -> RunConfig {
        let mut cfg = RunConfig::new(ClassContext::parse(class, magnitude).unwrap());
        cfg.mode = mode;
        cfg
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("1 + 2 * 3"),
            Expr::Add(
                Box::new(Expr::Literal(ExactScalar::one())),
                Box::new(Expr::Mul(
                    Box::new(Expr::Literal(ExactScalar::from(2))),
                    Box::new(Expr::Literal(ExactScalar::from(3))),
                )),
            )
        );
        // Left associativity: a + b + c groups as (a + b) + c.
        assert_eq!(parse("1 + 2 + 3"), parse("(1 + 2) + 3"));
        assert_ne!(parse("1 + 2 + 3"), parse("1 + (2 + 3)"));
        assert_eq!(parse("2 * 3 * 4"), parse("(2 * 3) * 4"));
    }

    #[test]
    fn unary_minus_binds_tighter_than_star() {
        assert_eq!(
            parse("-2 * 3"),
            Expr::Mul(
                Box::new(Expr::Neg(Box::new(Expr::Literal(ExactScalar::from(2))))),
                Box::new(Expr::Literal(ExactScalar::from(3))),
            )
        );
        assert_eq!(parse("--2"), Expr::Neg(Box::new(Expr::Neg(Box::new(
            Expr::Literal(ExactScalar::from(2)),
        )))));
    }

    #[test]
    fn number_forms() {
        assert_eq!(parse("7/10"), Expr::Literal(ExactScalar::ratio(7, 10)));
        assert_eq!(parse("2.5"), Expr::Literal(ExactScalar::ratio(5, 2)));
        assert_eq!(parse("M"), Expr::MConst);
    }

    #[test]
    fn parse_errors_carry_byte_offsets() {
        let cases: &[(&str, usize)] = &[
            ("2 @ 3", 2),     // unknown character
            ("2 +", 3),       // missing right operand
            ("(2 + 3", 6),    // missing ')'
            (")", 0),         // leading ')'
            ("2 3", 2),       // trailing token
            ("* 2", 0),       // leading operator
        ];
        for (src, offset) in cases {
            match src.parse::<Expr>() {
                Err(Error::Parse { offset: got, .. }) => {
                    assert_eq!(got, *offset, "offset for {src:?}");
                }
                other => panic!("expected parse error for {src:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn print_parse_round_trip() {
        for src in [
            "1 + 2 * 3",
            "(1 + 2) * 3",
            "1 + (2 + 3)",
            "-2 * 3",
            "-(2 + 3)",
            "M * (M + 1/2)",
            "7/10 + 2.5 * M",
            "--2",
        ] {
            let expr = parse(src);
            let printed = expr.to_string();
            assert_eq!(printed.parse::<Expr>().unwrap(), expr, "through {printed:?}");
        }
    }

    #[test]
    fn clamped_eval_saturates() {
        let cfg = config(ArithClass::Am, "1000000", EvalMode::Total);
        let out = eval_expression(&parse("999999 + 7"), &cfg).unwrap();
        assert_eq!(out.value_string(), "1000000");
        let out = eval_expression(&parse("2 * 3"), &cfg).unwrap();
        assert_eq!(out.value_string(), "6");
    }

    #[test]
    fn signed_eval_honors_written_order() {
        let cfg = config(ArithClass::Amm, "5", EvalMode::Total);
        // (4 + 2) clamps to 5 before -3 is applied...
        let left = eval_expression(&parse("4 + 2 + -3"), &cfg).unwrap();
        assert_eq!(left.value_string(), "2");
        // ...while regrouping avoids the clamp.
        let right = eval_expression(&parse("4 + (2 + -3)"), &cfg).unwrap();
        assert_eq!(right.value_string(), "3");
        let neg_top = eval_expression(&parse("-M"), &cfg).unwrap();
        assert_eq!(neg_top.value_string(), "-5");
    }

    #[test]
    fn literals_must_lie_in_the_carrier() {
        let cfg = config(ArithClass::Am, "5", EvalMode::Total);
        assert!(matches!(
            eval_expression(&parse("7"), &cfg),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eval_expression(&parse("-1"), &cfg),
            Err(Error::ClassError { .. })
        ));
    }

    #[test]
    fn negation_is_signed_only() {
        for class in [ArithClass::Am, ArithClass::Bm] {
            let cfg = config(class, "4", EvalMode::Total);
            let err = eval_expression(&parse("-1"), &cfg).unwrap_err();
            assert!(matches!(err, Error::ClassError { .. }), "{class}");
        }
    }

    #[test]
    fn arctan_eval_and_modes() {
        let cfg = config(ArithClass::Bm, "4", EvalMode::Total);
        // M is absorbing for the projected sum.
        let out = eval_expression(&parse("M + 1"), &cfg).unwrap();
        assert_eq!(out.value_string(), "4");
        // M + 0 is inf + (-inf): total mode resolves it to +inf.
        let out = eval_expression(&parse("M + 0"), &cfg).unwrap();
        assert_eq!(out.value_string(), "4");
        let strict = config(ArithClass::Bm, "4", EvalMode::Strict);
        let err = eval_expression(&parse("M + 0"), &strict).unwrap_err();
        assert!(matches!(err, Error::IndeterminateForm(_)));
        // 0 * M is determinate (-inf times +inf), strict or not.
        let out = eval_expression(&parse("0 * M"), &strict).unwrap();
        assert_eq!(out.value_string(), "0");
    }
}
