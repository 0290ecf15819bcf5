//! Element expressions: `2*v0(2) - 4*u2s^2`, `1/27*a1b^3*a3b^3`, `ub^-1`.
//!
//! Precedence is `^` over `*` over binary `+`/`-`, all left-associative.
//! A number literal may carry a denominator (`1/27`). Family symbols take a
//! single integer or parameter argument (`v0(-3)`, `v0(m)`).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::graded_ring::{Element, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpArg {
    Int(i64),
    Param(String),
}

impl ExpArg {
    fn resolve(&self, env: &HashMap<String, i64>) -> Result<i64> {
        match self {
            ExpArg::Int(n) => Ok(*n),
            ExpArg::Param(p) => env.get(p).copied().ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: format!("unbound parameter `{p}`"),
            }),
        }
    }
}

impl fmt::Display for ExpArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpArg::Int(n) => write!(f, "{n}"),
            ExpArg::Param(p) => write!(f, "{p}"),
        }
    }
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementExpr {
    Num(Coeff),
    Sym(String),
    Family(String, ExpArg),
    Pow(Box<ElementExpr>, ExpArg),
    Neg(Box<ElementExpr>),
    Mul(Box<ElementExpr>, Box<ElementExpr>),
    Add(Box<ElementExpr>, Box<ElementExpr>),
    Sub(Box<ElementExpr>, Box<ElementExpr>),
}

fn starts_negative(e: &ElementExpr) -> bool {
    match e {
        ElementExpr::Neg(_) => true,
        ElementExpr::Num(c) => num_traits::Signed::is_negative(c),
        ElementExpr::Mul(x, _) | ElementExpr::Add(x, _) | ElementExpr::Sub(x, _) => starts_negative(x),
        _ => false,
    }
}

impl fmt::Display for ElementExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ElementExpr::*;
        match self {
            Num(c) => write!(f, "{}", coeff::format(c)),
            Sym(s) => write!(f, "{s}"),
            Family(s, a) => write!(f, "{s}({a})"),
            Pow(b, e) => match **b {
                Sym(_) | Family(..) => write!(f, "{b}^{e}"),
                Num(_) if !starts_negative(b) => write!(f, "{b}^{e}"),
                _ => write!(f, "({b})^{e}"),
            },
            Neg(x) => match **x {
                Add(..) | Sub(..) => write!(f, "-({x})"),
                _ => write!(f, "-{x}"),
            },
            Mul(x, y) => {
                let wrap = |e: &ElementExpr| matches!(e, Add(..) | Sub(..));
                if wrap(x) {
                    write!(f, "({x})")?
                } else {
                    write!(f, "{x}")?
                }
                write!(f, "*")?;
                if wrap(y) || starts_negative(y) || matches!(**y, Mul(..)) {
                    write!(f, "({y})")
                } else {
                    write!(f, "{y}")
                }
            }
            Add(x, y) => {
                write!(f, "{x} + ")?;
                if matches!(**y, Add(..) | Sub(..)) || starts_negative(y) {
                    write!(f, "({y})")
                } else {
                    write!(f, "{y}")
                }
            }
            Sub(x, y) => {
                write!(f, "{x} - ")?;
                if matches!(**y, Add(..) | Sub(..)) || starts_negative(y) {
                    write!(f, "({y})")
                } else {
                    write!(f, "{y}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ElementExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                lhs = ElementExpr::Add(Box::new(lhs), Box::new(rhs));
            } else if self.eat('-') {
                let rhs = self.term()?;
                lhs = ElementExpr::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ElementExpr> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            lhs = ElementExpr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ElementExpr> {
        if self.eat('-') {
            Ok(ElementExpr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ElementExpr> {
        let base = self.primary()?;
        if self.eat('^') {
            let e = self.exp_arg()?;
            Ok(ElementExpr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let n: i64 = n.try_into().map_err(|_| Error::Syntax {
                    pos: self.pos(),
                    msg: "integer too large".into(),
                })?;
                Ok(if neg { -n } else { n })
            }
            _ => self.err("expected integer"),
        }
    }

    fn exp_arg(&mut self) -> Result<ExpArg> {
        if let Some(Tok::Ident(p)) = self.peek().cloned() {
            self.at += 1;
            return Ok(ExpArg::Param(p));
        }
        if self.eat('(') {
            let v = self.exp_arg()?;
            if !self.eat(')') {
                return self.err("expected `)`");
            }
            return Ok(v);
        }
        Ok(ExpArg::Int(self.int()?))
    }

    fn primary(&mut self) -> Result<ElementExpr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let mut c = Coeff::from_integer(n);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.at += 1;
                            c /= Coeff::from_integer(d);
                        }
                        _ => return self.err("expected nonzero denominator"),
                    }
                }
                Ok(ElementExpr::Num(c))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if self.eat('(') {
                    let arg = self.exp_arg()?;
                    if !self.eat(')') {
                        return self.err("expected `)`");
                    }
                    Ok(ElementExpr::Family(name, arg))
                } else {
                    Ok(ElementExpr::Sym(name))
                }
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression without resolving any symbols.
pub fn parse(text: &str) -> Result<ElementExpr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Evaluates an expression in the ambient ring of `p` (no class check).
pub fn eval(e: &ElementExpr, p: &Presentation, env: &HashMap<String, i64>) -> Result<Element> {
    use ElementExpr::*;
    Ok(match e {
        Num(c) => {
            if !coeff::denominator_allowed(c, &p.inverted_primes()) {
                return Err(Error::BadCoefficient(coeff::format(c)));
            }
            p.scalar(c.clone())
        }
        Sym(name) => {
            if let Some(g) = p.generator_index(name) {
                p.generator_element(g)
            } else if let Some(body) = p.definition(name, false) {
                eval(&body.1, p, &HashMap::new())?
            } else {
                return Err(Error::UnknownGenerator(name.clone()));
            }
        }
        Family(name, arg) => {
            let (param, body) = p
                .definition(name, true)
                .ok_or_else(|| Error::UnknownGenerator(format!("{name}(..)")))?;
            let mut inner = HashMap::new();
            inner.insert(param.expect("family has parameter"), arg.resolve(env)?);
            eval(&body, p, &inner)?
        }
        Pow(b, arg) => {
            let base = eval(b, p, env)?;
            let n = arg.resolve(env)?;
            p.pow(&base, n)?
        }
        Neg(x) => p.neg(&eval(x, p, env)?),
        Mul(x, y) => p.mul(&eval(x, p, env)?, &eval(y, p, env)?),
        Add(x, y) => add_loose(p, eval(x, p, env)?, eval(y, p, env)?)?,
        Sub(x, y) => {
            let y = p.neg(&eval(y, p, env)?);
            add_loose(p, eval(x, p, env)?, y)?
        }
    })
}

// Zero summands carry no meaningful degree inside an expression.
fn add_loose(p: &Presentation, x: Element, y: Element) -> Result<Element> {
    if x.is_zero() && x.degree != y.degree {
        return Ok(y);
    }
    if y.is_zero() && x.degree != y.degree {
        return Ok(x);
    }
    if x.degree != y.degree {
        return Err(Error::HeterogeneousExpr(x.degree, y.degree));
    }
    p.add(&x, &y)
}

/// Parses and evaluates in the ambient ring of `p`.
pub fn eval_str(text: &str, p: &Presentation) -> Result<Element> {
    eval(&parse(text)?, p, &HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn precedence() {
        let e = parse("2*ub^3 + as - 1/27*x*y").unwrap();
        assert_eq!(e.to_string(), "2*ub^3 + as - 1/27*x*y");
        let e = parse("-ub^2").unwrap();
        assert!(matches!(e, ElementExpr::Neg(_)));
        let e = parse("a - b - c").unwrap();
        // left associative
        assert_eq!(e.to_string(), "a - b - c");
        let e = parse("a - (b - c)").unwrap();
        assert_eq!(e.to_string(), "a - (b - c)");
    }

    #[test]
    fn families_and_negative_exponents() {
        let e = parse("v0(-3)*ub^-2").unwrap();
        assert_eq!(e.to_string(), "v0(-3)*ub^-2");
        let e = parse("2*u2s^m").unwrap();
        assert_eq!(
            e,
            ElementExpr::Mul(
                Box::new(ElementExpr::Num(coeff::int(2))),
                Box::new(ElementExpr::Pow(
                    Box::new(ElementExpr::Sym("u2s".into())),
                    ExpArg::Param("m".into())
                ))
            )
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("ub + * as") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse("ub^").is_err());
        assert!(parse("(ub").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("ub $").is_err());
    }

    fn arb_expr() -> impl Strategy<Value = ElementExpr> {
        let leaf = prop_oneof![
            (1i64..50).prop_map(|n| ElementExpr::Num(coeff::int(n))),
            prop_oneof![Just("ub"), Just("as"), Just("u2s"), Just("a1b")]
                .prop_map(|s| ElementExpr::Sym(s.to_string())),
            (-4i64..5).prop_map(|m| ElementExpr::Family("v0".into(), ExpArg::Int(m))),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), -3i64..4).prop_map(|(b, e)| ElementExpr::Pow(Box::new(b), ExpArg::Int(e))),
                inner.clone().prop_map(|x| ElementExpr::Neg(Box::new(x))),
                (inner.clone(), inner.clone()).prop_map(|(x, y)| ElementExpr::Mul(Box::new(x), Box::new(y))),
                (inner.clone(), inner.clone()).prop_map(|(x, y)| ElementExpr::Add(Box::new(x), Box::new(y))),
                (inner.clone(), inner).prop_map(|(x, y)| ElementExpr::Sub(Box::new(x), Box::new(y))),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(e in arb_expr()) {
            let printed = e.to_string();
            let back = parse(&printed).unwrap();
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
