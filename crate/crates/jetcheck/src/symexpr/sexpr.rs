//! Textual and JSON serialisation of expressions.
//!
//! The text form is a parenthesised prefix notation over `+`, `*`, `neg`,
//! `/` and `^`, e.g. `(+ (* y_11 y_22) (neg (* y_12 y_12)))`.  The JSON form
//! is the same AST as objects: `{"op": "add", "args": [...]}`, `{"var":
//! "y_11"}`, `{"int": "42"}`.  Both are emitted from the canonical form and
//! both round-trip bit-exactly through it.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::expr::RationalExpr;
use super::poly::Poly;
use super::var::VarId;
use crate::{Error, Result};

// --- emission --------------------------------------------------------------

fn poly_to_text(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p.terms().map(|(m, c)| term_to_text(m, c)).collect();
    if terms.len() == 1 {
        terms.into_iter().next().unwrap()
    } else {
        format!("(+ {})", terms.join(" "))
    }
}

fn term_to_text(m: &super::poly::Monomial, c: &BigInt) -> String {
    let mut factors: Vec<String> = Vec::new();
    let a = c.abs();
    if !a.is_one() || m.is_one() {
        factors.push(a.to_string());
    }
    for (v, e) in m.iter() {
        for _ in 0..e {
            factors.push(v.to_string());
        }
    }
    let body = if factors.len() == 1 {
        factors.into_iter().next().unwrap()
    } else {
        format!("(* {})", factors.join(" "))
    };
    if c.is_negative() {
        format!("(neg {body})")
    } else {
        body
    }
}

pub fn to_text(e: &RationalExpr) -> String {
    if e.den().is_one() {
        poly_to_text(e.num())
    } else {
        format!("(/ {} {})", poly_to_text(e.num()), poly_to_text(e.den()))
    }
}

fn poly_to_json(p: &Poly) -> Value {
    if p.is_zero() {
        return json!({ "int": "0" });
    }
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let mut factors: Vec<Value> = Vec::new();
            let a = c.abs();
            if !a.is_one() || m.is_one() {
                factors.push(json!({ "int": a.to_string() }));
            }
            for (v, e) in m.iter() {
                for _ in 0..e {
                    factors.push(json!({ "var": v.to_string() }));
                }
            }
            let body = if factors.len() == 1 {
                factors.into_iter().next().unwrap()
            } else {
                json!({ "op": "mul", "args": factors })
            };
            if c.is_negative() {
                json!({ "op": "neg", "args": [body] })
            } else {
                body
            }
        })
        .collect();
    if terms.len() == 1 {
        terms.into_iter().next().unwrap()
    } else {
        json!({ "op": "add", "args": terms })
    }
}

pub fn to_json(e: &RationalExpr) -> Value {
    if e.den().is_one() {
        poly_to_json(e.num())
    } else {
        json!({ "op": "div", "args": [poly_to_json(e.num()), poly_to_json(e.den())] })
    }
}

// --- parsing ---------------------------------------------------------------

#[derive(Debug)]
enum Token {
    Open,
    Close,
    Atom(String),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(Token::Atom(std::mem::take(&mut cur)));
                }
                out.push(if ch == '(' { Token::Open } else { Token::Close });
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(Token::Atom(std::mem::take(&mut cur)));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(Token::Atom(cur));
    }
    Ok(out)
}

fn parse_atom(s: &str) -> Result<RationalExpr> {
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(RationalExpr::from_poly(Poly::constant(n)));
    }
    let v: VarId = s.parse()?;
    Ok(RationalExpr::var(v))
}

fn parse_tokens(tokens: &[Token], pos: &mut usize) -> Result<RationalExpr> {
    let err = |m: &str| Error::Parse(m.to_string());
    match tokens.get(*pos) {
        None => Err(err("unexpected end of input")),
        Some(Token::Close) => Err(err("unexpected `)`")),
        Some(Token::Atom(a)) => {
            *pos += 1;
            parse_atom(a)
        }
        Some(Token::Open) => {
            *pos += 1;
            let op = match tokens.get(*pos) {
                Some(Token::Atom(a)) => a.clone(),
                _ => return Err(err("expected operator after `(`")),
            };
            *pos += 1;
            let mut args = Vec::new();
            loop {
                match tokens.get(*pos) {
                    Some(Token::Close) => {
                        *pos += 1;
                        break;
                    }
                    None => return Err(err("missing `)`")),
                    _ => args.push(parse_tokens(tokens, pos)?),
                }
            }
            apply_op(&op, args)
        }
    }
}

fn apply_op(op: &str, args: Vec<RationalExpr>) -> Result<RationalExpr> {
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "operator `{op}` expects {n} arguments, got {}",
                args.len()
            )))
        }
    };
    match op {
        "+" | "add" => {
            if args.len() < 2 {
                return Err(Error::Parse("`+` expects at least 2 arguments".into()));
            }
            Ok(args.iter().skip(1).fold(args[0].clone(), |a, b| a.add(b)))
        }
        "*" | "mul" => {
            if args.len() < 2 {
                return Err(Error::Parse("`*` expects at least 2 arguments".into()));
            }
            Ok(args.iter().skip(1).fold(args[0].clone(), |a, b| a.mul(b)))
        }
        "-" | "sub" => {
            arity(2)?;
            Ok(args[0].sub(&args[1]))
        }
        "neg" => {
            arity(1)?;
            Ok(args[0].neg())
        }
        "/" | "div" => {
            arity(2)?;
            args[0].div(&args[1])
        }
        "^" | "pow" => {
            arity(2)?;
            let e = args[1]
                .as_rational()
                .filter(|r| r.is_integer() && !r.numer().is_negative())
                .ok_or_else(|| Error::Parse("`^` expects a nonnegative integer".into()))?;
            let e: u32 = e
                .to_integer()
                .try_into()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            Ok(args[0].pow(e))
        }
        _ => Err(Error::Parse(format!("unknown operator `{op}`"))),
    }
}

pub fn from_text(s: &str) -> Result<RationalExpr> {
    let tokens = tokenize(s)?;
    let mut pos = 0;
    let e = parse_tokens(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::Parse("trailing input".into()));
    }
    Ok(e)
}

pub fn from_json(v: &Value) -> Result<RationalExpr> {
    if let Some(s) = v.get("var").and_then(Value::as_str) {
        let var: VarId = s.parse()?;
        return Ok(RationalExpr::var(var));
    }
    if let Some(s) = v.get("int").and_then(Value::as_str) {
        let n: BigInt = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
        return Ok(RationalExpr::from_poly(Poly::constant(n)));
    }
    if let Some(n) = v.get("int").and_then(Value::as_i64) {
        return Ok(RationalExpr::int(n));
    }
    let op = v
        .get("op")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("expected `op`, `var` or `int`".into()))?;
    let args = v
        .get("args")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `args`".into()))?;
    let args: Result<Vec<RationalExpr>> = args.iter().map(from_json).collect();
    apply_op(op, args?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::var::VarId;

    fn det2() -> RationalExpr {
        let y11 = RationalExpr::var(VarId::y(1, 1));
        let y12 = RationalExpr::var(VarId::y(1, 2));
        let y22 = RationalExpr::var(VarId::y(2, 2));
        y11.mul(&y22).sub(&y12.mul(&y12))
    }

    #[test]
    fn text_round_trip() {
        let e = det2();
        let s = to_text(&e);
        assert_eq!(s, "(+ (* y_11 y_22) (neg (* y_12 y_12)))");
        assert_eq!(from_text(&s).unwrap(), e);
    }

    #[test]
    fn text_round_trip_fraction() {
        let e = RationalExpr::one().div(&det2()).unwrap();
        assert_eq!(from_text(&to_text(&e)).unwrap(), e);

        let half = RationalExpr::int(1).div(&RationalExpr::int(2)).unwrap();
        let f = det2().mul(&half).sub(&RationalExpr::int(7));
        assert_eq!(from_text(&to_text(&f)).unwrap(), f);
    }

    #[test]
    fn json_round_trip() {
        let e = det2();
        assert_eq!(from_json(&to_json(&e)).unwrap(), e);
        let f = RationalExpr::var(VarId::a(1, 2, 1)).div(&det2()).unwrap();
        assert_eq!(from_json(&to_json(&f)).unwrap(), f);
    }

    #[test]
    fn parser_accepts_pow_and_sub() {
        let e = from_text("(- (^ y_11 2) (* y_12 y_12))").unwrap();
        let y11 = RationalExpr::var(VarId::y(1, 1));
        let y12 = RationalExpr::var(VarId::y(1, 2));
        assert_eq!(e, y11.pow(2).sub(&y12.pow(2)));
    }
}
