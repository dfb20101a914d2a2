//! Small expression language naming a design construction, e.g.
//! `complement(fano)`, `difference(complete(7,3),fano)`, `cyclic(11,1,3,4,5,9)`.
//!
//! ```text
//! expr := NAME | NAME '(' arg (',' arg)* ')'
//! arg  := INTEGER | expr
//! ```

use crate::constructions::{
    complement_design, complete_design, cyclic_design, fixture, multiset_difference,
    trivial_design, union_design, DifferenceSetSpec, FIXTURE_NAMES,
};
use crate::design::Design;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Arg {
    Int(u32),
    Expr(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Expr {
    name: String,
    args: Vec<Arg>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "construction {:?}, column {}: {msg}",
            self.src,
            self.pos + 1
        ))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(&f) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<Expr> {
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() || name.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(self.err("expected a construction name"));
        }
        let mut args = Vec::new();
        if self.peek() == Some('(') {
            self.pos += 1;
            loop {
                args.push(self.arg()?);
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ')'")),
                }
            }
        }
        Ok(Expr {
            name: name.to_string(),
            args,
        })
    }

    fn arg(&mut self) -> Result<Arg> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let digits = self.take_while(|c| c.is_ascii_digit());
            let n = digits.parse().map_err(|_| self.err("integer too large"))?;
            Ok(Arg::Int(n))
        } else {
            Ok(Arg::Expr(self.expr()?))
        }
    }
}

fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

fn ints(e: &Expr) -> Result<Vec<u32>> {
    e.args
        .iter()
        .map(|a| match a {
            Arg::Int(n) => Ok(*n),
            Arg::Expr(_) => Err(Error::Parse(format!(
                "{} expects integer arguments",
                e.name
            ))),
        })
        .collect()
}

fn designs(e: &Expr) -> Result<Vec<Design>> {
    e.args
        .iter()
        .map(|a| match a {
            Arg::Expr(x) => eval(x),
            Arg::Int(_) => Err(Error::Parse(format!("{} expects design arguments", e.name))),
        })
        .collect()
}

fn arity<T>(e: &Expr, xs: Vec<T>, n: usize) -> Result<Vec<T>> {
    if xs.len() == n {
        Ok(xs)
    } else {
        Err(Error::Parse(format!(
            "{} takes {n} argument(s), got {}",
            e.name,
            xs.len()
        )))
    }
}

fn eval(e: &Expr) -> Result<Design> {
    match e.name.as_str() {
        name if FIXTURE_NAMES.contains(&name) => {
            arity(e, e.args.clone(), 0)?;
            fixture(name)
        }
        "trivial" => trivial_design(arity(e, ints(e)?, 1)?[0]),
        "complete" => {
            let a = arity(e, ints(e)?, 2)?;
            complete_design(a[0], a[1])
        }
        "cyclic" => {
            let a = ints(e)?;
            let (&v, base) = a
                .split_first()
                .ok_or_else(|| Error::Parse("cyclic takes a modulus and base block".into()))?;
            cyclic_design(&DifferenceSetSpec::new(v, base)?)
        }
        "complement" => complement_design(&arity(e, designs(e)?, 1)?[0]),
        "union" => {
            let d = arity(e, designs(e)?, 2)?;
            union_design(&d[0], &d[1])
        }
        "difference" => {
            let d = arity(e, designs(e)?, 2)?;
            multiset_difference(&d[0], &d[1])
        }
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// Parses and evaluates a construction expression.
pub fn construct(src: &str) -> Result<Design> {
    eval(&parse(src)?)
}
