//! Polynomials over GF(2) in the variables `p, q, r, ...`.
//!
//! `+` is XOR, juxtaposition or `*` is AND, `0` and `1` are constants. A
//! vector-valued function is written as a parenthesised tuple, e.g.
//! `(p, (1+p)(1+q), q)`.

use crate::error::{Error, Result};

/// Variable names in coordinate order; coordinate 1 is `p`.
pub const VARIABLES: &str = "pqrstuvwxyzabcdefghi";

const MAX_DEPTH: usize = 128;

pub fn variable_name(j: usize) -> char {
    VARIABLES.as_bytes()[j] as char
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Poly {
    Const(bool),
    Var(usize),
    Sum(Vec<Poly>),
    Product(Vec<Poly>),
}

impl Poly {
    /// Evaluates at the point whose coordinate `j` is `values[j]`.
    pub fn eval(&self, values: &[bool]) -> bool {
        match self {
            Poly::Const(c) => *c,
            Poly::Var(j) => values[*j],
            Poly::Sum(terms) => terms.iter().fold(false, |acc, t| acc ^ t.eval(values)),
            Poly::Product(factors) => factors.iter().all(|t| t.eval(values)),
        }
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Poly::Const(_) => None,
            Poly::Var(j) => Some(*j),
            Poly::Sum(ts) | Poly::Product(ts) => ts.iter().filter_map(Poly::max_var).max(),
        }
    }
}

/// Parses one polynomial or a tuple of polynomials.
pub fn parse_polynomials(src: &str) -> Result<Vec<Poly>> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        depth: 0,
    };
    if let Some(tuple) = p.try_tuple() {
        return Ok(tuple);
    }
    p.pos = 0;
    p.depth = 0;
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(vec![e])
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn try_tuple(&mut self) -> Option<Vec<Poly>> {
        if !self.eat(b'(') {
            return None;
        }
        let mut items = vec![self.expr().ok()?];
        while self.eat(b',') {
            items.push(self.expr().ok()?);
        }
        if !self.eat(b')') {
            return None;
        }
        self.skip_ws();
        (self.pos == self.src.len() && items.len() >= 2).then_some(items)
    }

    fn expr(&mut self) -> Result<Poly> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        self.depth -= 1;
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Poly::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Poly> {
        let mut factors = vec![self.factor()?];
        loop {
            if self.eat(b'*') {
                factors.push(self.factor()?);
                continue;
            }
            match self.peek() {
                Some(c) if c == b'(' || c == b'0' || c == b'1' || c.is_ascii_lowercase() => {
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Poly::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Poly::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Poly::Const(true))
            }
            Some(c) if c.is_ascii_lowercase() => match VARIABLES.bytes().position(|v| v == c) {
                Some(j) => {
                    self.pos += 1;
                    Ok(Poly::Var(j))
                }
                None => Err(self.err("unknown variable")),
            },
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tuples_and_products() {
        let polys = parse_polynomials("(p, (1+p)(1+q), q)").unwrap();
        assert_eq!(polys.len(), 3);
        let at = |p: bool, q: bool| polys.iter().map(|e| e.eval(&[p, q])).collect::<Vec<_>>();
        assert_eq!(at(true, true), vec![true, false, true]);
        assert_eq!(at(false, false), vec![false, true, false]);
    }

    #[test]
    fn single_parenthesised_expression_is_not_a_tuple() {
        let polys = parse_polynomials("(1+p)(1+q)").unwrap();
        assert_eq!(polys.len(), 1);
        assert!(polys[0].eval(&[false, false]));
        let polys = parse_polynomials("(p)").unwrap();
        assert_eq!(polys, vec![Poly::Var(0)]);
    }

    #[test]
    fn juxtaposition_and_star() {
        let a = parse_polynomials("pq+r").unwrap();
        let b = parse_polynomials("p*q + r").unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].max_var(), Some(2));
    }

    #[test]
    fn errors() {
        for bad in ["", "(", "p+", "p)", "(p,", "P", "p ^ q", "(p,q", "1 2 +"] {
            assert!(matches!(parse_polynomials(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
        let deep = "(".repeat(500) + "p" + &")".repeat(500);
        assert!(parse_polynomials(&deep).is_err());
    }
}
