//! The polynomial text grammar shared by every file format.
//!
//! Expressions over the variables `s`, `t`, the extension generator `a`,
//! integer literals, `+ - * / ^` and parentheses; whitespace insignificant.
//! Division requires a constant, invertible divisor (this is how rational
//! literals `p/q` and quotient coefficients like `t/(5*a+2)` are written).
//! The result must be homogeneous in (s, t); offending monomials are listed
//! otherwise.

use std::collections::BTreeMap;

use super::field::{Field, FieldElem, Rat};
use super::poly::HomogPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str, vars: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut it = text.chars().peekable();
    while let Some(&c) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut num = String::new();
            while let Some(&d) = it.peek() {
                if d.is_ascii_digit() {
                    num.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            toks.push(Tok::Num(num.parse().unwrap()));
        } else if vars.contains(c) {
            toks.push(Tok::Var(c));
            it.next();
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
            };
            toks.push(t);
            it.next();
        }
    }
    Ok(toks)
}

/// Bivariate accumulation domain used during evaluation; homogeneity is
/// checked only at the end.
#[derive(Clone)]
struct BiPoly {
    spec: Field,
    terms: BTreeMap<(usize, usize), FieldElem>,
}

impl BiPoly {
    fn zero(spec: &Field) -> Self {
        BiPoly {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn constant(spec: &Field, c: FieldElem) -> Self {
        let mut p = Self::zero(spec);
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    fn var(spec: &Field, name: char) -> Result<Self> {
        let mut p = Self::zero(spec);
        match name {
            's' => {
                p.terms.insert((1, 0), FieldElem::one(spec));
            }
            't' => {
                p.terms.insert((0, 1), FieldElem::one(spec));
            }
            'a' => {
                p.terms.insert((0, 0), FieldElem::generator(spec)?);
            }
            other => return Err(Error::Parse(format!("unknown variable `{other}`"))),
        }
        Ok(p)
    }

    fn insert(&mut self, key: (usize, usize), v: FieldElem) {
        let cur = self
            .terms
            .remove(&key)
            .unwrap_or_else(|| FieldElem::zero(&self.spec));
        let sum = cur.add(&v);
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        out
    }

    fn neg(&self) -> Self {
        BiPoly {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(k, v)| (*k, v.neg())).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.spec);
        for ((i1, j1), v1) in &self.terms {
            for ((i2, j2), v2) in &other.terms {
                out.insert((i1 + i2, j1 + j2), v1.mul(v2));
            }
        }
        out
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(&self.spec, FieldElem::one(&self.spec));
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    fn as_constant(&self) -> Option<FieldElem> {
        if self.terms.is_empty() {
            return Some(FieldElem::zero(&self.spec));
        }
        if self.terms.len() == 1 {
            if let Some(v) = self.terms.get(&(0, 0)) {
                return Some(v.clone());
            }
        }
        None
    }

    fn div(&self, other: &Self) -> Result<Self> {
        let c = other
            .as_constant()
            .ok_or_else(|| Error::Parse("division by a non-constant expression".into()))?;
        let inv = c.inv()?;
        Ok(BiPoly {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.mul(&inv)))
                .collect(),
        })
    }
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    spec: Field,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut v = if self.peek() == Some(&Tok::Minus) {
            self.next();
            self.term()?.neg()
        } else {
            self.term()?
        };
        while let Some(op) = self.peek() {
            match op {
                Tok::Plus => {
                    self.next();
                    let w = self.term()?;
                    v = v.add(&w);
                }
                Tok::Minus => {
                    self.next();
                    let w = self.term()?;
                    v = v.add(&w.neg());
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut v = self.unary()?;
        while let Some(op) = self.peek() {
            match op {
                Tok::Star => {
                    self.next();
                    let w = self.unary()?;
                    v = v.mul(&w);
                }
                Tok::Slash => {
                    self.next();
                    let w = self.unary()?;
                    v = v.div(&w)?;
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn unary(&mut self) -> Result<BiPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<BiPoly> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!(
                    "expected integer exponent after ^, got {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<BiPoly> {
        match self.next() {
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(v),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            Some(Tok::Var(c)) => BiPoly::var(&self.spec, c),
            Some(Tok::Num(n)) => Ok(BiPoly::constant(
                &self.spec,
                FieldElem::from_rat(&self.spec, Rat::from_integer(n)),
            )),
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_bipoly(text: &str, spec: &Field) -> Result<BiPoly> {
    let toks = lex(text, "sta")?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        spec: spec.clone(),
    };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(v)
}

/// Parse an expression into a homogeneous polynomial over the given field.
pub fn parse_homog(text: &str, spec: &Field) -> Result<HomogPoly> {
    let bp = parse_bipoly(text, spec)?;
    if bp.terms.is_empty() {
        return Ok(HomogPoly::zero(spec));
    }
    let degrees: std::collections::BTreeSet<usize> =
        bp.terms.keys().map(|(i, j)| i + j).collect();
    if degrees.len() != 1 {
        let mons: Vec<String> = bp
            .terms
            .keys()
            .map(|(i, j)| format!("s^{i}*t^{j}"))
            .collect();
        return Err(Error::NotHomogeneous {
            monomials: mons.join(", "),
        });
    }
    let d = *degrees.iter().next().unwrap();
    let mut coeffs = vec![FieldElem::zero(spec); d + 1];
    for ((i, _j), v) in bp.terms {
        coeffs[i] = v;
    }
    Ok(HomogPoly::from_coeffs(spec, coeffs))
}

/// Parse an expression that must evaluate to a single field element
/// (no s or t).
pub fn parse_field_elem(text: &str, spec: &Field) -> Result<FieldElem> {
    let bp = parse_bipoly(text, spec)?;
    bp.as_constant()
        .ok_or_else(|| Error::Parse(format!("expected a constant, got `{text}`")))
}

/// Parse a univariate modulus in `x` (or `a`) over Q, returning ascending
/// rational coefficients.
pub fn parse_modulus(text: &str) -> Result<Vec<Rat>> {
    let toks = lex(&text.replace('x', "s"), "s")?;
    if toks.is_empty() {
        return Err(Error::Parse("empty modulus".into()));
    }
    let q = super::field::FieldSpec::rationals();
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        spec: q.clone(),
    };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse("trailing input in modulus".into()));
    }
    let deg = v.terms.keys().map(|(i, _)| *i).max().unwrap_or(0);
    let mut out = vec![Rat::from_integer(0.into()); deg + 1];
    for ((i, j), c) in v.terms {
        if j != 0 {
            return Err(Error::Parse("modulus must be univariate".into()));
        }
        out[i] = c.as_rational().unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat_int, FieldSpec};

    #[test]
    fn parses_basic_expressions() {
        let q = FieldSpec::rationals();
        let f = parse_homog("-3*t^2*(s^2-3*t^2)", &q).unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(f.coeff(2).as_rational().unwrap(), rat_int(-3));
        assert_eq!(f.coeff(0).as_rational().unwrap(), rat_int(9));
    }

    #[test]
    fn rejects_inhomogeneous_with_monomials() {
        let q = FieldSpec::rationals();
        match parse_homog("s^2+t", &q) {
            Err(Error::NotHomogeneous { monomials }) => {
                assert!(monomials.contains("s^2"));
                assert!(monomials.contains("t^1"));
            }
            other => panic!("expected NotHomogeneous, got {other:?}"),
        }
    }

    #[test]
    fn division_by_constant_subexpression() {
        let k = FieldSpec::extension(
            vec![rat_int(4), rat_int(12), rat_int(12), rat_int(5)],
            "5*a^3+12*a^2+12*a+4",
        )
        .unwrap();
        let f = parse_homog("s+t/(5*a+2)", &k).unwrap();
        assert_eq!(f.degree(), 1);
        let denom = parse_field_elem("5*a+2", &k).unwrap();
        assert!(f.coeff(0).mul(&denom).is_one());
    }

    #[test]
    fn division_by_polynomial_rejected() {
        let q = FieldSpec::rationals();
        assert!(matches!(
            parse_homog("s/(s+t)", &q),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn modulus_in_x() {
        let m = parse_modulus("2*x^2-7*x+28").unwrap();
        assert_eq!(m, vec![rat_int(28), rat_int(-7), rat_int(2)]);
    }

    #[test]
    fn generator_requires_extension() {
        let q = FieldSpec::rationals();
        assert!(parse_homog("a*s", &q).is_err());
    }
}
