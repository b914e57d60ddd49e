//! Homogeneous bivariate polynomials in (s, t) over a coefficient field, and
//! the gcd / squarefree / order-splitting kernel built on them.
//!
//! Everything reduces to univariate algorithms on the dehomogenization at
//! t = 1, with the t-power tracked separately. The place at infinity is the
//! linear factor t like any other place; nothing downstream special-cases it.

use std::fmt;

use super::field::{render_rat, Field, FieldElem, Rat};
use crate::error::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficient of s^k t^(degree-k) sits at index k. The zero polynomial is
/// canonical: degree 0, a single zero coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogPoly {
    spec: Field,
    degree: usize,
    coeffs: Vec<FieldElem>,
}

/// One squarefree, content-normalized factor together with its multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct SquarefreeCluster {
    pub factor: HomogPoly,
    pub multiplicity: u32,
}

/// A vanishing order: finite, or infinite (order of anything along the zero
/// polynomial).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn at_least(self, n: u32) -> bool {
        match self {
            Order::Finite(k) => k >= n,
            Order::Infinite => true,
        }
    }

    pub fn is(self, n: u32) -> bool {
        self == Order::Finite(n)
    }

    pub fn times(self, e: u32) -> Order {
        match self {
            Order::Finite(k) => Order::Finite(k * e),
            Order::Infinite => Order::Infinite,
        }
    }

    pub fn minus(self, n: u32) -> Order {
        match self {
            Order::Finite(k) => Order::Finite(k - n),
            Order::Infinite => Order::Infinite,
        }
    }

    pub fn div_floor(self, n: u32) -> Order {
        match self {
            Order::Finite(k) => Order::Finite(k / n),
            Order::Infinite => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl HomogPoly {
    pub fn zero(spec: &Field) -> Self {
        HomogPoly {
            spec: spec.clone(),
            degree: 0,
            coeffs: vec![FieldElem::zero(spec)],
        }
    }

    pub fn one(spec: &Field) -> Self {
        Self::constant(FieldElem::one(spec))
    }

    pub fn constant(c: FieldElem) -> Self {
        let spec = c.spec().clone();
        if c.is_zero() {
            Self::zero(&spec)
        } else {
            HomogPoly {
                spec,
                degree: 0,
                coeffs: vec![c],
            }
        }
    }

    pub fn var_s(spec: &Field) -> Self {
        HomogPoly {
            spec: spec.clone(),
            degree: 1,
            coeffs: vec![FieldElem::zero(spec), FieldElem::one(spec)],
        }
    }

    pub fn var_t(spec: &Field) -> Self {
        HomogPoly {
            spec: spec.clone(),
            degree: 1,
            coeffs: vec![FieldElem::one(spec), FieldElem::zero(spec)],
        }
    }

    /// Build from ascending-in-s coefficients; all-zero input collapses to the
    /// canonical zero polynomial.
    pub fn from_coeffs(spec: &Field, coeffs: Vec<FieldElem>) -> Self {
        assert!(!coeffs.is_empty());
        if coeffs.iter().all(|c| c.is_zero()) {
            return Self::zero(spec);
        }
        HomogPoly {
            spec: spec.clone(),
            degree: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn spec(&self) -> &Field {
        &self.spec
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of s^k t^(degree-k).
    pub fn coeff(&self, k: usize) -> &FieldElem {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    /// Leading coefficient in s (highest s-power with nonzero coefficient).
    pub fn lead(&self) -> Option<&FieldElem> {
        self.coeffs.iter().rev().find(|c| !c.is_zero())
    }

    /// Order of vanishing along t, i.e. degree minus the s-degree of the
    /// dehomogenization.
    pub fn t_order(&self) -> usize {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            Some(k) => self.degree - k,
            None => 0,
        }
    }

    /// Order of vanishing along s.
    pub fn s_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.degree, other.degree,
            "adding homogeneous polynomials of different degree"
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Self::from_coeffs(&self.spec, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        HomogPoly {
            spec: self.spec.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.spec);
        }
        let d = self.degree + other.degree;
        let mut out = vec![FieldElem::zero(&self.spec); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(&self.spec, out)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero(&self.spec);
        }
        HomogPoly {
            spec: self.spec.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.spec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Partial derivative with respect to s.
    pub fn derivative_s(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(&self.spec);
        }
        let coeffs = (1..=self.degree)
            .map(|k| self.coeffs[k].mul(&FieldElem::from_int(&self.spec, k as i64)))
            .collect();
        Self::from_coeffs(&self.spec, coeffs)
    }

    /// Partial derivative with respect to t.
    pub fn derivative_t(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(&self.spec);
        }
        let d = self.degree;
        let coeffs = (0..d)
            .map(|k| self.coeffs[k].mul(&FieldElem::from_int(&self.spec, (d - k) as i64)))
            .collect();
        Self::from_coeffs(&self.spec, coeffs)
    }

    /// Substitute (s, t) -> (n, d); n and d must be homogeneous of one degree.
    pub fn substitute(&self, n: &HomogPoly, d: &HomogPoly) -> Result<HomogPoly> {
        if n.degree != d.degree {
            return Err(Error::DegreeMismatch {
                expected: n.degree,
                found: d.degree,
            });
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.spec));
        }
        let deg = self.degree;
        let mut npow = Vec::with_capacity(deg + 1);
        let mut dpow = Vec::with_capacity(deg + 1);
        npow.push(Self::one(&self.spec));
        dpow.push(Self::one(&self.spec));
        for i in 1..=deg {
            npow.push(npow[i - 1].mul(n));
            dpow.push(dpow[i - 1].mul(d));
        }
        let total = deg * n.degree;
        let mut acc = HomogPoly {
            spec: self.spec.clone(),
            degree: total,
            coeffs: vec![FieldElem::zero(&self.spec); total + 1],
        };
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = npow[k].mul(&dpow[deg - k]).scale(c);
            if !term.is_zero() {
                // term has degree `total` exactly unless the product collapsed
                for (i, tc) in term.coeffs.iter().enumerate() {
                    acc.coeffs[i] = acc.coeffs[i].add(tc);
                }
            }
        }
        Ok(Self::from_coeffs(&self.spec, acc.coeffs))
    }

    /// Dehomogenize at t = 1: ascending univariate coefficients and the
    /// separated t-power.
    fn dehom(&self) -> (usize, Vec<FieldElem>) {
        let mut u = self.coeffs.clone();
        while u.len() > 1 && u.last().map_or(false, |c| c.is_zero()) {
            u.pop();
        }
        if u.iter().all(|c| c.is_zero()) {
            return (0, Vec::new());
        }
        (self.degree - (u.len() - 1), u)
    }

    fn rehom(spec: &Field, tpow: usize, u: &[FieldElem]) -> Self {
        assert!(!u.is_empty());
        let du = u.len() - 1;
        let mut coeffs = u.to_vec();
        coeffs.extend(std::iter::repeat(FieldElem::zero(spec)).take(tpow));
        // coeffs currently: index k <= du holds u[k]; higher are zero
        let mut out = vec![FieldElem::zero(spec); du + tpow + 1];
        for (k, c) in u.iter().enumerate() {
            out[k] = c.clone();
        }
        let _ = coeffs;
        Self::from_coeffs(spec, out)
    }

    /// Exact division; panics if `g` does not divide `self` (internal use).
    pub(crate) fn div_exact(&self, g: &HomogPoly) -> HomogPoly {
        self.try_div_exact(g)
            .expect("div_exact: divisor does not divide")
    }

    /// Exact division; `None` when `g` does not divide `self`.
    pub fn try_div_exact(&self, g: &HomogPoly) -> Option<HomogPoly> {
        if self.is_zero() {
            return Some(Self::zero(&self.spec));
        }
        if g.is_zero() {
            return None;
        }
        let (tf, uf) = self.dehom();
        let (tg, ug) = g.dehom();
        if tg > tf {
            return None;
        }
        let (q, r) = udivmod(&self.spec, &uf, &ug).ok()?;
        if !r.is_empty() {
            return None;
        }
        Some(Self::rehom(&self.spec, tf - tg, &q))
    }

    pub fn divides(&self, other: &HomogPoly) -> bool {
        other.try_div_exact(self).is_some()
    }

    /// Evaluate at a projective point (a : b), substituting s = a, t = b.
    pub fn eval_point(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let d = self.degree;
        let mut apow = Vec::with_capacity(d + 1);
        let mut bpow = Vec::with_capacity(d + 1);
        apow.push(FieldElem::one(&self.spec));
        bpow.push(FieldElem::one(&self.spec));
        for i in 1..=d {
            apow.push(apow[i - 1].mul(a));
            bpow.push(bpow[i - 1].mul(b));
        }
        let mut acc = FieldElem::zero(&self.spec);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&apow[k]).mul(&bpow[d - k]));
            }
        }
        acc
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_poly(self))
    }
}

/// Render in the expression grammar, descending s-powers.
pub fn render_poly(p: &HomogPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let d = p.degree();
    let mut terms: Vec<String> = Vec::new();
    for k in (0..=d).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let mut mon = String::new();
        if k > 0 {
            mon.push('s');
            if k > 1 {
                mon.push_str(&format!("^{k}"));
            }
        }
        if d - k > 0 {
            if !mon.is_empty() {
                mon.push('*');
            }
            mon.push('t');
            if d - k > 1 {
                mon.push_str(&format!("^{}", d - k));
            }
        }
        let cs = if let Some(q) = c.as_rational() {
            if mon.is_empty() {
                render_rat(&q)
            } else if q.is_one() {
                String::new()
            } else if (-q.clone()).is_one() {
                "-".into()
            } else {
                format!("{}*", render_rat(&q))
            }
        } else {
            format!("({})*", c)
        };
        terms.push(if mon.is_empty() {
            cs
        } else if cs == "-" {
            format!("-{mon}")
        } else {
            format!("{cs}{mon}")
        });
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(t);
        } else if let Some(stripped) = t.strip_prefix('-') {
            out.push('-');
            out.push_str(stripped);
        } else {
            out.push('+');
            out.push_str(t);
        }
    }
    out
}

// ---- univariate layer over a field (ascending, trailing zeros trimmed) ----

type UPoly = Vec<FieldElem>;

fn utrim(mut v: UPoly) -> UPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn udeg(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn udivmod(spec: &Field, a: &UPoly, b: &UPoly) -> Result<(UPoly, UPoly)> {
    assert!(!b.is_empty(), "udivmod by zero");
    let mut rem = a.clone();
    if a.len() < b.len() {
        return Ok((Vec::new(), utrim(rem)));
    }
    let lead_inv = b.last().unwrap().inv()?;
    let mut quot = vec![FieldElem::zero(spec); a.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let c = rem.last().unwrap().mul(&lead_inv);
        let d = rem.len() - b.len();
        quot[d] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            rem[d + i] = rem[d + i].sub(&c.mul(bc));
        }
        rem = utrim(rem);
    }
    Ok((utrim(quot), rem))
}

fn umonic(p: &UPoly) -> Result<UPoly> {
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let inv = p.last().unwrap().inv()?;
    Ok(p.iter().map(|c| c.mul(&inv)).collect())
}

/// Strip the common rational content of all coordinates; a unit rescale that
/// keeps coefficient growth in the Euclidean chain under control.
fn ustrip_content(spec: &Field, p: &UPoly) -> UPoly {
    use num_bigint::BigInt;
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in p {
        for q in c.coeffs() {
            if !q.is_zero() {
                num = num.gcd(q.numer());
                den = den.lcm(q.denom());
            }
        }
    }
    if num.is_zero() || (num.is_one() && den.is_one()) {
        return p.clone();
    }
    let inv = FieldElem::from_rat(spec, Rat::new(den, num));
    p.iter().map(|c| c.mul(&inv)).collect()
}

fn ugcd(spec: &Field, a: &UPoly, b: &UPoly) -> Result<UPoly> {
    let mut p = ustrip_content(spec, a);
    let mut q = ustrip_content(spec, b);
    while !q.is_empty() {
        let (_, r) = udivmod(spec, &p, &q)?;
        p = q;
        q = ustrip_content(spec, &r);
    }
    umonic(&p)
}

fn uderiv(spec: &Field, p: &UPoly) -> UPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    utrim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&FieldElem::from_int(spec, i as i64)))
            .collect(),
    )
}

fn usub(a: &UPoly, b: &UPoly, spec: &Field) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = vec![FieldElem::zero(spec); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].sub(c);
    }
    utrim(out)
}

// ---- the kernel operations ----

/// Content-normalized greatest common divisor of two homogeneous polynomials.
pub fn hp_gcd(f: &HomogPoly, g: &HomogPoly) -> Result<HomogPoly> {
    assert!(f.spec() == g.spec(), "hp_gcd across fields");
    if f.is_zero() && g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if f.is_zero() {
        return Ok(content_normalize(g)?.1);
    }
    if g.is_zero() {
        return Ok(content_normalize(f)?.1);
    }
    let spec = f.spec();
    let (tf, uf) = f.dehom();
    let (tg, ug) = g.dehom();
    let gu = ugcd(spec, &uf, &ug)?;
    let res = HomogPoly::rehom(spec, tf.min(tg), &gu);
    Ok(content_normalize(&res)?.1)
}

/// Canonical form: over Q, integer coefficients with content 1 and positive
/// leading coefficient; over an extension, leading coefficient 1. Returns
/// (unit, normalized) with unit * normalized = input.
pub fn content_normalize(f: &HomogPoly) -> Result<(FieldElem, HomogPoly)> {
    assert!(!f.is_zero(), "content_normalize of zero");
    let spec = f.spec();
    if spec.is_rationals() {
        let mut num_gcd = num_bigint::BigInt::zero();
        let mut den_lcm = num_bigint::BigInt::one();
        for c in f.coeffs() {
            if let Some(q) = c.as_rational() {
                if !q.is_zero() {
                    num_gcd = num_gcd.gcd(q.numer());
                    den_lcm = den_lcm.lcm(q.denom());
                }
            }
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        let lead = f.lead().unwrap().as_rational().unwrap();
        if lead.is_negative() {
            content = -content;
        }
        let unit = FieldElem::from_rat(spec, content);
        let norm = f.scale(&unit.inv()?);
        Ok((unit, norm))
    } else {
        let unit = f.lead().unwrap().clone();
        let norm = f.scale(&unit.inv()?);
        Ok((unit, norm))
    }
}

/// Squarefree decomposition f = unit * prod factor_i^multiplicity_i with the
/// factors content-normalized and pairwise coprime. The place at infinity
/// shows up as the factor t.
pub fn squarefree_decompose(f: &HomogPoly) -> Result<(FieldElem, Vec<SquarefreeCluster>)> {
    assert!(!f.is_zero(), "squarefree_decompose of zero");
    let spec = f.spec();
    let (tpow, u) = f.dehom();
    let mut clusters: Vec<SquarefreeCluster> = Vec::new();
    if tpow > 0 {
        clusters.push(SquarefreeCluster {
            factor: HomogPoly::var_t(spec),
            multiplicity: tpow as u32,
        });
    }
    if udeg(&u) > 0 {
        // Yun's algorithm on the dehomogenization
        let fp = uderiv(spec, &u);
        let a = ugcd(spec, &u, &fp)?;
        let (mut b, _) = udivmod(spec, &u, &a)?;
        let (c0, _) = udivmod(spec, &fp, &a)?;
        let mut d = usub(&c0, &uderiv(spec, &b), spec);
        let mut i = 1u32;
        while udeg(&b) > 0 {
            let g = ugcd(spec, &b, &d)?;
            if udeg(&g) > 0 {
                let factor = HomogPoly::rehom(spec, 0, &g);
                clusters.push(SquarefreeCluster {
                    factor: content_normalize(&factor)?.1,
                    multiplicity: i,
                });
            }
            let (b2, _) = udivmod(spec, &b, &g)?;
            let (c2, _) = udivmod(spec, &d, &g)?;
            b = b2;
            d = usub(&c2, &uderiv(spec, &b), spec);
            i += 1;
        }
    }
    // unit = f / prod factor^mult, read off a matching nonzero coefficient
    let mut prod = HomogPoly::one(spec);
    for cl in &clusters {
        prod = prod.mul(&cl.factor.pow(cl.multiplicity));
    }
    let k = f.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let unit = f.coeff(k).mul(&prod.coeff(k).inv()?);
    debug_assert!(prod.scale(&unit) == *f, "squarefree round-trip failed");
    Ok((unit, clusters))
}

/// Split a squarefree `base` into pairwise coprime pieces on which the
/// vanishing order of `target` is uniform. A zero target gives a single
/// infinite-order piece.
pub fn order_split(base: &HomogPoly, target: &HomogPoly) -> Result<Vec<(HomogPoly, Order)>> {
    fn go(base: &HomogPoly, target: &HomogPoly, shift: u32) -> Result<Vec<(HomogPoly, Order)>> {
        if target.is_zero() {
            return Ok(vec![(base.clone(), Order::Infinite)]);
        }
        let g = hp_gcd(base, target)?;
        let mut out = Vec::new();
        if g.is_constant() {
            out.push((base.clone(), Order::Finite(shift)));
            return Ok(out);
        }
        let rest = base.div_exact(&g);
        if !rest.is_constant() {
            out.push((content_normalize(&rest)?.1, Order::Finite(shift)));
        }
        let deeper = go(&g, &target.div_exact(&g), shift + 1)?;
        out.extend(deeper);
        Ok(out)
    }
    assert!(!base.is_zero(), "order_split on zero base");
    go(base, target, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_homog;
    use crate::exactalg::FieldSpec;

    fn q() -> Field {
        FieldSpec::rationals()
    }

    fn p(s: &str) -> HomogPoly {
        parse_homog(s, &q()).unwrap()
    }

    #[test]
    fn gcd_shared_linear_factor() {
        let g = hp_gcd(&p("(s-t)*(s+t)"), &p("(s-t)^2")).unwrap();
        assert_eq!(g, p("s-t"));
    }

    #[test]
    fn gcd_coprime_monomials() {
        let g = hp_gcd(&p("s^3"), &p("t^4")).unwrap();
        assert!(g.is_constant() && !g.is_zero());
    }

    #[test]
    fn gcd_with_derivative_extracts_double_factor() {
        // (256 s^3 (s-t) + 27 t^4) = (4s-3t)^2 (16s^2+8st+3t^2)
        let f = p("256*s^3*(s-t)+27*t^4");
        assert_eq!(f, p("(4*s-3*t)^2*(16*s^2+8*s*t+3*t^2)"));
        let g = hp_gcd(&f, &f.derivative_s()).unwrap();
        assert_eq!(g, p("4*s-3*t"));
    }

    #[test]
    fn squarefree_with_t_power() {
        let (unit, cl) = squarefree_decompose(&p("t^10*(s^2-4*t^2)")).unwrap();
        assert!(unit.is_one());
        assert_eq!(cl.len(), 2);
        assert_eq!(cl[0].factor, p("t"));
        assert_eq!(cl[0].multiplicity, 10);
        assert_eq!(cl[1].factor, p("s^2-4*t^2"));
        assert_eq!(cl[1].multiplicity, 1);
    }

    #[test]
    fn squarefree_trivial_cases() {
        let (_, cl) = squarefree_decompose(&p("s-t")).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].multiplicity, 1);

        let (_, cl) = squarefree_decompose(&p("(s-t)^2*(s+t)^3")).unwrap();
        let got: Vec<(String, u32)> = cl
            .iter()
            .map(|c| (c.factor.to_string(), c.multiplicity))
            .collect();
        assert_eq!(got, vec![("s-t".into(), 2), ("s+t".into(), 3)]);
    }

    #[test]
    fn order_split_examples() {
        // base s*t against -3t^2(s^2-3t^2): s has order 0, t order 2
        let got = order_split(&p("s*t"), &p("-3*t^2*(s^2-3*t^2)")).unwrap();
        let mut view: Vec<(String, Order)> =
            got.iter().map(|(f, o)| (f.to_string(), *o)).collect();
        view.sort();
        assert_eq!(
            view,
            vec![
                ("s".to_string(), Order::Finite(0)),
                ("t".to_string(), Order::Finite(2))
            ]
        );

        let got = order_split(&p("s-t"), &HomogPoly::zero(&q())).unwrap();
        assert_eq!(got, vec![(p("s-t"), Order::Infinite)]);

        let got = order_split(&p("s*(s-t)*(s+t)"), &p("s^2*(s-t)^5")).unwrap();
        let mut view: Vec<(String, Order)> =
            got.iter().map(|(f, o)| (f.to_string(), *o)).collect();
        view.sort();
        assert_eq!(
            view,
            vec![
                ("s".to_string(), Order::Finite(2)),
                ("s+t".to_string(), Order::Finite(0)),
                ("s-t".to_string(), Order::Finite(5)),
            ]
        );
    }

    #[test]
    fn order_split_consistency() {
        let base = p("s*(s-t)*(s+2*t)");
        let target = p("s^3*(s-t)*(s+2*t)^4*(s-5*t)^2");
        for (f, o) in order_split(&base, &target).unwrap() {
            let k = o.finite().unwrap();
            assert!(f.pow(k).divides(&target));
            assert!(!f.pow(k + 1).divides(&target));
        }
    }

    #[test]
    fn content_normalization() {
        let (u, n) = content_normalize(&p("-6*s^2+12*s*t")).unwrap();
        assert_eq!(u.as_rational().unwrap(), crate::exactalg::rat_int(-6));
        assert_eq!(n, p("s^2-2*s*t"));

        let (u, n) = content_normalize(&p("s-t")).unwrap();
        assert!(u.is_one());
        assert_eq!(n, p("s-t"));

        let (u, n) = content_normalize(&p("2/3*t^4")).unwrap();
        assert_eq!(u.as_rational().unwrap(), crate::exactalg::rat(2, 3));
        assert_eq!(n, p("t^4"));
    }

    #[test]
    fn degree_additivity() {
        let f = p("s^2-3*t^2");
        let g = p("7*s^3+t^3");
        assert_eq!(f.mul(&g).degree(), f.degree() + g.degree());
    }

    #[test]
    fn subtraction_keeps_formal_degree_for_t_factors() {
        // s^4 - (s^4 - t^4): leading s-coefficients cancel, t divides nothing
        // here, but N - D of equal-degree maps may drop s-degree: the formal
        // degree stays, encoding preimages of infinity as t-factors.
        let f = p("s^4+s^3*t").sub(&p("s^4"));
        assert_eq!(f.degree(), 4);
        assert_eq!(f.t_order(), 1);
        assert_eq!(f.s_order(), 3);
    }
}
