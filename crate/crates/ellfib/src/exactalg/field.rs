//! Coefficient fields: Q and simple extensions Q[a]/(m(a)).
//!
//! Elements are polynomials in the generator with rational coefficients,
//! reduced modulo the (monic-normalized) modulus. The modulus is never
//! verified irreducible up front; a reducible one surfaces as
//! [`Error::ZeroDivisorInModulus`] the moment an inversion needs it, with the
//! offending factor as witness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The coefficient domain: Q, or a simple extension of Q.
#[derive(Debug)]
pub struct FieldSpec {
    /// Monic modulus, ascending coefficients; empty for Q.
    modulus: Vec<Rat>,
    /// The modulus as given (pre monic normalization), for display.
    display: String,
}

/// Shared handle to a [`FieldSpec`].
pub type Field = Arc<FieldSpec>;

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl FieldSpec {
    /// The rational field Q.
    pub fn rationals() -> Field {
        Arc::new(FieldSpec {
            modulus: Vec::new(),
            display: String::new(),
        })
    }

    /// Q[a]/(m): `modulus` ascending, degree >= 2, nonzero leading coefficient.
    /// The modulus is stored monic; `display` keeps the original text form.
    pub fn extension(modulus: Vec<Rat>, display: impl Into<String>) -> Result<Field> {
        let mut m = modulus;
        while m.last().map_or(false, |c| c.is_zero()) {
            m.pop();
        }
        if m.len() < 3 {
            return Err(Error::Parse(format!(
                "extension modulus must have degree >= 2, got degree {}",
                m.len().saturating_sub(1)
            )));
        }
        let lead = m.last().unwrap().clone();
        for c in &mut m {
            *c /= &lead;
        }
        Ok(Arc::new(FieldSpec {
            modulus: m,
            display: display.into(),
        }))
    }

    pub fn is_rationals(&self) -> bool {
        self.modulus.is_empty()
    }

    /// Dimension of the field over Q (1 for Q).
    pub fn ext_degree(&self) -> usize {
        if self.modulus.is_empty() {
            1
        } else {
            self.modulus.len() - 1
        }
    }

    /// Monic modulus coefficients (ascending); empty for Q.
    pub fn modulus(&self) -> &[Rat] {
        &self.modulus
    }

    pub fn modulus_display(&self) -> &str {
        &self.display
    }
}

/// An element of a [`FieldSpec`]: rational coefficients of powers of the
/// generator, trailing zeros trimmed (empty = zero).
#[derive(Debug, Clone, PartialEq)]
pub struct FieldElem {
    spec: Field,
    coeffs: Vec<Rat>,
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

impl FieldElem {
    pub fn zero(spec: &Field) -> Self {
        FieldElem {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &Field) -> Self {
        Self::from_rat(spec, Rat::one())
    }

    pub fn from_rat(spec: &Field, q: Rat) -> Self {
        FieldElem {
            spec: spec.clone(),
            coeffs: trim(vec![q]),
        }
    }

    pub fn from_int(spec: &Field, n: i64) -> Self {
        Self::from_rat(spec, rat_int(n))
    }

    /// The extension generator `a`.
    pub fn generator(spec: &Field) -> Result<Self> {
        if spec.is_rationals() {
            return Err(Error::Parse(
                "generator `a` used over the rational field".into(),
            ));
        }
        Ok(FieldElem {
            spec: spec.clone(),
            coeffs: vec![Rat::zero(), Rat::one()],
        })
    }

    /// Build from ascending coefficients, reducing modulo the modulus.
    pub fn from_coeffs(spec: &Field, coeffs: Vec<Rat>) -> Self {
        let mut e = FieldElem {
            spec: spec.clone(),
            coeffs,
        };
        e.reduce();
        e
    }

    pub fn spec(&self) -> &Field {
        &self.spec
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn reduce(&mut self) {
        let m = &self.spec.modulus;
        if !m.is_empty() {
            let n = m.len() - 1;
            while self.coeffs.len() > n {
                let k = self.coeffs.len() - 1;
                let c = self.coeffs.pop().unwrap();
                if !c.is_zero() {
                    for i in 0..n {
                        let delta = &c * &m[i];
                        self.coeffs[k - n + i] -= delta;
                    }
                }
            }
        }
        self.coeffs = trim(std::mem::take(&mut self.coeffs));
    }

    fn check_spec(&self, other: &Self) {
        assert!(
            self.spec == other.spec,
            "FieldElem operands from different fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_spec(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        FieldElem {
            spec: self.spec.clone(),
            coeffs: trim(out),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FieldElem {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_spec(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.spec);
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let mut e = FieldElem {
            spec: self.spec.clone(),
            coeffs: out,
        };
        e.reduce();
        e
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

    /// Multiplicative inverse. Over an extension this runs the extended
    /// Euclidean algorithm against the modulus; a nontrivial gcd is reported
    /// as [`Error::ZeroDivisorInModulus`] with the gcd as witness.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.spec.is_rationals() {
            return Ok(Self::from_rat(&self.spec, self.coeffs[0].recip()));
        }
        // extended euclid: r0 = modulus, r1 = self; track s with s*self = r (mod m)
        let mut r0 = self.spec.modulus.clone();
        let mut r1 = self.coeffs.clone();
        let mut s0: Vec<Rat> = Vec::new();
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, rem) = upoly_divmod(&r0, &r1);
            let s_next = upoly_sub(&s0, &upoly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_next;
        }
        if r0.len() != 1 {
            return Err(Error::ZeroDivisorInModulus {
                witness: upoly_display(&r0, "a"),
            });
        }
        let c = r0[0].recip();
        let coeffs = s0.into_iter().map(|x| x * &c).collect();
        Ok(FieldElem::from_coeffs(&self.spec, coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_field_elem(self))
    }
}

/// Render an element in the expression grammar (generator written `a`).
pub fn render_field_elem(e: &FieldElem) -> String {
    if e.is_zero() {
        return "0".into();
    }
    if let Some(q) = e.as_rational() {
        return render_rat(&q);
    }
    let mut terms = Vec::new();
    for (i, c) in e.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        };
        let t = if var.is_empty() {
            render_rat(c)
        } else if c.is_one() {
            var
        } else if (-c.clone()).is_one() {
            format!("-{var}")
        } else {
            format!("{}*{}", render_rat(c), var)
        };
        terms.push(t);
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

pub fn render_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// ---- univariate helpers over Q (ascending coefficients, trailing zeros trimmed) ----

fn upoly_trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn upoly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    upoly_trim(out)
}

fn upoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    upoly_trim(out)
}

fn upoly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), upoly_trim(rem));
    }
    let mut quot = vec![Rat::zero(); a.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while rem.len() >= b.len() && !rem.is_empty() {
        let c = rem.last().unwrap() / &lead;
        let d = rem.len() - b.len();
        quot[d] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = &c * bc;
            rem[d + i] -= delta;
        }
        rem = upoly_trim(rem);
    }
    (quot, rem)
}

pub(crate) fn upoly_display(p: &[Rat], var: &str) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let v = match i {
            0 => String::new(),
            1 => var.to_string(),
            k => format!("{var}^{k}"),
        };
        let t = if v.is_empty() {
            render_rat(c)
        } else if c.is_one() {
            v
        } else if (-c.clone()).is_one() {
            format!("-{v}")
        } else {
            format!("{}*{}", render_rat(c), v)
        };
        terms.push(t);
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

/// Exact square root of a rational, if it exists.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Exact n-th root of a rational, if it exists (n >= 1).
pub fn rat_nth_root(q: &Rat, n: u32) -> Option<Rat> {
    if q.is_negative() && n % 2 == 0 {
        return None;
    }
    let neg = q.is_negative();
    let qa = q.abs();
    let rn = qa.numer().nth_root(n);
    let rd = qa.denom().nth_root(n);
    if &rn.pow(n) == qa.numer() && &rd.pow(n) == qa.denom() {
        let r = Rat::new(rn, rd);
        Some(if neg { -r } else { r })
    } else {
        None
    }
}

/// Square root within the field, where decidable:
/// - over Q: exact rational square root;
/// - over quadratic extensions: closed form via the norm;
/// - over odd-degree extensions with a rational operand: rational root only
///   (an odd-degree field has no quadratic subfield).
/// Other cases return `None` (conservative; cannot arise from catalog data).
pub fn field_sqrt(x: &FieldElem) -> Option<FieldElem> {
    let spec = x.spec();
    if x.is_zero() {
        return Some(FieldElem::zero(spec));
    }
    if let Some(q) = x.as_rational() {
        if let Some(r) = rat_sqrt(&q) {
            return Some(FieldElem::from_rat(spec, r));
        }
        if spec.ext_degree() % 2 == 1 {
            return None;
        }
        if spec.ext_degree() != 2 {
            return None;
        }
        // fall through to the quadratic-field case with b = 0
    }
    if spec.ext_degree() != 2 {
        return None;
    }
    // generator a with a^2 = -m0 - m1 a; complete the square: w = a + m1/2,
    // w^2 = d := m1^2/4 - m0, so the field is Q(sqrt(d)).
    let m0 = &spec.modulus()[0];
    let m1 = &spec.modulus()[1];
    let d = m1 * m1 / rat_int(4) - m0;
    // x = p + q*a = (p - q*m1/2) + q*w =: e + f*w
    let mut cs = x.coeffs().to_vec();
    cs.resize(2, Rat::zero());
    let (p, q) = (cs[0].clone(), cs[1].clone());
    let e = &p - &q * m1 / rat_int(2);
    let f = q;
    // solve (u + v*w)^2 = e + f*w: u^2 + v^2 d = e, 2uv = f
    // u^2 = (e +- n)/2 where n = sqrt(e^2 - f^2 d)
    let n = rat_sqrt(&(&e * &e - &f * &f * &d))?;
    for sign in [Rat::one(), -Rat::one()] {
        let u2 = (&e + &sign * &n) / rat_int(2);
        if let Some(u) = rat_sqrt(&u2) {
            let v = if u.is_zero() {
                // pure sqrt(d)-part: v^2 d = e, f must be 0
                if !f.is_zero() {
                    continue;
                }
                match rat_sqrt(&(&e / &d)) {
                    Some(v) => v,
                    None => continue,
                }
            } else {
                &f / (rat_int(2) * &u)
            };
            // check v^2 d consistency
            if &u * &u + &v * &v * &d != e || rat_int(2) * &u * &v != f {
                continue;
            }
            // u + v*w = (u - v*m1/2)... w = a + m1/2 => element = (u + v*m1/2? ) careful:
            // u + v*w = u + v*(a + m1/2) = (u + v*m1/2) + v*a
            let c0 = &u + &v * m1 / rat_int(2);
            return Some(FieldElem::from_coeffs(spec, vec![c0, v]));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi() -> Field {
        FieldSpec::extension(vec![rat_int(1), rat_int(0), rat_int(1)], "a^2+1").unwrap()
    }

    #[test]
    fn invert_in_gaussian_field() {
        let k = qi();
        let x = FieldElem::from_coeffs(&k, vec![rat_int(1), rat_int(1)]); // 1+a
        let inv = x.inv().unwrap();
        // (1-a)/2
        assert_eq!(inv.coeffs(), &[rat(1, 2), rat(-1, 2)]);
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn invert_rational() {
        let q = FieldSpec::rationals();
        let x = FieldElem::from_rat(&q, rat(3, 7));
        assert_eq!(x.inv().unwrap().as_rational().unwrap(), rat(7, 3));
    }

    #[test]
    fn zero_divisor_witness() {
        // Q[a]/(a^2-1): a-1 is a zero divisor
        let k = FieldSpec::extension(vec![rat_int(-1), rat_int(0), rat_int(1)], "a^2-1").unwrap();
        let x = FieldElem::from_coeffs(&k, vec![rat_int(-1), rat_int(1)]);
        match x.inv() {
            Err(Error::ZeroDivisorInModulus { witness }) => {
                assert!(witness.contains('a'), "witness was {witness}");
            }
            other => panic!("expected ZeroDivisorInModulus, got {other:?}"),
        }
    }

    #[test]
    fn nonmonic_modulus_arithmetic() {
        // 5a^3+12a^2+12a+4 = 0
        let k = FieldSpec::extension(
            vec![rat_int(4), rat_int(12), rat_int(12), rat_int(5)],
            "5*a^3+12*a^2+12*a+4",
        )
        .unwrap();
        let a = FieldElem::generator(&k).unwrap();
        // 5a^3 = -12a^2-12a-4
        let lhs = a.pow(3).mul(&FieldElem::from_int(&k, 5));
        let rhs = FieldElem::from_coeffs(&k, vec![rat_int(-4), rat_int(-12), rat_int(-12)]);
        assert_eq!(lhs, rhs);
        let ainv = a.inv().unwrap();
        assert!(a.mul(&ainv).is_one());
    }

    #[test]
    fn sqrt_in_quadratic_field() {
        let k = qi();
        // sqrt(2a) = 1+a since (1+a)^2 = 2a
        let x = FieldElem::from_coeffs(&k, vec![rat_int(0), rat_int(2)]);
        let r = field_sqrt(&x).unwrap();
        assert_eq!(r.mul(&r), x);
        // -1 is a square (= a^2)
        let m1 = FieldElem::from_int(&k, -1);
        let r = field_sqrt(&m1).unwrap();
        assert_eq!(r.mul(&r), m1);
        // 2 is not a square in Q(i)
        assert!(field_sqrt(&FieldElem::from_int(&k, 2)).is_none());
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rat_sqrt(&rat(9, 4)).unwrap(), rat(3, 2));
        assert!(rat_sqrt(&rat_int(2)).is_none());
        assert_eq!(rat_nth_root(&rat_int(-8), 3).unwrap(), rat_int(-2));
        assert!(rat_nth_root(&rat_int(4), 4).is_none());
    }
}
