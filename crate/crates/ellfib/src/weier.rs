//! Weierstrass models y^2 = x^3 + A x + B over the function field of P^1:
//! discriminant, j-invariant, minimality, rescaling, quadratic twists and
//! model equivalence.

use crate::error::{Error, Result};
use crate::exactalg::{
    content_normalize, field_sqrt, hp_gcd, order_split, squarefree_decompose, Field,
    FieldElem, HomogPoly, Order, Rat,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The elliptic surface y^2 = x^3 + A x + B with deg A = 4M, deg B = 6M.
/// Delta = -16(4A^3+27B^2) is nonzero by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassModel {
    a: HomogPoly,
    b: HomogPoly,
    weight: u32,
}

/// The j-function -1728 (4A)^3 / Delta as a homogeneous pair.
#[derive(Debug, Clone)]
pub struct JInvariant {
    pub numerator: HomogPoly,
    pub denominator: HomogPoly,
    pub reduced: bool,
}

impl JInvariant {
    /// Equality as rational functions, by cross-multiplication; valid whether
    /// or not either side is reduced.
    pub fn eq_rational(&self, other: &JInvariant) -> bool {
        let lhs = self.numerator.mul(&other.denominator);
        let rhs = self.denominator.mul(&other.numerator);
        lhs == rhs
    }

    /// Compose with a self-map of the base: j -> j(n, d).
    pub fn compose(&self, n: &HomogPoly, d: &HomogPoly) -> Result<JInvariant> {
        Ok(JInvariant {
            numerator: self.numerator.substitute(n, d)?,
            denominator: self.denominator.substitute(n, d)?,
            reduced: false,
        })
    }
}

impl WeierstrassModel {
    /// Build a model from A and B; the weight M is read off the degrees.
    /// Fails with [`Error::DegenerateModel`] when Delta vanishes identically.
    pub fn new(a: HomogPoly, b: HomogPoly) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateModel);
        }
        if a.spec() != b.spec() {
            return Err(Error::FieldMismatch);
        }
        let weight = if !a.is_zero() {
            if a.degree() % 4 != 0 {
                return Err(Error::DegreeMismatch {
                    expected: 4 * (a.degree() / 4),
                    found: a.degree(),
                });
            }
            (a.degree() / 4) as u32
        } else {
            if b.degree() % 6 != 0 {
                return Err(Error::DegreeMismatch {
                    expected: 6 * (b.degree() / 6),
                    found: b.degree(),
                });
            }
            (b.degree() / 6) as u32
        };
        if !b.is_zero() && b.degree() != 6 * weight as usize {
            return Err(Error::DegreeMismatch {
                expected: 6 * weight as usize,
                found: b.degree(),
            });
        }
        if weight == 0 {
            return Err(Error::DegreeMismatch {
                expected: 4,
                found: 0,
            });
        }
        let m = WeierstrassModel { a, b, weight };
        if m.discriminant().is_zero() {
            return Err(Error::DegenerateModel);
        }
        Ok(m)
    }

    pub fn a(&self) -> &HomogPoly {
        &self.a
    }

    pub fn b(&self) -> &HomogPoly {
        &self.b
    }

    /// The weight M (deg A = 4M, deg B = 6M).
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn spec(&self) -> &Field {
        self.a.spec()
    }

    /// Delta = -16(4A^3 + 27B^2), homogeneous of degree 12M.
    pub fn discriminant(&self) -> HomogPoly {
        let spec = self.spec();
        if self.a.is_zero() {
            return self.b.pow(2).scale(&FieldElem::from_int(spec, -432));
        }
        if self.b.is_zero() {
            return self.a.pow(3).scale(&FieldElem::from_int(spec, -64));
        }
        let a3 = self.a.pow(3).scale(&FieldElem::from_int(spec, 4));
        let b2 = self.b.pow(2).scale(&FieldElem::from_int(spec, 27));
        a3.add(&b2).scale(&FieldElem::from_int(spec, -16))
    }

    /// j = -1728 (4A)^3 / Delta, reduced.
    pub fn j_invariant(&self) -> Result<JInvariant> {
        let spec = self.spec();
        let num = self
            .a
            .scale(&FieldElem::from_int(spec, 4))
            .pow(3)
            .scale(&FieldElem::from_int(spec, -1728));
        let den = self.discriminant();
        if num.is_zero() {
            return Ok(JInvariant {
                numerator: HomogPoly::zero(spec),
                denominator: HomogPoly::one(spec),
                reduced: true,
            });
        }
        let g = hp_gcd(&num, &den)?;
        Ok(JInvariant {
            numerator: num.div_exact(&g),
            denominator: den.div_exact(&g),
            reduced: true,
        })
    }

    /// Squarefree multiple of every common factor of A and B.
    pub(crate) fn common_factor_candidate(&self) -> Result<HomogPoly> {
        let spec = self.spec();
        let common = if self.a.is_zero() {
            self.b.clone()
        } else if self.b.is_zero() {
            self.a.clone()
        } else {
            hp_gcd(&self.a, &self.b)?
        };
        if common.is_constant() {
            return Ok(HomogPoly::one(spec));
        }
        let (_, clusters) = squarefree_decompose(&common)?;
        let mut out = HomogPoly::one(spec);
        for cl in clusters {
            out = out.mul(&cl.factor);
        }
        Ok(out)
    }

    /// Strip the largest f with f^4 | A and f^6 | B. Returns the minimal
    /// model and the removed polynomial.
    pub fn minimalize(&self) -> Result<(WeierstrassModel, HomogPoly)> {
        let candidate = self.common_factor_candidate()?;
        self.minimalize_within(&candidate)
    }

    /// Minimalize restricted to the squarefree `candidate`, which must be
    /// divisible by every common irreducible factor of A and B.
    pub(crate) fn minimalize_within(
        &self,
        candidate: &HomogPoly,
    ) -> Result<(WeierstrassModel, HomogPoly)> {
        let spec = self.spec();
        let mut removed = HomogPoly::one(spec);
        if !candidate.is_constant() {
            for (f2, va) in order_split(candidate, &self.a)? {
                for (f3, vb) in order_split(&f2, &self.b)? {
                    let k = match (va, vb) {
                        (Order::Infinite, Order::Infinite) => unreachable!("A = B = 0"),
                        (Order::Infinite, Order::Finite(b)) => b / 6,
                        (Order::Finite(a), Order::Infinite) => a / 4,
                        (Order::Finite(a), Order::Finite(b)) => (a / 4).min(b / 6),
                    };
                    if k > 0 {
                        removed = removed.mul(&f3.pow(k));
                    }
                }
            }
        }
        if removed.is_constant() {
            return Ok((self.clone(), removed));
        }
        removed = content_normalize(&removed)?.1;
        if removed.degree() as u32 >= self.weight {
            return Err(Error::WeightUnderflow);
        }
        let a = if self.a.is_zero() {
            self.a.clone()
        } else {
            self.a.div_exact(&removed.pow(4))
        };
        let b = if self.b.is_zero() {
            self.b.clone()
        } else {
            self.b.div_exact(&removed.pow(6))
        };
        Ok((WeierstrassModel::new(a, b)?, removed))
    }

    pub fn is_minimal(&self) -> Result<bool> {
        Ok(self.minimalize()?.1.is_constant())
    }

    /// Quadratic twist by a squarefree alpha: (A, B) -> (alpha^2 A, alpha^3 B)
    /// followed by minimalization.
    pub fn quadratic_twist(&self, alpha: &HomogPoly) -> Result<WeierstrassModel> {
        if alpha.is_zero() {
            return Err(Error::NonSquarefreeTwist);
        }
        if !alpha.is_constant() {
            let (_, clusters) = squarefree_decompose(alpha)?;
            if clusters.iter().any(|c| c.multiplicity > 1) {
                return Err(Error::NonSquarefreeTwist);
            }
        }
        if alpha.degree() % 2 != 0 {
            return Err(Error::OddTwistImbalance);
        }
        let a = self.a.mul(&alpha.pow(2));
        let b = self.b.mul(&alpha.pow(3));
        let raw = WeierstrassModel {
            a,
            b,
            weight: self.weight + (alpha.degree() / 2) as u32,
        };
        // common factors of the twisted pair lie over alpha or over common
        // zeros of the original pair; keep the candidate squarefree
        let mut candidate = self.common_factor_candidate()?;
        if !alpha.is_constant() {
            let g = hp_gcd(alpha, &candidate)?;
            let extra = alpha.div_exact(&g);
            if !extra.is_constant() {
                candidate = content_normalize(&candidate.mul(&extra))?.1;
            }
        }
        Ok(raw.minimalize_within(&candidate)?.0)
    }

    /// (A, B) -> (u^4 A, u^6 B); same weight, same Delta up to u^12.
    pub fn rescale(&self, u: &FieldElem) -> Result<WeierstrassModel> {
        if u.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(WeierstrassModel {
            a: self.a.scale(&u.pow(4)),
            b: self.b.scale(&u.pow(6)),
            weight: self.weight,
        })
    }

    /// Over Q: the unique rescale by positive rational u making the
    /// coefficients integral with no prime p such that p^4 | content(A) and
    /// p^6 | content(B) simultaneously. Over extensions the model is
    /// returned unchanged.
    pub fn canonical_rescaled(&self) -> Result<WeierstrassModel> {
        let spec = self.spec();
        if !spec.is_rationals() {
            return Ok(self.clone());
        }
        let content = |p: &HomogPoly| -> Option<Rat> {
            if p.is_zero() {
                return None;
            }
            let mut num = num_bigint::BigInt::zero();
            let mut den = num_bigint::BigInt::one();
            for c in p.coeffs() {
                let q = c.as_rational().unwrap();
                if !q.is_zero() {
                    num = num.gcd(q.numer());
                    den = den.lcm(q.denom());
                }
            }
            Some(Rat::new(num, den))
        };
        let ca = content(&self.a);
        let cb = content(&self.b);
        // factor the contents and pick exponents e(p) = max(ceil(-a/4), ceil(-b/6))
        // equivalently the minimal e with 4e+a >= 0, 6e+b >= 0 and not both
        // 4e+a >= 4 and 6e+b >= 6.
        let mut primes = std::collections::BTreeSet::new();
        let mut collect = |q: &Rat| {
            for part in [q.numer().clone(), q.denom().clone()] {
                let mut n = part.abs();
                let mut p = num_bigint::BigInt::from(2);
                while &p * &p <= n {
                    if (&n % &p).is_zero() {
                        primes.insert(p.clone());
                        while (&n % &p).is_zero() {
                            n /= &p;
                        }
                    }
                    p += 1;
                }
                if n > num_bigint::BigInt::one() {
                    primes.insert(n);
                }
            }
        };
        if let Some(q) = &ca {
            collect(q);
        }
        if let Some(q) = &cb {
            collect(q);
        }
        let vp = |q: &Option<Rat>, p: &num_bigint::BigInt| -> i64 {
            match q {
                None => i64::MAX / 4,
                Some(q) => {
                    let mut v: i64 = 0;
                    let mut n = q.numer().abs();
                    while (&n % p).is_zero() {
                        v += 1;
                        n /= p;
                    }
                    let mut d = q.denom().clone();
                    while (&d % p).is_zero() {
                        v -= 1;
                        d /= p;
                    }
                    v
                }
            }
        };
        let mut u = Rat::one();
        for p in &primes {
            let a = vp(&ca, p);
            let b = vp(&cb, p);
            let div_ceil = |x: i64, y: i64| -> i64 { (x + y - 1).div_euclid(y) };
            // minimal e with 4e+a >= 0 and 6e+b >= 0; minimality is exactly
            // the no-shared-p^4/p^6 condition
            let e = div_ceil(-a, 4).max(div_ceil(-b, 6));
            let pr = Rat::from_integer(p.clone());
            if e > 0 {
                for _ in 0..e {
                    u *= &pr;
                }
            } else {
                for _ in 0..(-e) {
                    u /= &pr;
                }
            }
        }
        self.rescale(&FieldElem::from_rat(spec, u))
    }

    /// Euler number e = deg Delta = 12M; requires a minimal model.
    /// The surface is K3 iff this is 24 and rational iff it is 12.
    pub fn euler_number(&self) -> Result<u32> {
        if !self.is_minimal()? {
            return Err(Error::NotMinimal);
        }
        Ok(12 * self.weight)
    }
}

/// True iff m2 = (u^4 A1, u^6 B1) for some u in the coefficient field.
/// Both models must share a field and a weight.
pub fn models_equivalent(m1: &WeierstrassModel, m2: &WeierstrassModel) -> bool {
    if m1.spec() != m2.spec() || m1.weight != m2.weight {
        return false;
    }
    let ratio = |f: &HomogPoly, g: &HomogPoly| -> Option<Option<FieldElem>> {
        // Some(None) = both zero; Some(Some(lam)) = g = lam*f; None = no ratio
        if f.is_zero() && g.is_zero() {
            return Some(None);
        }
        if f.is_zero() || g.is_zero() || f.degree() != g.degree() {
            return None;
        }
        let mut lam: Option<FieldElem> = None;
        for (a, b) in f.coeffs().iter().zip(g.coeffs()) {
            if a.is_zero() != b.is_zero() {
                return None;
            }
            if !a.is_zero() {
                let r = match b.div(a) {
                    Ok(r) => r,
                    Err(_) => return None,
                };
                match &lam {
                    None => lam = Some(r),
                    Some(l) => {
                        if *l != r {
                            return None;
                        }
                    }
                }
            }
        }
        Some(lam)
    };
    let la = match ratio(&m1.a, &m2.a) {
        Some(x) => x,
        None => return false,
    };
    let lb = match ratio(&m1.b, &m2.b) {
        Some(x) => x,
        None => return false,
    };
    match (la, lb) {
        (None, None) => true,
        (None, Some(lb)) => {
            // need u with u^6 = lb
            sixth_power_exists(&lb)
        }
        (Some(la), None) => fourth_power_exists(&la),
        (Some(la), Some(lb)) => {
            let mu = match lb.div(&la) {
                Ok(m) => m,
                Err(_) => return false,
            };
            if mu.mul(&mu) != la || mu.mul(&mu).mul(&mu) != lb {
                return false;
            }
            field_sqrt(&mu).is_some()
        }
    }
}

fn fourth_power_exists(x: &FieldElem) -> bool {
    if let Some(q) = x.as_rational() {
        if crate::exactalg::rat_nth_root(&q, 4).is_some() {
            return true;
        }
    }
    // u^4 = x <=> u^2 = sqrt(x) for one of the square roots
    match field_sqrt(x) {
        Some(r) => field_sqrt(&r).is_some() || field_sqrt(&r.neg()).is_some(),
        None => false,
    }
}

fn sixth_power_exists(x: &FieldElem) -> bool {
    if let Some(q) = x.as_rational() {
        if crate::exactalg::rat_nth_root(&q, 6).is_some() {
            return true;
        }
        if x.spec().is_rationals() {
            return false;
        }
    }
    // u^6 = x: u^2 = w with w^3 = x; only the rational-cube-root route is
    // attempted here, which covers every catalog use.
    if let Some(q) = x.as_rational() {
        if let Some(c) = crate::exactalg::rat_nth_root(&q, 3) {
            return field_sqrt(&FieldElem::from_rat(x.spec(), c)).is_some();
        }
    }
    false
}

/// Raw substitution of a degree-1 or higher pair into (A, B) without
/// minimalizing; building block for pullback and tests.
pub fn raw_substitute(
    m: &WeierstrassModel,
    n: &HomogPoly,
    d: &HomogPoly,
) -> Result<WeierstrassModel> {
    let a = m.a().substitute(n, d)?;
    let b = m.b().substitute(n, d)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateModel);
    }
    let deg = n.degree().max(d.degree()) as u32;
    Ok(WeierstrassModel {
        a,
        b,
        weight: m.weight() * deg,
    })
}

#[cfg(test)]
pub(crate) fn model_from_parts(a: HomogPoly, b: HomogPoly, weight: u32) -> WeierstrassModel {
    WeierstrassModel { a, b, weight }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_homog, rat, FieldSpec};

    fn q() -> Field {
        FieldSpec::rationals()
    }

    fn p(s: &str) -> HomogPoly {
        parse_homog(s, &q()).unwrap()
    }

    fn x411() -> WeierstrassModel {
        WeierstrassModel::new(p("-3*t^2*(s^2-3*t^2)"), p("s*t^3*(2*s^2-9*t^2)")).unwrap()
    }

    #[test]
    fn discriminant_of_x411() {
        let delta = x411().discriminant();
        assert_eq!(delta, p("11664*t^10*(s-2*t)*(s+2*t)"));
    }

    #[test]
    fn discriminant_with_a_zero() {
        let m = WeierstrassModel::new(HomogPoly::zero(&q()), p("s^6-t^6")).unwrap();
        assert_eq!(m.discriminant(), p("-432*(s^6-t^6)^2"));
        assert_eq!(m.euler_number().unwrap(), 12);
    }

    #[test]
    fn degenerate_model_rejected() {
        // 4A^3 + 27B^2 = 0 for A = -3c^2, B = 2c^3 with c = s^2
        let a = p("-3*s^4");
        let b = p("2*s^6");
        assert_eq!(WeierstrassModel::new(a, b), Err(Error::DegenerateModel));
    }

    #[test]
    fn j_invariant_families() {
        let m = WeierstrassModel::new(HomogPoly::zero(&q()), p("s^6-t^6")).unwrap();
        let j = m.j_invariant().unwrap();
        assert!(j.numerator.is_zero());

        let m = WeierstrassModel::new(p("s^4+t^4"), HomogPoly::zero(&q())).unwrap();
        let j = m.j_invariant().unwrap();
        // j = 1728 exactly: numerator = 1728 * denominator
        assert_eq!(
            j.numerator,
            j.denominator.scale(&FieldElem::from_int(&q(), 1728))
        );
    }

    #[test]
    fn j_invariant_x411_pole_orders() {
        let j = x411().j_invariant().unwrap();
        assert!(j.reduced);
        // after cancelling t^6 the pole at t has order 4 (the I4* fiber) and
        // the two I1 cusps contribute simple poles: degrees 6 over 6
        assert_eq!(j.numerator.degree(), 6);
        assert_eq!(j.denominator.degree(), 6);
        assert_eq!(j.denominator.t_order(), 4);
        assert!(p("s-2*t").divides(&j.denominator));
        assert!(p("s+2*t").divides(&j.denominator));
    }

    #[test]
    fn minimalize_strips_constructed_power() {
        let a0 = p("-3*t^2*(s^2-3*t^2)");
        let b0 = p("s*t^3*(2*s^2-9*t^2)");
        let raw = model_from_parts(a0.mul(&p("s^4")), b0.mul(&p("s^6")), 2);
        let (min, removed) = raw.minimalize().unwrap();
        assert_eq!(removed, p("s"));
        assert_eq!(min.weight(), 1);
        assert_eq!(min.a(), &a0);
        // idempotent
        let (again, r2) = min.minimalize().unwrap();
        assert!(r2.is_constant());
        assert_eq!(again, min);
    }

    #[test]
    fn minimalize_noop_for_squarefree_pair() {
        let m = x411();
        let (min, removed) = m.minimalize().unwrap();
        assert!(removed.is_constant());
        assert_eq!(min, m);
    }

    #[test]
    fn twist_by_one_is_identity() {
        let m = x411();
        let t = m.quadratic_twist(&HomogPoly::one(&q())).unwrap();
        assert_eq!(t, m);
    }

    #[test]
    fn double_twist_returns_to_start() {
        let m = x411();
        let alpha = p("(s-t)*(s+5*t)");
        let once = m.quadratic_twist(&alpha).unwrap();
        let twice = once.quadratic_twist(&alpha).unwrap();
        assert!(models_equivalent(&m, &twice));
        assert_eq!(m, twice);
    }

    #[test]
    fn twist_rejects_repeated_factor_and_odd_degree() {
        let m = x411();
        assert_eq!(
            m.quadratic_twist(&p("(s-t)^2")),
            Err(Error::NonSquarefreeTwist)
        );
        assert_eq!(m.quadratic_twist(&p("s-t")), Err(Error::OddTwistImbalance));
    }

    #[test]
    fn rescale_and_equivalence() {
        let m = x411();
        let two = FieldElem::from_int(&q(), 2);
        let r = m.rescale(&two).unwrap();
        assert_eq!(r.a(), &m.a().scale(&FieldElem::from_int(&q(), 16)));
        assert_eq!(r.b(), &m.b().scale(&FieldElem::from_int(&q(), 64)));
        assert!(models_equivalent(&m, &r));

        // (4A, 8B): u^4 = 4 has no rational solution
        let fake = model_from_parts(
            m.a().scale(&FieldElem::from_int(&q(), 4)),
            m.b().scale(&FieldElem::from_int(&q(), 8)),
            m.weight(),
        );
        assert!(!models_equivalent(&m, &fake));

        // (A, -B): never equivalent over Q for B != 0
        let neg = model_from_parts(m.a().clone(), m.b().neg(), m.weight());
        assert!(!models_equivalent(&m, &neg));
    }

    #[test]
    fn j_invariant_stable_under_rescale_and_twist() {
        let m = x411();
        let j0 = m.j_invariant().unwrap();
        let r = m
            .rescale(&FieldElem::from_rat(&q(), rat(3, 7)))
            .unwrap();
        assert!(j0.eq_rational(&r.j_invariant().unwrap()));
        let tw = m.quadratic_twist(&p("(s-t)*(s+t)")).unwrap();
        assert!(j0.eq_rational(&tw.j_invariant().unwrap()));
    }

    #[test]
    fn canonical_rescale_strips_contents() {
        let m = x411();
        // scale up by u = 1/6 -> contents pick up 6^4, 6^6
        let ugly = m
            .rescale(&FieldElem::from_rat(&q(), rat(1, 6)))
            .unwrap();
        let canon = ugly.canonical_rescaled().unwrap();
        assert_eq!(canon, m);
    }

    #[test]
    fn euler_number_requires_minimal() {
        let m = x411();
        assert_eq!(m.euler_number().unwrap(), 12);
        let raw = model_from_parts(m.a().mul(&p("s^4")), m.b().mul(&p("s^6")), 2);
        assert_eq!(raw.euler_number(), Err(Error::NotMinimal));
    }
}
