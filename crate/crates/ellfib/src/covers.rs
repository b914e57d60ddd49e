//! Rational self-maps of the projective line: ramification analysis, Hurwitz
//! checks, Moebius normalization, and base-change pullback of Weierstrass
//! models.

use crate::error::{Error, Result};
use crate::exactalg::{
    content_normalize, hp_gcd, squarefree_decompose, Field, FieldElem, HomogPoly,
};
use crate::fibers::{classify_fibers, FiberCluster};
use crate::weier::{raw_substitute, WeierstrassModel};

/// A degree-d self-map of P^1 as a coprime homogeneous pair (N : D) of one
/// formal degree d. A vanishing leading s-coefficient encodes preimages at
/// infinity through the t-factor convention.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMap {
    numerator: HomogPoly,
    denominator: HomogPoly,
    degree: u32,
}

/// A point of P^1 over the coefficient field, as a pair (a : b).
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint {
    pub a: FieldElem,
    pub b: FieldElem,
}

impl ProjPoint {
    pub fn new(a: FieldElem, b: FieldElem) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegeneratePoints);
        }
        Ok(ProjPoint { a, b })
    }

    pub fn zero(spec: &Field) -> Self {
        ProjPoint {
            a: FieldElem::zero(spec),
            b: FieldElem::one(spec),
        }
    }

    pub fn one(spec: &Field) -> Self {
        ProjPoint {
            a: FieldElem::one(spec),
            b: FieldElem::one(spec),
        }
    }

    pub fn infinity(spec: &Field) -> Self {
        ProjPoint {
            a: FieldElem::one(spec),
            b: FieldElem::zero(spec),
        }
    }

    pub fn same_point(&self, other: &ProjPoint) -> bool {
        // (a:b) == (c:d) iff ad - bc = 0
        self.a.mul(&other.b).sub(&self.b.mul(&other.a)).is_zero()
    }
}

/// Ramification data of a map over one point: the multiset of indices of its
/// preimages, plus the coprime clusters carrying them.
#[derive(Debug, Clone)]
pub struct RamificationProfile {
    pub point: ProjPoint,
    /// Indices repeated per geometric preimage, descending.
    pub indices: Vec<u32>,
    /// (cluster place, multiplicity) pairs; each cluster contributes
    /// deg(place) preimages of that index.
    pub clusters: Vec<(HomogPoly, u32)>,
}

impl RationalMap {
    pub fn new(numerator: HomogPoly, denominator: HomogPoly) -> Result<Self> {
        if numerator.is_zero() || denominator.is_zero() {
            return Err(Error::Parse("map components must be nonzero".into()));
        }
        if numerator.spec() != denominator.spec() {
            return Err(Error::FieldMismatch);
        }
        if numerator.degree() != denominator.degree() {
            return Err(Error::DegreeMismatch {
                expected: numerator.degree(),
                found: denominator.degree(),
            });
        }
        let g = hp_gcd(&numerator, &denominator)?;
        let (n, d) = if g.is_constant() {
            (numerator, denominator)
        } else {
            (numerator.div_exact(&g), denominator.div_exact(&g))
        };
        let degree = n.degree() as u32;
        if degree == 0 {
            return Err(Error::Parse("constant map".into()));
        }
        Ok(RationalMap {
            numerator: n,
            denominator: d,
            degree,
        })
    }

    pub fn identity(spec: &Field) -> Self {
        RationalMap {
            numerator: HomogPoly::var_s(spec),
            denominator: HomogPoly::var_t(spec),
            degree: 1,
        }
    }

    pub fn numerator(&self) -> &HomogPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &HomogPoly {
        &self.denominator
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn spec(&self) -> &Field {
        self.numerator.spec()
    }

    /// The fiber polynomial over (a : b): b*N - a*D, whose roots are the
    /// preimages; for (1 : 0) this is D up to sign.
    pub fn fiber_polynomial(&self, point: &ProjPoint) -> HomogPoly {
        self.numerator
            .scale(&point.b)
            .sub(&self.denominator.scale(&point.a))
    }

    /// Apply the map to a point.
    pub fn apply(&self, point: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::new(
            self.numerator.eval_point(&point.a, &point.b),
            self.denominator.eval_point(&point.a, &point.b),
        )
    }

    /// N_s D_t - N_t D_s, of formal degree 2d-2; its zeros are the
    /// ramification points.
    pub fn wronskian(&self) -> HomogPoly {
        self.numerator
            .derivative_s()
            .mul(&self.denominator.derivative_t())
            .sub(
                &self
                    .numerator
                    .derivative_t()
                    .mul(&self.denominator.derivative_s()),
            )
    }
}

/// The ramification profile of `map` over `point`.
pub fn ramification_profile(map: &RationalMap, point: &ProjPoint) -> Result<RamificationProfile> {
    let fiber = map.fiber_polynomial(point);
    let (_, clusters) = squarefree_decompose(&fiber)?;
    let mut indices = Vec::new();
    let mut pairs = Vec::new();
    for cl in clusters {
        for _ in 0..cl.factor.degree() {
            indices.push(cl.multiplicity);
        }
        pairs.push((cl.factor, cl.multiplicity));
    }
    indices.sort_unstable_by(|x, y| y.cmp(x));
    Ok(RamificationProfile {
        point: point.clone(),
        indices,
        clusters: pairs,
    })
}

/// Verify that the total ramification over the given points is 2d - 2 and
/// that the map is unramified everywhere else (the Wronskian vanishes only
/// over the given points).
pub fn riemann_hurwitz_verify(map: &RationalMap, points: &[ProjPoint]) -> Result<bool> {
    let d = map.degree();
    let mut total: i64 = 0;
    let mut product = HomogPoly::one(map.spec());
    for pt in points {
        let prof = ramification_profile(map, pt)?;
        total += prof.indices.iter().map(|&e| e as i64 - 1).sum::<i64>();
        product = product.mul(&map.fiber_polynomial(pt));
    }
    if total != 2 * d as i64 - 2 {
        return Ok(false);
    }
    let w = map.wronskian();
    if w.is_zero() {
        return Ok(false);
    }
    // squarefree part of W must divide the product of the named fibers
    let (_, wcl) = squarefree_decompose(&w)?;
    let mut w_red = HomogPoly::one(map.spec());
    for cl in wcl {
        w_red = w_red.mul(&cl.factor);
    }
    Ok(w_red.divides(&product))
}

/// Necessary Hurwitz-formula condition for a degree-d cover with the given
/// ramification profiles (each a multiset of indices summing to d):
/// sum over profiles of (d - #preimages) <= 2d - 2.
pub fn hurwitz_feasible(degree: u32, profiles: &[Vec<u32>]) -> bool {
    let d = degree as i64;
    let mut total = 0i64;
    for p in profiles {
        debug_assert_eq!(p.iter().sum::<u32>() as i64, d, "profile must sum to degree");
        total += d - p.len() as i64;
    }
    total <= 2 * d - 2
}

/// Pull back a minimal model along a base change: substitute (N, D) into
/// (A, B), then minimalize. Any common factor of the substituted pair lies
/// over a common zero of (A, B), so the minimalization search is restricted
/// to the substituted common-factor candidate.
pub fn pullback(m: &WeierstrassModel, map: &RationalMap) -> Result<WeierstrassModel> {
    if m.spec() != map.spec() {
        return Err(Error::FieldMismatch);
    }
    let raw = raw_substitute(m, &map.numerator, &map.denominator)?;
    let base_common = m.common_factor_candidate()?;
    if base_common.is_constant() {
        return Ok(raw);
    }
    let substituted = base_common.substitute(&map.numerator, &map.denominator)?;
    let (_, clusters) = squarefree_decompose(&substituted)?;
    let mut candidate = HomogPoly::one(m.spec());
    for cl in clusters {
        candidate = candidate.mul(&cl.factor);
    }
    Ok(raw.minimalize_within(&candidate)?.0)
}

/// The degree-1 map g with g(0) = p, g(1) = q, g(inf) = r: the coordinate
/// change that puts p, q, r at 0, 1, infinity when substituted into a model.
pub fn mobius_from_three_points(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Result<RationalMap> {
    if p.same_point(q) || p.same_point(r) || q.same_point(r) {
        return Err(Error::DegeneratePoints);
    }
    // columns: g(s:t) = (a s + b t : c s + d t) with (b, d) ~ p, (a, c) ~ r,
    // and lambda*(a, c) + mu*(b, d) ~ q solved exactly.
    let det = r.a.mul(&p.b).sub(&r.b.mul(&p.a));
    let det_inv = det.inv().map_err(|_| Error::DegeneratePoints)?;
    let lam = q.a.mul(&p.b).sub(&q.b.mul(&p.a)).mul(&det_inv);
    let mu = r.a.mul(&q.b).sub(&r.b.mul(&q.a)).mul(&det_inv);
    let a = lam.mul(&r.a);
    let c = lam.mul(&r.b);
    let b = mu.mul(&p.a);
    let d = mu.mul(&p.b);
    let spec = p.a.spec();
    let n = HomogPoly::from_coeffs(spec, vec![b, a]);
    let dd = HomogPoly::from_coeffs(spec, vec![d, c]);
    RationalMap::new(n, dd)
}

/// outer after inner: x -> outer(inner(x)). Degrees multiply.
pub fn compose(outer: &RationalMap, inner: &RationalMap) -> Result<RationalMap> {
    if outer.spec() != inner.spec() {
        return Err(Error::FieldMismatch);
    }
    let n = outer
        .numerator
        .substitute(&inner.numerator, &inner.denominator)?;
    let d = outer
        .denominator
        .substitute(&inner.numerator, &inner.denominator)?;
    RationalMap::new(n, d)
}

/// Move the * from one fiber to another by twisting with the product of the
/// two places: I_n <-> I_n*, II <-> IV*, III <-> III*, IV <-> II*,
/// smooth <-> I_0*.
pub fn transfer_star(
    m: &WeierstrassModel,
    from_place: &HomogPoly,
    to_place: &HomogPoly,
) -> Result<WeierstrassModel> {
    let clusters = classify_fibers(m)?;
    let carries_star = |place: &HomogPoly, cl: &[FiberCluster]| {
        cl.iter()
            .any(|c| c.ktype.is_starred() && place.divides(&c.place))
    };
    if !carries_star(from_place, &clusters) {
        return Err(Error::NotStarred);
    }
    let g = hp_gcd(from_place, to_place)?;
    if !g.is_constant() {
        return Err(Error::NonSquarefreeTwist);
    }
    let alpha = content_normalize(&from_place.mul(to_place))?.1;
    m.quadratic_twist(&alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_homog, FieldSpec};
    use crate::fibers::configuration;
    use crate::weier::models_equivalent;

    fn q() -> Field {
        FieldSpec::rationals()
    }

    fn p(s: &str) -> HomogPoly {
        parse_homog(s, &q()).unwrap()
    }

    fn pi4() -> RationalMap {
        RationalMap::new(p("256*s^3*(s-t)"), p("-27*t^4")).unwrap()
    }

    fn pi2() -> RationalMap {
        RationalMap::new(p("64*s^3*(s-t)"), p("(8*s^2-4*s*t-t^2)^2")).unwrap()
    }

    fn pt(a: i64, b: i64) -> ProjPoint {
        ProjPoint::new(FieldElem::from_int(&q(), a), FieldElem::from_int(&q(), b)).unwrap()
    }

    fn x411() -> WeierstrassModel {
        WeierstrassModel::new(p("-3*t^2*(s^2-3*t^2)"), p("s*t^3*(2*s^2-9*t^2)")).unwrap()
    }

    #[test]
    fn pi4_profiles() {
        let m = pi4();
        assert_eq!(
            ramification_profile(&m, &ProjPoint::infinity(&q()))
                .unwrap()
                .indices,
            vec![4]
        );
        assert_eq!(
            ramification_profile(&m, &ProjPoint::zero(&q())).unwrap().indices,
            vec![3, 1]
        );
        let prof = ramification_profile(&m, &ProjPoint::one(&q())).unwrap();
        assert_eq!(prof.indices, vec![2, 1, 1]);
        // the double point is the zero of 4s-3t; the simple pair is conjugate
        assert!(prof
            .clusters
            .iter()
            .any(|(f, m)| *m == 2 && f == &p("4*s-3*t")));
    }

    #[test]
    fn riemann_hurwitz_checks() {
        let zero_one_inf = [
            ProjPoint::zero(&q()),
            ProjPoint::one(&q()),
            ProjPoint::infinity(&q()),
        ];
        assert!(riemann_hurwitz_verify(&pi4(), &zero_one_inf).unwrap());
        assert!(riemann_hurwitz_verify(&pi2(), &zero_one_inf).unwrap());
        assert!(riemann_hurwitz_verify(&RationalMap::identity(&q()), &zero_one_inf).unwrap());
        // pi4 ramifies over 1, so {0, inf} alone fails
        let zero_inf = [ProjPoint::zero(&q()), ProjPoint::infinity(&q())];
        assert!(!riemann_hurwitz_verify(&pi4(), &zero_inf).unwrap());
        assert_eq!(pi4().wronskian().degree(), 6);
    }

    #[test]
    fn hurwitz_feasibility() {
        // degree 12, W = II case: (12) plus two six-preimage cusps
        assert!(!hurwitz_feasible(
            12,
            &[vec![12], vec![7, 1, 1, 1, 1, 1], vec![7, 1, 1, 1, 1, 1]]
        ));
        // degree 8, W = III case: (4,4) plus six preimages over two cusps
        assert!(!hurwitz_feasible(
            8,
            &[vec![4, 4], vec![5, 1, 1, 1], vec![6, 1, 1]]
        ));
        // the existing pi4
        assert!(hurwitz_feasible(4, &[vec![4], vec![3, 1], vec![2, 1, 1]]));
    }

    #[test]
    fn pullback_along_identity_is_equivalent() {
        let m = x411();
        let back = pullback(&m, &RationalMap::identity(&q())).unwrap();
        assert!(models_equivalent(&m, &back));
    }

    #[test]
    fn mobius_interpolation() {
        // (-2, 2, inf) -> the substitution (4s-2t : t)
        let g = mobius_from_three_points(&pt(-2, 1), &pt(2, 1), &ProjPoint::infinity(&q())).unwrap();
        let expect = RationalMap::new(p("4*s-2*t"), p("t")).unwrap();
        // maps agree projectively: cross-multiplied components proportional
        assert_eq!(
            g.numerator().mul(expect.denominator()),
            g.denominator().mul(expect.numerator())
        );

        let id = mobius_from_three_points(
            &ProjPoint::zero(&q()),
            &ProjPoint::one(&q()),
            &ProjPoint::infinity(&q()),
        )
        .unwrap();
        assert_eq!(
            id.numerator().mul(&p("t")),
            id.denominator().mul(&p("s"))
        );

        // exchange of 0 and 1 fixing infinity: (t-s : t)
        let phi = mobius_from_three_points(
            &ProjPoint::one(&q()),
            &ProjPoint::zero(&q()),
            &ProjPoint::infinity(&q()),
        )
        .unwrap();
        let expect = RationalMap::new(p("t-s"), p("t")).unwrap();
        assert_eq!(
            phi.numerator().mul(expect.denominator()),
            phi.denominator().mul(expect.numerator())
        );

        assert_eq!(
            mobius_from_three_points(&pt(1, 1), &pt(1, 1), &pt(0, 1)),
            Err(Error::DegeneratePoints)
        );
    }

    #[test]
    fn composition() {
        let id = RationalMap::identity(&q());
        let c = compose(&id, &pi4()).unwrap();
        assert_eq!(c, pi4());

        let swap = RationalMap::new(p("t"), p("s")).unwrap();
        let c = compose(&swap, &pi4()).unwrap();
        assert_eq!(c.degree(), 4);
        assert_eq!(c.numerator(), &p("-27*t^4"));

        let phi = RationalMap::new(p("t-s"), p("t")).unwrap();
        assert_eq!(compose(&pi2(), &phi).unwrap().degree(), 4);
    }

    #[test]
    fn transfer_star_moves_the_star() {
        let m = x411(); // I4* at t, I1 at s-2t and s+2t
        let moved = transfer_star(&m, &p("t"), &p("s-2*t")).unwrap();
        let clusters = classify_fibers(&moved).unwrap();
        let mut view: Vec<(String, String)> = clusters
            .iter()
            .map(|c| (c.place.to_string(), c.ktype.to_string()))
            .collect();
        view.sort();
        assert_eq!(
            view,
            vec![
                ("s+2*t".to_string(), "I1".to_string()),
                ("s-2*t".to_string(), "I1*".to_string()),
                ("t".to_string(), "I4".to_string()),
            ]
        );
        assert_eq!(configuration(&moved).unwrap().to_string(), "[1,4,1*]");

        // moving it back restores the original exactly
        let back = transfer_star(&moved, &p("s-2*t"), &p("t")).unwrap();
        assert_eq!(back, m);

        // a place with no star refuses
        assert_eq!(
            transfer_star(&m, &p("s-2*t"), &p("s+2*t")),
            Err(Error::NotStarred)
        );
    }

    #[test]
    fn pullback_x411_normalized_along_pi4() {
        // normalize cusps to 0, 1, inf, then pull back: [1,1,1,2,3,16]
        let g =
            mobius_from_three_points(&pt(-2, 1), &pt(2, 1), &ProjPoint::infinity(&q())).unwrap();
        let normalized = pullback(&x411(), &g).unwrap();
        let k3 = pullback(&normalized, &pi4()).unwrap();
        assert_eq!(configuration(&k3).unwrap().to_string(), "[1,1,1,2,3,16]");
        assert_eq!(k3.euler_number().unwrap(), 24);
    }
}
