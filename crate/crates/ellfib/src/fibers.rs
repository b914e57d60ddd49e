//! Kodaira classification of the singular fibers of a minimal Weierstrass
//! model from vanishing orders, and configuration bookkeeping.
//!
//! In characteristic zero the type of the fiber over a place is determined
//! by the triple (vA, vB, vDelta) of vanishing orders there; the vanishing
//! order of Delta equals the Euler number of the fiber.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{order_split, squarefree_decompose, HomogPoly, Order};
use crate::weier::WeierstrassModel;

/// Kodaira fiber types. The declaration order doubles as the configuration
/// rendering order: I(n) ascending, then I(n)*, II*, III*, IV*, then the
/// reduced additive types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    IIStar,
    IIIStar,
    IVStar,
    II,
    III,
    IV,
}

impl KodairaType {
    /// Euler number of the fiber; equals the vanishing order of Delta.
    pub fn euler(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Semi-stable means I(n) with n >= 1.
    pub fn is_semistable(self) -> bool {
        matches!(self, KodairaType::I(n) if n >= 1)
    }

    /// Non-reduced fibers are the starred ones.
    pub fn is_starred(self) -> bool {
        matches!(
            self,
            KodairaType::IStar(_) | KodairaType::IIStar | KodairaType::IIIStar | KodairaType::IVStar
        )
    }

    pub fn is_smooth(self) -> bool {
        self == KodairaType::I(0)
    }

    /// Canonical vanishing-order triple (vA, vB, vDelta) of the type.
    pub fn order_triple(self) -> (u32, u32, u32) {
        match self {
            KodairaType::I(n) => (0, 0, n),
            KodairaType::II => (1, 1, 2),
            KodairaType::III => (1, 2, 3),
            KodairaType::IV => (2, 2, 4),
            KodairaType::IStar(n) => (2, 3, 6 + n),
            KodairaType::IVStar => (3, 4, 8),
            KodairaType::IIIStar => (3, 5, 9),
            KodairaType::IIStar => (4, 5, 10),
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IIStar => write!(f, "II*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IVStar => write!(f, "IV*"),
        }
    }
}

/// Classify a vanishing-order triple; vA/vB may be infinite (zero polynomial).
pub fn kodaira_from_orders(v_a: Order, v_b: Order, v_delta: u32) -> Result<KodairaType> {
    let err = || Error::InconsistentOrders {
        v_a: v_a.to_string(),
        v_b: v_b.to_string(),
        v_delta,
    };
    if v_delta == 0 {
        return Ok(KodairaType::I(0));
    }
    if v_a.is(0) {
        return Ok(KodairaType::I(v_delta));
    }
    let t = match v_delta {
        2 => KodairaType::II,
        3 => KodairaType::III,
        4 => KodairaType::IV,
        6 => KodairaType::IStar(0),
        n if n >= 7 && v_a.is(2) && v_b.is(3) => KodairaType::IStar(n - 6),
        8 => KodairaType::IVStar,
        9 => KodairaType::IIIStar,
        10 => KodairaType::IIStar,
        _ => return Err(err()),
    };
    // consistency of the remaining orders with the chosen row
    let ok = match t {
        KodairaType::II => v_b.is(1),
        KodairaType::III => v_a.is(1) && v_b.at_least(2),
        KodairaType::IV => v_a.at_least(2) && v_b.is(2),
        KodairaType::IStar(0) => v_a.at_least(2) && v_b.at_least(3),
        KodairaType::IStar(_) => v_a.is(2) && v_b.is(3),
        KodairaType::IVStar => v_a.at_least(3) && v_b.is(4),
        KodairaType::IIIStar => v_a.is(3) && v_b.at_least(5),
        KodairaType::IIStar => v_a.at_least(4) && v_b.is(5),
        _ => true,
    };
    if ok {
        Ok(t)
    } else {
        Err(err())
    }
}

/// A coprime squarefree place cluster carrying uniform vanishing orders.
#[derive(Debug, Clone)]
pub struct FiberCluster {
    pub place: HomogPoly,
    /// Number of geometric places in the cluster (= deg place).
    pub places_count: u32,
    pub v_a: Order,
    pub v_b: Order,
    pub v_delta: u32,
    pub ktype: KodairaType,
}

/// Multiset of fiber types; renders in the paper's bracket notation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Configuration {
    counts: BTreeMap<KodairaType, u32>,
}

impl Configuration {
    pub fn from_types(types: impl IntoIterator<Item = KodairaType>) -> Self {
        let mut counts = BTreeMap::new();
        for t in types {
            if !t.is_smooth() {
                *counts.entry(t).or_insert(0) += 1;
            }
        }
        Configuration { counts }
    }

    pub fn counts(&self) -> &BTreeMap<KodairaType, u32> {
        &self.counts
    }

    pub fn total_fibers(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn euler_total(&self) -> u32 {
        self.counts.iter().map(|(t, c)| t.euler() * c).sum()
    }

    pub fn all_semistable(&self) -> bool {
        self.counts.keys().all(|t| t.is_semistable())
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (t, c) in &self.counts {
            let token = match t {
                KodairaType::I(n) => format!("{n}"),
                KodairaType::IStar(n) => format!("{n}*"),
                other => other.to_string(),
            };
            for _ in 0..*c {
                parts.push(token.clone());
            }
        }
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut types = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let tok = tok.trim();
                let t = match tok {
                    "II" => KodairaType::II,
                    "III" => KodairaType::III,
                    "IV" => KodairaType::IV,
                    "II*" => KodairaType::IIStar,
                    "III*" => KodairaType::IIIStar,
                    "IV*" => KodairaType::IVStar,
                    _ => {
                        if let Some(num) = tok.strip_suffix('*') {
                            KodairaType::IStar(num.parse().map_err(|_| {
                                Error::Parse(format!("bad configuration token `{tok}`"))
                            })?)
                        } else {
                            KodairaType::I(tok.parse().map_err(|_| {
                                Error::Parse(format!("bad configuration token `{tok}`"))
                            })?)
                        }
                    }
                };
                types.push(t);
            }
        }
        Ok(Configuration::from_types(types))
    }
}

/// Classify all singular fibers of a minimal model. Clusters are refined
/// until the order triple is uniform on each.
pub fn classify_fibers(m: &WeierstrassModel) -> Result<Vec<FiberCluster>> {
    if !m.is_minimal()? {
        return Err(Error::NotMinimal);
    }
    let delta = m.discriminant();
    let (_, clusters) = squarefree_decompose(&delta)?;
    let mut out = Vec::new();
    for cl in clusters {
        for (f1, v_a) in order_split(&cl.factor, m.a())? {
            for (f2, v_b) in order_split(&f1, m.b())? {
                let ktype = kodaira_from_orders(v_a, v_b, cl.multiplicity)?;
                out.push(FiberCluster {
                    places_count: f2.degree() as u32,
                    place: f2,
                    v_a,
                    v_b,
                    v_delta: cl.multiplicity,
                    ktype,
                });
            }
        }
    }
    Ok(out)
}

/// The non-semi-stable clusters only (where A and B vanish together),
/// classified. Much cheaper than [`classify_fibers`] on models with a large
/// discriminant, since it never decomposes Delta itself.
pub fn additive_clusters(m: &WeierstrassModel) -> Result<Vec<FiberCluster>> {
    let candidate = m.common_factor_candidate()?;
    if candidate.is_constant() {
        return Ok(Vec::new());
    }
    let delta = m.discriminant();
    let mut out = Vec::new();
    for (f1, v_a) in order_split(&candidate, m.a())? {
        for (f2, v_b) in order_split(&f1, m.b())? {
            for (f3, v_delta) in order_split(&f2, &delta)? {
                let v_delta = v_delta.finite().expect("Delta is nonzero");
                if v_delta == 0 {
                    continue;
                }
                let ktype = kodaira_from_orders(v_a, v_b, v_delta)?;
                out.push(FiberCluster {
                    places_count: f3.degree() as u32,
                    place: f3,
                    v_a,
                    v_b,
                    v_delta,
                    ktype,
                });
            }
        }
    }
    Ok(out)
}

/// The multiset of fiber types of a minimal model, counted with place
/// degrees.
pub fn configuration(m: &WeierstrassModel) -> Result<Configuration> {
    let clusters = classify_fibers(m)?;
    let mut types = Vec::new();
    for c in &clusters {
        for _ in 0..c.places_count {
            types.push(c.ktype);
        }
    }
    Ok(Configuration::from_types(types))
}

/// The combinatorial necessary condition for a semi-stable extremal K3:
/// Euler number 24, all fibers semi-stable, exactly six cusps. This is not a
/// full extremality certificate (Mordell-Weil rank is out of scope).
pub fn check_semistable_extremal_necessary(m: &WeierstrassModel) -> Result<bool> {
    let clusters = classify_fibers(m)?;
    let euler = m.euler_number()?;
    let cusps: u32 = clusters.iter().map(|c| c.places_count).sum();
    let all_ss = clusters.iter().all(|c| c.ktype.is_semistable());
    Ok(euler == 24 && all_ss && cusps == 6)
}

/// How a fiber type transforms under a base change ramified with index e at
/// its cusp: multiply the order triple by e and reduce by multiples of
/// (4, 6, 12). The boolean reports whether the result is non-reduced, i.e.
/// enters the parity count that deflation must cancel.
pub fn predict_pullback_type(f: KodairaType, e: u32) -> (KodairaType, bool) {
    assert!(e >= 1);
    let (va, vb, vd) = f.order_triple();
    let t = reduce_triple(Order::Finite(va * e), Order::Finite(vb * e), vd * e);
    (t, t.is_starred())
}

/// The effect of a quadratic twist at a place: the order triple shifts by
/// (2, 3, 6) and reduces, swapping starred and reduced relatives
/// (I_n <-> I_n*, II <-> IV*, III <-> III*, IV <-> II*, smooth <-> I_0*).
pub fn twist_toggle(t: KodairaType) -> KodairaType {
    let (va, vb, vd) = t.order_triple();
    reduce_triple(Order::Finite(va + 2), Order::Finite(vb + 3), vd + 6)
}

/// Reduce a scaled order triple by the minimalization shadow and classify.
pub(crate) fn reduce_triple(v_a: Order, v_b: Order, v_delta: u32) -> KodairaType {
    let k = match (v_a.div_floor(4), v_b.div_floor(6)) {
        (Order::Infinite, Order::Infinite) => 0,
        (Order::Infinite, Order::Finite(b)) => b,
        (Order::Finite(a), Order::Infinite) => a,
        (Order::Finite(a), Order::Finite(b)) => a.min(b),
    };
    kodaira_from_orders(v_a.minus(4 * k), v_b.minus(6 * k), v_delta - 12 * k)
        .expect("scaled triple of a valid type stays valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_homog, Field, FieldSpec, HomogPoly};
    use crate::weier::WeierstrassModel;

    fn q() -> Field {
        FieldSpec::rationals()
    }

    fn p(s: &str) -> HomogPoly {
        parse_homog(s, &q()).unwrap()
    }

    #[test]
    fn classify_x411() {
        let m = WeierstrassModel::new(p("-3*t^2*(s^2-3*t^2)"), p("s*t^3*(2*s^2-9*t^2)")).unwrap();
        let clusters = classify_fibers(&m).unwrap();
        let mut view: Vec<(String, String, u32)> = clusters
            .iter()
            .map(|c| (c.place.to_string(), c.ktype.to_string(), c.places_count))
            .collect();
        view.sort();
        // the two I1 cusps at +-2 form one quadratic cluster of two places
        assert_eq!(
            view,
            vec![
                ("s^2-4*t^2".to_string(), "I1".to_string(), 2),
                ("t".to_string(), "I4*".to_string(), 1),
            ]
        );
        assert_eq!(configuration(&m).unwrap().to_string(), "[1,1,4*]");
        assert!(!check_semistable_extremal_necessary(&m).unwrap());
    }

    #[test]
    fn classify_a_zero_family() {
        // A = 0, B = s^5 t: II at t, II* at s
        let m = WeierstrassModel::new(HomogPoly::zero(&q()), p("s^5*t")).unwrap();
        let clusters = classify_fibers(&m).unwrap();
        let mut view: Vec<(String, String, u32)> = clusters
            .iter()
            .map(|c| (c.place.to_string(), c.ktype.to_string(), c.v_delta))
            .collect();
        view.sort();
        assert_eq!(
            view,
            vec![
                ("s".to_string(), "II*".to_string(), 10),
                ("t".to_string(), "II".to_string(), 2),
            ]
        );
    }

    #[test]
    fn cluster_euler_sums_to_degree_of_delta() {
        let m = WeierstrassModel::new(p("-3*(s-t)^3*(s-4*t)"), p("-2*(s-t)^5*(s+8*t)")).unwrap();
        let clusters = classify_fibers(&m).unwrap();
        let total: u32 = clusters
            .iter()
            .map(|c| c.places_count * c.ktype.euler())
            .collect::<Vec<_>>()
            .iter()
            .sum();
        assert_eq!(total as usize, m.discriminant().degree());
        assert_eq!(configuration(&m).unwrap().to_string(), "[1,2,III*]");
    }

    #[test]
    fn semistable_iff_a_nonvanishing() {
        let m = WeierstrassModel::new(p("-3*t^2*(s^2-3*t^2)"), p("s*t^3*(2*s^2-9*t^2)")).unwrap();
        for c in classify_fibers(&m).unwrap() {
            assert_eq!(c.ktype.is_semistable(), c.v_a.is(0));
        }
    }

    #[test]
    fn predict_examples() {
        assert_eq!(
            predict_pullback_type(KodairaType::IStar(4), 4),
            (KodairaType::I(16), false)
        );
        assert_eq!(
            predict_pullback_type(KodairaType::IVStar, 3),
            (KodairaType::I(0), false)
        );
        assert_eq!(
            predict_pullback_type(KodairaType::I(3), 5),
            (KodairaType::I(15), false)
        );
        // the resolution diagram arrows
        assert_eq!(
            predict_pullback_type(KodairaType::IStar(3), 2),
            (KodairaType::I(6), false)
        );
        assert_eq!(
            predict_pullback_type(KodairaType::II, 3),
            (KodairaType::IStar(0), true)
        );
        assert_eq!(
            predict_pullback_type(KodairaType::III, 2),
            (KodairaType::IStar(0), true)
        );
        assert_eq!(
            predict_pullback_type(KodairaType::IV, 3),
            (KodairaType::I(0), false)
        );
        assert_eq!(
            predict_pullback_type(KodairaType::IIIStar, 2),
            (KodairaType::IStar(0), true)
        );
    }

    #[test]
    fn configuration_rendering_and_parsing() {
        let c: Configuration = "[1,2,3,10,2*]".parse().unwrap();
        assert_eq!(c.to_string(), "[1,2,3,10,2*]");
        assert_eq!(c.euler_total(), 1 + 2 + 3 + 10 + 8);

        let c: Configuration = "[2,3,II*,III*]".parse().unwrap();
        assert_eq!(c.to_string(), "[2,3,II*,III*]");

        let c: Configuration = "[1,3,IV*]".parse().unwrap();
        assert_eq!(c.euler_total(), 12);

        // multiset comparison ignores written order
        let a: Configuration = "[16,1,2,1,3,1]".parse().unwrap();
        let b: Configuration = "[1,1,1,2,3,16]".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_string(), "[1,1,1,2,3,16]");
    }

    #[test]
    fn inconsistent_orders_detected() {
        // vDelta = 5 with vA >= 1 matches no row
        assert!(matches!(
            kodaira_from_orders(Order::Finite(1), Order::Finite(1), 5),
            Err(Error::InconsistentOrders { .. })
        ));
    }
}
