//! Does a rational section `numerator / denominator` on a localized
//! coordinate ring `R = (k[x]/I)[U⁻¹]` extend to an element of `R`?
//!
//! The section is regular exactly when `numerator · Uᵉ ≡ h · denominator
//! (mod I)` for some polynomial `h` and some product `Uᵉ` of distinguished
//! units, in which case it equals `h / Uᵉ`. Membership of `numerator · Uᵉ`
//! in `I + (denominator)` is tested with a Gröbner basis whose elements carry
//! their cofactor of `denominator`, which yields `h` directly.
//!
//! Non-regularity is only reported with a pole: an 𝔽_q-point of `R` where the
//! denominator vanishes and the numerator does not.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::buchberger::{buchberger_tracked, BuchbergerCaps};
use super::order::MonomialOrder;
use super::sparse::{reduce, SPoly};
use super::GroebnerError;
use crate::exactalg::{CoordinateRing, LaurentPoly, DEFAULT_ENUMERATION_CAP};

/// Primes tried, in order, when searching for a pole certificate.
pub const DEFAULT_CERTIFICATE_PRIMES: [u64; 4] = [3, 5, 7, 11];

#[derive(Clone, Debug)]
pub struct RationalSection {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    pub ring: CoordinateRing,
}

impl RationalSection {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly, ring: CoordinateRing) -> Result<Self, GroebnerError> {
        let zero = LaurentPoly::zero(ring.vars().clone());
        if !numerator.same_vars(&zero) || !denominator.same_vars(&zero) {
            return Err(GroebnerError::Arity);
        }
        if !numerator.is_polynomial() || !denominator.is_polynomial() {
            return Err(GroebnerError::NotPolynomial);
        }
        if denominator.is_zero() {
            return Err(GroebnerError::Alg(crate::exactalg::AlgError::Pole("denominator".into())));
        }
        Ok(RationalSection {
            numerator,
            denominator,
            ring,
        })
    }

    /// `numerator · Uᵉ`.
    pub fn scaled_numerator(&self, unit_exponents: &[u32]) -> LaurentPoly {
        &unit_power(&self.ring, unit_exponents) * &self.numerator
    }
}

pub(crate) fn unit_power(ring: &CoordinateRing, exps: &[u32]) -> LaurentPoly {
    let mut acc = LaurentPoly::one(ring.vars().clone());
    for (u, &k) in ring.units().iter().zip(exps) {
        acc = &acc * &u.pow(k as i64).expect("nonnegative power");
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCaps {
    /// Degree cap for the Gröbner computations.
    pub degree: u32,
    /// Largest total multiplicity of distinguished units tried.
    pub unit_multiplicity: u32,
    pub max_pairs: usize,
    pub primes: Vec<u64>,
    pub enumeration: u64,
}

impl Default for RegularityCaps {
    fn default() -> Self {
        RegularityCaps {
            degree: BuchbergerCaps::default().max_degree,
            unit_multiplicity: 3,
            max_pairs: BuchbergerCaps::default().max_pairs,
            primes: DEFAULT_CERTIFICATE_PRIMES.to_vec(),
            enumeration: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Regularity {
    /// The section equals `witness / Uᵉ` with `e = unit_exponents`.
    Regular {
        #[serde(serialize_with = "ser_poly")]
        witness: LaurentPoly,
        unit_exponents: Vec<u32>,
    },
    /// The denominator vanishes at `point ∈ R(𝔽_q)` and the numerator does not.
    NotRegular { q: u64, point: Vec<u64> },
    Undecided { reason: String },
}

fn ser_poly<S: serde::Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular { .. })
    }

    pub fn is_not_regular(&self) -> bool {
        matches!(self, Regularity::NotRegular { .. })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Regularity::Undecided { .. })
    }
}

/// Unit exponent vectors of total multiplicity `0..=max`, ordered by total
/// then lexicographically.
fn unit_exponent_vectors(units: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for k in (0..=left).rev() {
            prefix.push(k);
            rec(prefix, n, left - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=max {
        if units == 0 && total > 0 {
            break;
        }
        rec(&mut Vec::new(), units, total, &mut out);
    }
    out
}

pub fn is_regular(section: &RationalSection, caps: &RegularityCaps) -> Regularity {
    let ring = &section.ring;
    let vars = ring.vars();
    let arity = vars.len();
    let order = MonomialOrder::grevlex(arity);
    let bcaps = BuchbergerCaps {
        max_degree: caps.degree,
        max_pairs: caps.max_pairs,
        ..BuchbergerCaps::default()
    };
    let to_sparse = |p: &LaurentPoly| SPoly::from_laurent(p, &order).expect("checked polynomial");

    let mut undecided_reason = String::new();
    match search_witness(section, caps, &order, bcaps, &to_sparse) {
        Ok(Some(found)) => return found,
        Ok(None) => undecided_reason.push_str("no witness within the unit-multiplicity cap"),
        Err(e) => undecided_reason.push_str(&e.to_string()),
    }

    if let Some(cert) = find_pole(section, caps) {
        return cert;
    }
    Regularity::Undecided {
        reason: format!("{undecided_reason}; no pole certificate over {:?}", caps.primes),
    }
}

fn search_witness(
    section: &RationalSection,
    caps: &RegularityCaps,
    order: &MonomialOrder,
    bcaps: BuchbergerCaps,
    to_sparse: &dyn Fn(&LaurentPoly) -> SPoly,
) -> Result<Option<Regularity>, GroebnerError> {
    let ring = &section.ring;
    let arity = ring.vars().len();

    let ideal: Vec<SPoly> = ring.ideal().iter().map(to_sparse).collect();
    let ideal_gb = buchberger_tracked(ideal.clone(), None, order, bcaps)?;

    // generators of I + (den); tag = cofactor of den
    let mut gens = ideal;
    let mut tags = vec![SPoly::zero(); gens.len()];
    gens.push(to_sparse(&section.denominator));
    tags.push(SPoly::constant(arity, BigRational::one()));
    let joint = buchberger_tracked(gens, Some(tags), order, bcaps)?;
    let joint_tags = joint.tags.as_ref().expect("tracked");

    let den = to_sparse(&section.denominator);
    for exps in unit_exponent_vectors(ring.units().len(), caps.unit_multiplicity) {
        let target = to_sparse(&section.scaled_numerator(&exps));
        let (rem, h) = reduce(&target, &joint.polys, Some(joint_tags), order);
        if !rem.is_zero() {
            continue;
        }
        let (h, _) = reduce(&h, &ideal_gb.polys, None, order);
        // exact re-check: numerator·Uᵉ − h·den ∈ I
        let check = target.add(&h.mul(&den, order).scale(&-BigRational::one()), order);
        if !reduce(&check, &ideal_gb.polys, None, order).0.is_zero() {
            continue;
        }
        return Ok(Some(Regularity::Regular {
            witness: h.to_laurent(ring.vars()),
            unit_exponents: exps,
        }));
    }
    Ok(None)
}

fn find_pole(section: &RationalSection, caps: &RegularityCaps) -> Option<Regularity> {
    for &q in &caps.primes {
        let Ok(points) = section.ring.enumerate_points(q, caps.enumeration) else {
            continue;
        };
        for pt in points {
            let den = section.denominator.evaluate_mod(&pt, q);
            let num = section.numerator.evaluate_mod(&pt, q);
            if let (Ok(d), Ok(n)) = (den, num) {
                if d.is_zero() && !n.is_zero() {
                    return Some(Regularity::NotRegular { q, point: pt });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{vars, CoordinateRing};

    fn hopf_section(num: &str, den: &str) -> RationalSection {
        let ring = CoordinateRing::hopf();
        RationalSection::new(ring.parse(num).unwrap(), ring.parse(den).unwrap(), ring).unwrap()
    }

    #[test]
    fn unit_denominator_is_regular() {
        let r = is_regular(&hopf_section("y", "1 + x*y"), &RegularityCaps::default());
        match r {
            Regularity::Regular { witness, unit_exponents } => {
                assert_eq!(witness.to_string(), "y");
                assert_eq!(unit_exponents, vec![1]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inverse_of_x_has_pole_at_origin() {
        let r = is_regular(&hopf_section("1", "x"), &RegularityCaps::default());
        assert_eq!(r, Regularity::NotRegular { q: 3, point: vec![0, 0] });
    }

    #[test]
    fn exact_division() {
        let v = vars(&["x", "y"]);
        let ring = CoordinateRing::free(v);
        let s = RationalSection::new(ring.parse("x^2*y + x").unwrap(), ring.parse("x").unwrap(), ring).unwrap();
        match is_regular(&s, &RegularityCaps::default()) {
            Regularity::Regular { witness, unit_exponents } => {
                assert_eq!(witness.to_string(), "x*y + 1");
                assert!(unit_exponents.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn division_modulo_relations() {
        // on y = x^2, y/x = x
        let v = vars(&["x", "y"]);
        let ring = CoordinateRing::new(v.clone(), vec![crate::exactalg::parse_poly("y - x^2", &v).unwrap()], vec![]).unwrap();
        let s = RationalSection::new(ring.parse("y").unwrap(), ring.parse("x").unwrap(), ring).unwrap();
        match is_regular(&s, &RegularityCaps::default()) {
            Regularity::Regular { witness, .. } => assert_eq!(witness.to_string(), "x"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tight_caps_are_undecided_not_wrong() {
        let caps = RegularityCaps {
            unit_multiplicity: 0,
            primes: vec![],
            ..Default::default()
        };
        assert!(is_regular(&hopf_section("y", "1 + x*y"), &caps).is_undecided());
    }

    #[test]
    fn exponent_vectors_order() {
        assert_eq!(
            unit_exponent_vectors(2, 2),
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(unit_exponent_vectors(0, 3), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn serializes_with_status_tag() {
        let r = Regularity::NotRegular { q: 3, point: vec![0, 0] };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"status":"not_regular","q":3,"point":[0,0]}"#
        );
    }
}
