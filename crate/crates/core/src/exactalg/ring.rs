use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::laurent::{vars as make_vars, LaurentPoly, Vars};
use super::parse::parse_poly;
use super::scalar::check_prime;
use super::AlgError;

/// Default bound on the number of assignments `q^v` an enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A finitely presented ring `k[vars]/(ideal)` with some elements formally
/// inverted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateRing {
    vars: Vars,
    ideal: Vec<LaurentPoly>,
    units: Vec<LaurentPoly>,
}

impl CoordinateRing {
    pub fn new(vars: Vars, ideal: Vec<LaurentPoly>, units: Vec<LaurentPoly>) -> Result<Self, AlgError> {
        for p in ideal.iter().chain(&units) {
            if !p.same_vars(&LaurentPoly::zero(vars.clone())) {
                return Err(AlgError::ArityMismatch {
                    left: vars.to_vec(),
                    right: p.vars().to_vec(),
                });
            }
            if !p.is_polynomial() {
                return Err(AlgError::NotPolynomial(p.to_string()));
            }
        }
        Ok(CoordinateRing { vars, ideal, units })
    }

    /// The polynomial ring on `vars` with nothing inverted.
    pub fn free(vars: Vars) -> Self {
        CoordinateRing {
            vars,
            ideal: Vec::new(),
            units: Vec::new(),
        }
    }

    /// `ℤ[x,y]` localized at `1 + xy`: the moduli of the Hopf link.
    pub fn hopf() -> Self {
        let v = make_vars(&["x", "y"]);
        let unit = parse_poly("1 + x*y", &v).expect("literal");
        CoordinateRing {
            vars: v,
            ideal: Vec::new(),
            units: vec![unit],
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn ideal(&self) -> &[LaurentPoly] {
        &self.ideal
    }

    pub fn units(&self) -> &[LaurentPoly] {
        &self.units
    }

    /// Parses a polynomial in this ring's variables.
    pub fn parse(&self, text: &str) -> Result<LaurentPoly, AlgError> {
        Ok(parse_poly(text, &self.vars)?)
    }

    fn compiled(&self, q: u64) -> Result<(Vec<CompiledPoly>, Vec<CompiledPoly>), AlgError> {
        let ideal = self.ideal.iter().map(|p| CompiledPoly::new(p, q)).collect::<Result<_, _>>()?;
        let units = self.units.iter().map(|p| CompiledPoly::new(p, q)).collect::<Result<_, _>>()?;
        Ok((ideal, units))
    }

    fn assignment_count(&self, q: u64, cap: u64) -> Result<u64, AlgError> {
        let v = self.vars.len() as u32;
        match q.checked_pow(v) {
            Some(total) if total <= cap => Ok(total),
            _ => Err(AlgError::CapExceeded {
                q,
                vars: self.vars.len(),
                cap,
            }),
        }
    }

    /// All 𝔽_q-points where every ideal generator vanishes and every
    /// distinguished unit is nonzero, in lexicographic order.
    pub fn enumerate_points(&self, q: u64, cap: u64) -> Result<Vec<Vec<u64>>, AlgError> {
        check_prime(q)?;
        let total = self.assignment_count(q, cap)?;
        let (ideal, units) = self.compiled(q)?;
        let v = self.vars.len();
        Ok((0..total)
            .into_par_iter()
            .filter_map(|index| {
                let pt = decode(index, q, v);
                on_variety(&pt, q, &ideal, &units).then_some(pt)
            })
            .collect())
    }

    /// `|enumerate_points(q)|` without materializing the points.
    pub fn count_points(&self, q: u64, cap: u64) -> Result<u64, AlgError> {
        check_prime(q)?;
        let total = self.assignment_count(q, cap)?;
        let (ideal, units) = self.compiled(q)?;
        let v = self.vars.len();
        Ok((0..total)
            .into_par_iter()
            .filter(|&index| on_variety(&decode(index, q, v), q, &ideal, &units))
            .count() as u64)
    }

    /// Whether a residue point satisfies the relations and avoids the units' zeros.
    pub fn contains_point(&self, point: &[u64], q: u64) -> Result<bool, AlgError> {
        if point.len() != self.vars.len() {
            return Err(AlgError::PointLength {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let (ideal, units) = self.compiled(check_prime(q)?)?;
        let pt: Vec<u64> = point.iter().map(|x| x % q).collect();
        Ok(on_variety(&pt, q, &ideal, &units))
    }
}

fn decode(mut index: u64, q: u64, v: usize) -> Vec<u64> {
    let mut pt = vec![0; v];
    for slot in pt.iter_mut().rev() {
        *slot = index % q;
        index /= q;
    }
    pt
}

fn on_variety(pt: &[u64], q: u64, ideal: &[CompiledPoly], units: &[CompiledPoly]) -> bool {
    ideal.iter().all(|g| g.eval(pt, q) == 0) && units.iter().all(|u| u.eval(pt, q) != 0)
}

/// A nonnegative-exponent polynomial with coefficients reduced mod `q`.
struct CompiledPoly {
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl CompiledPoly {
    fn new(p: &LaurentPoly, q: u64) -> Result<Self, AlgError> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (e, c) in p.terms() {
            let coeff = super::scalar::Fp::from_rational(c, q).ok_or_else(|| AlgError::CoefficientModulus {
                coefficient: c.to_string(),
                modulus: q,
            })?;
            let factors = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| (i, k as u32))
                .collect();
            terms.push((coeff.value(), factors));
        }
        Ok(CompiledPoly { terms })
    }

    fn eval(&self, pt: &[u64], q: u64) -> u64 {
        let mut acc: u128 = 0;
        let qq = q as u128;
        for (c, factors) in &self.terms {
            let mut t = *c as u128;
            for &(i, k) in factors {
                t = t * pow_mod(pt[i] as u128, k, qq) % qq;
            }
            acc = (acc + t) % qq;
        }
        acc as u64
    }
}

fn pow_mod(mut base: u128, mut exp: u32, q: u128) -> u128 {
    let mut acc = 1 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// Where a presentation came from, carried alongside the ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub source: String,
    pub strands: Option<usize>,
    pub word: Option<Vec<usize>>,
    pub convention: Option<String>,
}

/// Generators, relations and distinguished units of an affine variety,
/// together with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPresentation {
    pub ring: CoordinateRing,
    pub provenance: Provenance,
}

/// On-disk JSON form of a presentation (also accepted as a ring file).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    pub variables: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub units: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

impl VarietyPresentation {
    pub fn to_file(&self) -> PresentationFile {
        PresentationFile {
            strands: self.provenance.strands,
            word: self.provenance.word.clone(),
            variables: self.ring.vars().to_vec(),
            relations: self.ring.ideal().iter().map(|p| p.to_string()).collect(),
            units: self.ring.units().iter().map(|p| p.to_string()).collect(),
            convention: self.provenance.convention.clone(),
        }
    }

    pub fn from_file(file: &PresentationFile) -> Result<Self, AlgError> {
        for (i, name) in file.variables.iter().enumerate() {
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || file.variables[..i].contains(name) {
                return Err(AlgError::BadVariable(name.clone()));
            }
        }
        let vars = make_vars(&file.variables);
        let parse_all = |items: &[String]| -> Result<Vec<LaurentPoly>, AlgError> {
            items.iter().map(|s| Ok(parse_poly(s, &vars)?)).collect()
        };
        let ring = CoordinateRing::new(vars.clone(), parse_all(&file.relations)?, parse_all(&file.units)?)?;
        Ok(VarietyPresentation {
            ring,
            provenance: Provenance {
                source: "file".into(),
                strands: file.strands,
                word: file.word.clone(),
                convention: file.convention.clone(),
            },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, AlgError> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| AlgError::Json(e.to_string()))?;
        Self::from_file(&file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::laurent::vars;

    #[test]
    fn hopf_counts_small_primes() {
        let ring = CoordinateRing::hopf();
        assert_eq!(ring.count_points(3, DEFAULT_ENUMERATION_CAP).unwrap(), 7);
        assert_eq!(ring.count_points(2, DEFAULT_ENUMERATION_CAP).unwrap(), 3);
        // brute force: all pairs minus those with xy = -1
        for q in [2u64, 3, 5, 7] {
            let brute = (0..q)
                .flat_map(|x| (0..q).map(move |y| (x, y)))
                .filter(|(x, y)| (1 + x * y) % q != 0)
                .count() as u64;
            assert_eq!(ring.count_points(q, DEFAULT_ENUMERATION_CAP).unwrap(), brute);
            assert_eq!(brute, q * q - q + 1);
        }
    }

    #[test]
    fn unit_ideal_is_empty() {
        let v = vars(&["x", "y"]);
        let ring = CoordinateRing::new(v.clone(), vec![LaurentPoly::one(v)], vec![]).unwrap();
        for q in [2, 3, 5] {
            assert!(ring.enumerate_points(q, 100).unwrap().is_empty());
        }
    }

    #[test]
    fn points_are_lexicographic() {
        let pts = CoordinateRing::hopf().enumerate_points(2, 100).unwrap();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn cap_and_prime_checks() {
        let ring = CoordinateRing::free(vars(&["a", "b", "c"]));
        assert!(matches!(ring.count_points(11, 1000), Err(AlgError::CapExceeded { .. })));
        assert!(matches!(ring.count_points(4, 1000), Err(AlgError::NotPrime(4))));
        assert_eq!(ring.count_points(7, 1000).unwrap(), 343);
    }

    #[test]
    fn negative_exponents_rejected_in_relations() {
        let v = vars(&["x"]);
        let bad = parse_poly("x^-1", &v).unwrap();
        assert!(CoordinateRing::new(v, vec![bad], vec![]).is_err());
    }

    #[test]
    fn presentation_json_round_trip() {
        let pres = VarietyPresentation {
            ring: CoordinateRing::hopf(),
            provenance: Provenance::default(),
        };
        let back = VarietyPresentation::from_json(&pres.to_json()).unwrap();
        assert_eq!(back.ring, pres.ring);
        assert!(VarietyPresentation::from_json(r#"{"variables":["x","x"]}"#).is_err());
        assert!(VarietyPresentation::from_json(r#"{"variables":["1x"]}"#).is_err());
        assert!(VarietyPresentation::from_json(r#"{"variables":["x"],"relations":["y"]}"#).is_err());
    }
}
