use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{write_rational, Domain, Fp, Scalar};
use super::AlgError;

/// Ordered variable names shared between polynomials of the same ring.
pub type Vars = Arc<Vec<String>>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect())
}

/// Integer exponent vector, one entry per variable.
pub type Exponents = Vec<i32>;

/// A multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a map from exponent vectors to nonzero coefficients;
/// a zero coefficient is never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exponents, BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl LaurentPoly {
    pub fn zero(vars: Vars) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: Vars, c: BigRational) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0; n], c)
    }

    pub fn from_int(vars: Vars, c: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(c.into()))
    }

    pub fn monomial(vars: Vars, exps: Exponents, c: BigRational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { vars, terms }
    }

    /// The `index`-th variable as a polynomial.
    pub fn var(vars: Vars, index: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        Self::monomial(vars, exps, BigRational::one())
    }

    /// Builds from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigRational)>,
    {
        let mut out = LaurentPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), out.vars.len(), "exponent arity");
            out.add_term(e, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The constant value, if this polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn max_abs_exponent(&self) -> u64 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|x| x.unsigned_abs() as u64))
            .max()
            .unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when no exponent is negative, i.e. this is an honest polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
    }

    pub fn same_vars(&self, other: &LaurentPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<(), AlgError> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(AlgError::ArityMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    /// Exact `lhs op rhs`, rejecting operands over different variable lists.
    pub fn op(&self, op: PolyOp, rhs: &LaurentPoly) -> Result<LaurentPoly, AlgError> {
        self.check_vars(rhs)?;
        Ok(match op {
            PolyOp::Add => self.add_unchecked(rhs),
            PolyOp::Sub => self.add_unchecked(&rhs.neg()),
            PolyOp::Mul => self.mul_unchecked(rhs),
        })
    }

    fn add_unchecked(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn mul_unchecked(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1
                    .iter()
                    .zip(e2)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.vars.clone());
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Inverse of a single-term polynomial; anything else is not a Laurent unit.
    pub fn monomial_inverse(&self) -> Result<LaurentPoly, AlgError> {
        if !self.is_monomial() {
            return Err(AlgError::NotInvertible(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok(LaurentPoly::monomial(
            self.vars.clone(),
            e.iter().map(|x| -x).collect(),
            c.recip(),
        ))
    }

    /// Integer power. Negative powers are defined for monomials only.
    pub fn pow(&self, exp: i64) -> Result<LaurentPoly, AlgError> {
        let base = if exp < 0 {
            self.monomial_inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = LaurentPoly::one(self.vars.clone());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial over a larger variable list that contains
    /// every current variable.
    pub fn embed(&self, target: &Vars) -> Result<LaurentPoly, AlgError> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target.iter().position(|t| t == v).ok_or_else(|| AlgError::ArityMismatch {
                    left: self.vars.to_vec(),
                    right: target.to_vec(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(LaurentPoly::from_terms(
            target.clone(),
            self.terms.iter().map(|(e, c)| {
                let mut ne = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            }),
        ))
    }

    /// Exact value at a point. With `modulus = Some(q)` the computation runs in
    /// 𝔽_q; otherwise it runs in the common domain of the coordinates.
    pub fn evaluate(&self, point: &[Scalar], modulus: Option<u64>) -> Result<Scalar, AlgError> {
        if point.len() != self.arity() {
            return Err(AlgError::PointLength {
                expected: self.arity(),
                got: point.len(),
            });
        }
        let domain = match modulus {
            Some(q) => Domain::Prime(super::scalar::check_prime(q)?),
            None => point.first().map(Scalar::domain).unwrap_or(Domain::Rational),
        };
        let coords: Vec<Scalar> = point
            .iter()
            .map(|s| s.to_domain(domain).ok_or(AlgError::DomainMismatch))
            .collect::<Result<_, _>>()?;
        // A pole at any variable carrying a negative exponent is an error even
        // if the offending term would cancel elsewhere.
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() && self.terms.keys().any(|e| e[i] < 0) {
                return Err(AlgError::Pole(self.vars[i].clone()));
            }
        }
        let mut acc = Scalar::zero(domain);
        for (e, c) in &self.terms {
            let mut term = Scalar::Rational(c.clone())
                .to_domain(domain)
                .ok_or_else(|| AlgError::CoefficientModulus {
                    coefficient: c.to_string(),
                    modulus: modulus.unwrap_or(0),
                })?;
            for (x, &k) in coords.iter().zip(e) {
                if k != 0 {
                    term = &term * &x.pow(k as i64).expect("nonzero base checked");
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Fast 𝔽_q evaluation at a point given as reduced residues.
    pub fn evaluate_mod(&self, point: &[u64], q: u64) -> Result<Fp, AlgError> {
        let pt: Vec<Scalar> = point.iter().map(|&v| Scalar::Prime(Fp::from_u64(v, q))).collect();
        Ok(self.evaluate(&pt, Some(q))?.as_fp().expect("prime domain"))
    }

    /// Terms sorted for display: highest total degree first, then
    /// lexicographically larger exponents first.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &BigRational)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(a, _), (b, _)| display_order(b, a));
        out
    }
}

fn display_order(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.op(PolyOp::Add, rhs).expect("variable mismatch")
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.op(PolyOp::Sub, rhs).expect("variable mismatch")
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.op(PolyOp::Mul, rhs).expect("variable mismatch")
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            for (name, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    k => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write_rational(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_rational(f, &abs)?;
                    write!(f, "*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({}; vars={:?})", self, self.vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    fn xy() -> Vars {
        vars(&["x", "y"])
    }

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &xy()).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(&p("x + y") + &p("x - y"), p("2*x"));
    }

    #[test]
    fn laurent_unit() {
        assert_eq!(&p("x") * &p("x^-1"), LaurentPoly::one(xy()));
    }

    #[test]
    fn difference_of_squares() {
        let prod = &p("1 + x*y") * &p("1 - x*y");
        assert_eq!(prod, p("1 - x^2*y^2"));
        assert_eq!(prod.to_string(), "-x^2*y^2 + 1");
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = LaurentPoly::var(vars(&["x"]), 0);
        let b = LaurentPoly::var(xy(), 0);
        assert!(matches!(a.op(PolyOp::Add, &b), Err(AlgError::ArityMismatch { .. })));
    }

    #[test]
    fn evaluation_examples() {
        let f = p("1 + x*y");
        let pt = [Scalar::from_int(1, Domain::Rational), Scalar::from_int(2, Domain::Rational)];
        assert_eq!(f.evaluate(&pt, Some(7)).unwrap(), Scalar::from_int(3, Domain::Prime(7)));

        let inv = parse_poly("x^-1", &vars(&["x"])).unwrap();
        let zero = [Scalar::zero(Domain::Rational)];
        assert!(matches!(inv.evaluate(&zero, None), Err(AlgError::Pole(v)) if v == "x"));

        let g = parse_poly("x^2 + 1", &vars(&["x"])).unwrap();
        let two = [Scalar::from_int(2, Domain::Rational)];
        assert!(g.evaluate(&two, Some(5)).unwrap().is_zero());
    }

    #[test]
    fn evaluate_rejects_non_prime_modulus() {
        let f = p("x");
        let pt = [Scalar::one(Domain::Rational), Scalar::one(Domain::Rational)];
        assert!(matches!(f.evaluate(&pt, Some(4)), Err(AlgError::NotPrime(4))));
    }

    #[test]
    fn coefficient_with_q_in_denominator() {
        let f = p("1/3*x");
        let pt = [Scalar::one(Domain::Rational), Scalar::one(Domain::Rational)];
        assert!(matches!(
            f.evaluate(&pt, Some(3)),
            Err(AlgError::CoefficientModulus { .. })
        ));
    }

    #[test]
    fn negative_power_of_binomial_fails() {
        assert!(p("1 + x").pow(-1).is_err());
        assert_eq!(p("2*x*y").pow(-2).unwrap(), p("1/4*x^-2*y^-2"));
    }

    #[test]
    fn embed_into_larger_ring() {
        let f = parse_poly("y + 1", &vars(&["y"])).unwrap();
        let g = f.embed(&vars(&["x", "y", "z"])).unwrap();
        assert_eq!(g.to_string(), "y + 1");
        assert!(f.embed(&vars(&["x"])).is_err());
    }
}
