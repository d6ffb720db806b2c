//! Sorted sparse polynomials used inside the Gröbner engine.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::order::MonomialOrder;
use crate::exactalg::{LaurentPoly, Vars};

pub(crate) type Mono = Vec<u32>;

/// Terms sorted strictly descending in the ambient monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SPoly {
    pub terms: Vec<(Mono, BigRational)>,
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Converts a polynomial with nonnegative exponents; `None` otherwise.
    pub fn from_laurent(p: &LaurentPoly, order: &MonomialOrder) -> Option<Self> {
        let mut terms: Vec<(Mono, BigRational)> = Vec::with_capacity(p.num_terms());
        for (e, c) in p.terms() {
            let m: Option<Mono> = e.iter().map(|&x| u32::try_from(x).ok()).collect();
            terms.push((m?, c.clone()));
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Some(SPoly { terms })
    }

    pub fn to_laurent(&self, vars: &Vars) -> LaurentPoly {
        LaurentPoly::from_terms(
            vars.clone(),
            self.terms
                .iter()
                .map(|(m, c)| (m.iter().map(|&x| x as i32).collect(), c.clone())),
        )
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        if c.is_zero() {
            SPoly::zero()
        } else {
            SPoly {
                terms: vec![(vec![0; arity], c)],
            }
        }
    }

    pub fn lm(&self) -> Option<&Mono> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<&BigRational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> SPoly {
        if c.is_zero() {
            return SPoly::zero();
        }
        SPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn make_monic(&self) -> (SPoly, BigRational) {
        match self.lc() {
            None => (SPoly::zero(), BigRational::one()),
            Some(lc) => {
                let inv = lc.recip();
                (self.scale(&inv), inv)
            }
        }
    }

    /// `self + coeff · mono · other`, merging in order.
    pub fn add_scaled(&self, other: &SPoly, coeff: &BigRational, mono: &[u32], order: &MonomialOrder) -> SPoly {
        if coeff.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let shifted = other.terms.iter().map(|(m, c)| (mul_mono(m, mono), c * coeff));
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match order.cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((m, s));
                        }
                    }
                },
            }
        }
        SPoly { terms: out }
    }

    pub fn add(&self, other: &SPoly, order: &MonomialOrder) -> SPoly {
        let arity = self.lm().or(other.lm()).map(|m| m.len()).unwrap_or(0);
        self.add_scaled(other, &BigRational::one(), &vec![0; arity], order)
    }

    pub fn mul(&self, other: &SPoly, order: &MonomialOrder) -> SPoly {
        let mut acc = SPoly::zero();
        for (m, c) in &self.terms {
            acc = acc.add_scaled(other, c, m, order);
        }
        acc
    }
}

pub(crate) fn mul_mono(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn div_mono(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Full reduction of `f` by `basis`, returning the remainder and, when tags
/// are supplied, `Σ quotient_i · tag_i`.
pub(crate) fn reduce(
    f: &SPoly,
    basis: &[SPoly],
    tags: Option<&[SPoly]>,
    order: &MonomialOrder,
) -> (SPoly, SPoly) {
    let mut p = f.clone();
    let mut rem: Vec<(Mono, BigRational)> = Vec::new();
    let mut tag_acc = SPoly::zero();
    while let Some((lm, lc)) = p.terms.first().cloned() {
        let divisor = basis
            .iter()
            .position(|g| g.lm().is_some_and(|gm| divides(gm, &lm)));
        match divisor {
            Some(i) => {
                let g = &basis[i];
                let shift = div_mono(&lm, g.lm().unwrap());
                let coeff = &lc / g.lc().unwrap();
                p = p.add_scaled(g, &-coeff.clone(), &shift, order);
                if let Some(tags) = tags {
                    tag_acc = tag_acc.add_scaled(&tags[i], &coeff, &shift, order);
                }
            }
            None => {
                rem.push(p.terms.remove(0));
            }
        }
    }
    (SPoly { terms: rem }, tag_acc)
}
