//! Gröbner bases over ℚ, normal forms, ideal membership, and the decision
//! whether a rational section on a localized coordinate ring is regular.

mod buchberger;
mod membership;
mod order;
mod regular;
mod sparse;

use thiserror::Error;

use crate::exactalg::{LaurentPoly, Vars};

pub use buchberger::BuchbergerCaps;
pub use membership::{membership_oracle, MAX_UNKNOWNS};
pub use order::{MonomialOrder, OrderKind};
pub use regular::{is_regular, RationalSection, Regularity, RegularityCaps, DEFAULT_CERTIFICATE_PRIMES};

use sparse::SPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("polynomials over different variable lists")]
    Arity,
    #[error("negative exponents are not allowed here")]
    NotPolynomial,
    #[error("monomial order does not match the variables")]
    BadOrder,
    #[error("{0} cap exceeded; result undecided")]
    CapExceeded(&'static str),
    #[error(transparent)]
    Alg(#[from] crate::exactalg::AlgError),
}

/// A reduced Gröbner basis together with the generators it came from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    vars: Vars,
    order: MonomialOrder,
    source: Vec<LaurentPoly>,
    basis: Vec<LaurentPoly>,
    internal: Vec<SPoly>,
}

impl GroebnerBasis {
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn source(&self) -> &[LaurentPoly] {
        &self.source
    }

    /// Monic basis elements sorted by ascending leading monomial.
    pub fn basis(&self) -> &[LaurentPoly] {
        &self.basis
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.internal.len() == 1 && self.internal[0].lm().is_some_and(|m| m.iter().all(|&x| x == 0))
    }

    /// Remainder of `f` under multivariate division by the basis; zero
    /// exactly when `f` lies in the ideal.
    pub fn normal_form(&self, f: &LaurentPoly) -> Result<LaurentPoly, GroebnerError> {
        if !f.same_vars(&LaurentPoly::zero(self.vars.clone())) {
            return Err(GroebnerError::Arity);
        }
        let sf = SPoly::from_laurent(f, &self.order).ok_or(GroebnerError::NotPolynomial)?;
        let (r, _) = sparse::reduce(&sf, &self.internal, None, &self.order);
        Ok(r.to_laurent(&self.vars))
    }

    pub fn contains(&self, f: &LaurentPoly) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks the Buchberger criterion: every S-polynomial of basis pairs
    /// reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let o = &self.order;
        for j in 0..self.internal.len() {
            for i in 0..j {
                let (a, b) = (&self.internal[i], &self.internal[j]);
                let l = sparse::lcm(a.lm().unwrap(), b.lm().unwrap());
                let s = SPoly::zero()
                    .add_scaled(a, &a.lc().unwrap().recip(), &sparse::div_mono(&l, a.lm().unwrap()), o)
                    .add_scaled(b, &-b.lc().unwrap().recip(), &sparse::div_mono(&l, b.lm().unwrap()), o);
                if !sparse::reduce(&s, &self.internal, None, o).0.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn to_sparse(gens: &[LaurentPoly], vars: &Vars, order: &MonomialOrder) -> Result<Vec<SPoly>, GroebnerError> {
    if order.arity() != vars.len() || !order.is_valid() {
        return Err(GroebnerError::BadOrder);
    }
    gens.iter()
        .map(|g| {
            if !g.same_vars(&LaurentPoly::zero(vars.clone())) {
                return Err(GroebnerError::Arity);
            }
            SPoly::from_laurent(g, order).ok_or(GroebnerError::NotPolynomial)
        })
        .collect()
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// `vars` fixes the ambient ring so that an empty generator list is
/// meaningful. The result is deterministic for fixed input and order.
pub fn buchberger(
    vars: &Vars,
    generators: &[LaurentPoly],
    order: &MonomialOrder,
    caps: BuchbergerCaps,
) -> Result<GroebnerBasis, GroebnerError> {
    let gens = to_sparse(generators, vars, order)?;
    let tracked = buchberger::buchberger_tracked(gens, None, order, caps)?;
    Ok(GroebnerBasis {
        vars: vars.clone(),
        order: order.clone(),
        source: generators.to_vec(),
        basis: tracked.polys.iter().map(|p| p.to_laurent(vars)).collect(),
        internal: tracked.polys,
    })
}

/// Shorthand for `basis.normal_form(f)`.
pub fn normal_form(f: &LaurentPoly, basis: &GroebnerBasis) -> Result<LaurentPoly, GroebnerError> {
    basis.normal_form(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, vars};

    fn v2() -> Vars {
        vars(&["x", "y"])
    }

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &v2()).unwrap()
    }

    fn gb(gens: &[&str], order: MonomialOrder) -> GroebnerBasis {
        let g: Vec<_> = gens.iter().map(|s| p(s)).collect();
        buchberger(&v2(), &g, &order, BuchbergerCaps::default()).unwrap()
    }

    fn show(b: &GroebnerBasis) -> Vec<String> {
        b.basis().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn already_a_basis() {
        let v = vars(&["x"]);
        let b = buchberger(&v, &[parse_poly("x", &v).unwrap()], &MonomialOrder::grevlex(1), Default::default()).unwrap();
        assert_eq!(show(&b), vec!["x"]);
    }

    #[test]
    fn unit_ideal() {
        let b = gb(&["1"], MonomialOrder::grevlex(2));
        assert_eq!(show(&b), vec!["1"]);
        assert!(b.is_unit_ideal());
        let b = gb(&["2*x + 1", "x"], MonomialOrder::grevlex(2));
        assert_eq!(show(&b), vec!["1"]);
    }

    #[test]
    fn lex_example() {
        // {x - y, x^2} under lex x > y
        let b = gb(&["x - y", "x^2"], MonomialOrder::lex(2));
        assert_eq!(show(&b), vec!["y^2", "x - y"]);
        assert!(b.s_pairs_reduce_to_zero());
        // the reduced basis generates the same ideal, checked by the independent oracle
        for g in b.basis() {
            assert!(membership_oracle(g, &[p("x - y"), p("x^2")], 2).unwrap());
        }
    }

    #[test]
    fn normal_form_examples() {
        let b = gb(&["x - y"], MonomialOrder::lex(2));
        assert_eq!(b.normal_form(&p("x^2")).unwrap(), p("y^2"));
        let b = gb(&["x*y - 1"], MonomialOrder::grevlex(2));
        assert_eq!(b.normal_form(&p("x^2*y + x")).unwrap(), p("2*x"));
        for g in b.source() {
            assert!(b.normal_form(g).unwrap().is_zero());
        }
    }

    #[test]
    fn empty_generators() {
        let b = gb(&[], MonomialOrder::grevlex(2));
        assert!(b.basis().is_empty());
        assert_eq!(b.normal_form(&p("x + 1")).unwrap(), p("x + 1"));
    }

    #[test]
    fn input_errors() {
        let v = v2();
        assert_eq!(
            buchberger(&v, &[p("x^-1")], &MonomialOrder::lex(2), Default::default()).unwrap_err(),
            GroebnerError::NotPolynomial
        );
        assert_eq!(
            buchberger(&v, &[p("x")], &MonomialOrder::lex(3), Default::default()).unwrap_err(),
            GroebnerError::BadOrder
        );
        let caps = BuchbergerCaps {
            max_degree: 2,
            ..Default::default()
        };
        assert!(matches!(
            buchberger(&v, &[p("x^3 - y")], &MonomialOrder::lex(2), caps),
            Err(GroebnerError::CapExceeded(_))
        ));
    }

    #[test]
    fn cyclic3_is_deterministic() {
        let v = vars(&["a", "b", "c"]);
        let g: Vec<_> = ["a + b + c", "a*b + b*c + c*a", "a*b*c - 1"]
            .iter()
            .map(|s| parse_poly(s, &v).unwrap())
            .collect();
        let o = MonomialOrder::grevlex(3);
        let b1 = buchberger(&v, &g, &o, Default::default()).unwrap();
        let b2 = buchberger(&v, &g, &o, Default::default()).unwrap();
        assert_eq!(b1.basis(), b2.basis());
        assert!(b1.s_pairs_reduce_to_zero());
        for s in &g {
            assert!(b1.contains(s).unwrap());
        }
        assert!(b1.contains(&parse_poly("c^3 - 1", &v).unwrap()).unwrap());
    }
}
