//! Ideal membership by dense linear algebra over ℚ.
//!
//! Shares nothing with the Buchberger path: `f ∈ (g_1, …, g_s)` is decided
//! for cofactors of degree at most `cap` by writing `Σ c_i g_i = f` as a
//! linear system in the cofactor coefficients.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::GroebnerError;
use crate::exactalg::{Exponents, LaurentPoly};

/// Largest number of unknowns the dense solver accepts.
pub const MAX_UNKNOWNS: usize = 4_000;

fn monomials_up_to(arity: usize, degree: u32) -> Vec<Exponents> {
    fn rec(prefix: &mut Exponents, arity: usize, left: u32, out: &mut Vec<Exponents>) {
        if prefix.len() == arity {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=left {
            prefix.push(k as i32);
            rec(prefix, arity, left - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), arity, degree, &mut out);
    out
}

/// Decides whether `f = Σ c_i · g_i` has a solution with `deg c_i ≤ cap`.
///
/// `true` is a proof of membership. `false` only says no certificate exists
/// at this cap.
pub fn membership_oracle(f: &LaurentPoly, generators: &[LaurentPoly], cap: u32) -> Result<bool, GroebnerError> {
    for g in generators {
        if !g.same_vars(f) {
            return Err(GroebnerError::Arity);
        }
    }
    if !f.is_polynomial() || generators.iter().any(|g| !g.is_polynomial()) {
        return Err(GroebnerError::NotPolynomial);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let gens: Vec<&LaurentPoly> = generators.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(false);
    }
    let shifts = monomials_up_to(f.arity(), cap);
    let unknowns = shifts.len() * gens.len();
    if unknowns > MAX_UNKNOWNS {
        return Err(GroebnerError::CapExceeded("membership oracle size"));
    }

    // column per (generator, shift); row per monomial
    let mut row_index: BTreeMap<Exponents, usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, BigRational)>> = Vec::with_capacity(unknowns);
    for g in &gens {
        for s in &shifts {
            let mut col = Vec::with_capacity(g.num_terms());
            for (e, c) in g.terms() {
                let m: Exponents = e.iter().zip(s).map(|(a, b)| a + b).collect();
                let next = row_index.len();
                let r = *row_index.entry(m).or_insert(next);
                col.push((r, c.clone()));
            }
            columns.push(col);
        }
    }
    let mut rhs_entries = Vec::new();
    for (e, c) in f.terms() {
        match row_index.get(e) {
            Some(&r) => rhs_entries.push((r, c.clone())),
            // f has a monomial no cofactor product can reach
            None => return Ok(false),
        }
    }
    let rows = row_index.len();
    let width = unknowns + 1;
    let mut m = vec![vec![BigRational::zero(); width]; rows];
    for (j, col) in columns.iter().enumerate() {
        for (r, c) in col {
            m[*r][j] = c.clone();
        }
    }
    for (r, c) in rhs_entries {
        m[r][unknowns] = c;
    }
    Ok(consistent(&mut m, unknowns))
}

/// Row-reduces `[A | b]` and reports whether `A x = b` is solvable.
fn consistent(m: &mut [Vec<BigRational>], unknowns: usize) -> bool {
    let rows = m.len();
    let mut pivot_row = 0;
    for col in 0..unknowns {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut().skip(col) {
            *v = &*v * &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for k in col..=unknowns {
                if !pivot[k].is_zero() {
                    row[k] = &row[k] - &(&factor * &pivot[k]);
                }
            }
        }
        pivot_row += 1;
    }
    m[pivot_row..].iter().all(|row| row[unknowns].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, vars};

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &vars(&["x", "y"])).unwrap()
    }

    #[test]
    fn generator_is_member() {
        let g = [p("x^2 - y"), p("x*y + 1")];
        assert!(membership_oracle(&g[1], &g, 0).unwrap());
    }

    #[test]
    fn one_not_in_maximal_ideal() {
        let g = [p("x"), p("y")];
        for cap in 0..6 {
            assert!(!membership_oracle(&p("1"), &g, cap).unwrap());
        }
    }

    #[test]
    fn y_squared_needs_degree_one_cofactors() {
        // y^2 = x^2 - (x + y)(x - y)
        let g = [p("x - y"), p("x^2")];
        assert!(!membership_oracle(&p("y^2"), &g, 0).unwrap());
        assert!(membership_oracle(&p("y^2"), &g, 2).unwrap());
        assert!(membership_oracle(&p("y^2"), &g, 1).unwrap());
    }

    #[test]
    fn size_cap() {
        let v = vars(&["a", "b", "c", "d", "e", "f"]);
        let g = [parse_poly("a", &v).unwrap()];
        assert!(matches!(
            membership_oracle(&parse_poly("b", &v).unwrap(), &g, 20),
            Err(GroebnerError::CapExceeded(_))
        ));
    }
}
