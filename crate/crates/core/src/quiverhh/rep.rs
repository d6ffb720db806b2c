use num_bigint::BigInt;
use num_rational::BigRational;

use super::path::{is_closed, is_walk, Chain, PathClass};
use super::quiver::Quiver;
use super::QuiverError;
use crate::exactalg::{
    parse_poly, vars, CoordinateRing, LaurentPoly, Matrix, Provenance, Vars, VarietyPresentation,
};

/// Largest number of symbolic matrix entries [`Representation::symbolic`]
/// creates by default.
pub const DEFAULT_SYMBOLIC_CAP: usize = 64;

/// Convention tag recorded on charts built from representations.
pub const WALK_CONVENTION: &str = "a1...ak -> A_k...A_1";
/// Largest dimension accepted by [`Representation::parse`].
pub const MAX_PARSED_DIMENSION: usize = 1024;

/// A representation of a quiver: a dimension per vertex and a matrix per
/// arrow, of shape `dim(target) × dim(source)`, with entries in a Laurent
/// polynomial ring (constants for numeric representations).
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    quiver: Quiver,
    vars: Vars,
    dims: Vec<usize>,
    matrices: Vec<Matrix<LaurentPoly>>,
}

impl Representation {
    pub fn new(
        quiver: Quiver,
        dims: Vec<usize>,
        matrices: Vec<Matrix<LaurentPoly>>,
        vars: Vars,
    ) -> Result<Self, QuiverError> {
        if dims.len() != quiver.vertices() {
            return Err(QuiverError::DimsMismatch {
                expected: quiver.vertices(),
                got: dims.len(),
            });
        }
        if matrices.len() != quiver.arrows().len() {
            return Err(QuiverError::Rep(format!(
                "{} matrices for {} arrows",
                matrices.len(),
                quiver.arrows().len()
            )));
        }
        let zero = LaurentPoly::zero(vars.clone());
        for (a, m) in quiver.arrows().iter().zip(&matrices) {
            let expected = (dims[a.target - 1], dims[a.source - 1]);
            if m.shape() != expected {
                return Err(QuiverError::ShapeMismatch {
                    arrow: a.label.clone(),
                    expected,
                    got: m.shape(),
                });
            }
            if m.entries().iter().any(|e| !e.same_vars(&zero)) {
                return Err(QuiverError::Rep("entries over different variables".into()));
            }
        }
        Ok(Representation {
            quiver,
            vars,
            dims,
            matrices,
        })
    }

    /// The generic representation: every matrix entry is its own variable,
    /// named `label` for 1×1 matrices and `label_i_j` (1-based) otherwise.
    pub fn symbolic(quiver: &Quiver, dims: &[usize], cap: usize) -> Result<Self, QuiverError> {
        if dims.len() != quiver.vertices() {
            return Err(QuiverError::DimsMismatch {
                expected: quiver.vertices(),
                got: dims.len(),
            });
        }
        let mut total = 0usize;
        for a in quiver.arrows() {
            total = total.saturating_add(dims[a.target - 1].saturating_mul(dims[a.source - 1]));
        }
        if total > cap {
            return Err(QuiverError::CapExceeded { vars: total, cap });
        }
        let mut names = Vec::with_capacity(total);
        for a in quiver.arrows() {
            let (r, c) = (dims[a.target - 1], dims[a.source - 1]);
            for i in 0..r {
                for j in 0..c {
                    names.push(if r == 1 && c == 1 {
                        a.label.clone()
                    } else {
                        format!("{}_{}_{}", a.label, i + 1, j + 1)
                    });
                }
            }
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(QuiverError::Rep(format!("entry name `{n}` is ambiguous")));
            }
        }
        let vs = vars(&names);
        let mut next = 0;
        let matrices = quiver
            .arrows()
            .iter()
            .map(|a| {
                Matrix::from_fn(dims[a.target - 1], dims[a.source - 1], |_, _| {
                    next += 1;
                    LaurentPoly::var(vs.clone(), next - 1)
                })
            })
            .collect();
        Representation::new(quiver.clone(), dims.to_vec(), matrices, vs)
    }

    /// Parses `dims;label=matrix;...` with each dimension at most
    /// [`MAX_PARSED_DIMENSION`], e.g. `1,1;a1=x;a2=[[y]]` or
    /// `2;t=[[1, x], [0, 1]]`. A bare polynomial is a 1×1 matrix; arrows
    /// whose matrix has no entries may be omitted. Variables are taken from
    /// the entries in order of appearance.
    pub fn parse(text: &str, quiver: &Quiver) -> Result<Self, QuiverError> {
        let bad = |m: String| QuiverError::Rep(m);
        let mut parts = text.split(';').map(str::trim);
        let dims_text = parts.next().unwrap_or("");
        let dims: Vec<usize> = if dims_text.is_empty() {
            Vec::new()
        } else {
            dims_text
                .split(',')
                .map(|d| {
                    d.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&n| n <= MAX_PARSED_DIMENSION)
                        .ok_or_else(|| bad(format!("bad dimension `{d}`")))
                })
                .collect::<Result<_, _>>()?
        };
        if dims.len() != quiver.vertices() {
            return Err(QuiverError::DimsMismatch {
                expected: quiver.vertices(),
                got: dims.len(),
            });
        }
        let mut raw: Vec<Option<Vec<Vec<&str>>>> = vec![None; quiver.arrows().len()];
        let mut names: Vec<String> = Vec::new();
        for part in parts.filter(|p| !p.is_empty()) {
            let (label, body) = part.split_once('=').ok_or_else(|| bad(format!("expected `label=matrix`, got `{part}`")))?;
            let label = label.trim();
            let idx = quiver.arrow_index(label).ok_or_else(|| QuiverError::UnknownArrow(label.to_string()))?;
            if raw[idx].is_some() {
                return Err(bad(format!("arrow `{label}` given twice")));
            }
            let rows = split_matrix(body.trim()).ok_or_else(|| bad(format!("malformed matrix for `{label}`")))?;
            for entry in rows.iter().flatten() {
                for n in crate::exactalg::collect_vars(entry).map_err(crate::exactalg::AlgError::from)? {
                    if !names.contains(&n) {
                        names.push(n);
                    }
                }
            }
            raw[idx] = Some(rows);
        }
        let vs = vars(&names);
        let mut matrices = Vec::with_capacity(raw.len());
        for (a, rows) in quiver.arrows().iter().zip(raw) {
            let expected = (dims[a.target - 1], dims[a.source - 1]);
            let rows = match rows {
                Some(r) => r,
                None if expected.0 * expected.1 == 0 => vec![Vec::new(); expected.0],
                None => return Err(bad(format!("missing matrix for `{}`", a.label))),
            };
            let got_cols = rows.first().map_or(0, Vec::len);
            let got = (rows.len(), got_cols);
            if rows.iter().any(|r| r.len() != got_cols) || got != expected {
                // an empty `[]` stands for any matrix without entries
                if !(rows.is_empty() && expected.0 * expected.1 == 0) {
                    return Err(QuiverError::ShapeMismatch {
                        arrow: a.label.clone(),
                        expected,
                        got,
                    });
                }
            }
            let mut data = Vec::with_capacity(expected.0 * expected.1);
            for entry in rows.iter().flatten() {
                data.push(parse_poly(entry, &vs).map_err(crate::exactalg::AlgError::from)?);
            }
            matrices.push(Matrix::new(expected.0, expected.1, data).expect("shape checked"));
        }
        Representation::new(quiver.clone(), dims, matrices, vs)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn matrix(&self, arrow: usize) -> &Matrix<LaurentPoly> {
        &self.matrices[arrow]
    }

    pub fn matrices(&self) -> &[Matrix<LaurentPoly>] {
        &self.matrices
    }

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.vars.clone())
    }

    /// `A_k⋯A₁` for a composable walk `a₁⋯a_k`.
    pub fn walk_matrix(&self, path: &[usize]) -> Result<Matrix<LaurentPoly>, QuiverError> {
        let Some(&first) = path.first() else {
            return Err(QuiverError::NotClosed);
        };
        if let Some(&bad) = path.iter().find(|&&i| i >= self.quiver.arrows().len()) {
            return Err(QuiverError::UnknownArrow(bad.to_string()));
        }
        if !is_walk(&self.quiver, path) {
            return Err(QuiverError::Rep("arrows do not compose".into()));
        }
        let zero = self.zero();
        let mut acc = self.matrices[first].clone();
        for &a in &path[1..] {
            acc = self.matrices[a].mul(&acc, &zero).expect("walk shapes compose");
        }
        Ok(acc)
    }

    /// Trace of one basis class: the vertex dimension for an idempotent,
    /// `tr(A_k⋯A₁)` for a cycle.
    pub fn class_trace(&self, class: &PathClass) -> Result<LaurentPoly, QuiverError> {
        match class {
            PathClass::Idempotent(v) => {
                let d = self
                    .dims
                    .get(v.wrapping_sub(1))
                    .ok_or_else(|| QuiverError::BadVertex {
                        label: format!("e{v}"),
                        vertices: self.dims.len(),
                    })?;
                Ok(LaurentPoly::constant(
                    self.vars.clone(),
                    BigRational::from_integer(BigInt::from(*d)),
                ))
            }
            PathClass::Cycle(c) => {
                let m = self.walk_matrix(c)?;
                if !is_closed(&self.quiver, c) {
                    return Err(QuiverError::NotClosed);
                }
                Ok(m.trace(&self.zero()).expect("closed walks give square matrices"))
            }
        }
    }
}

/// The trace pairing `HO([r])(V, ρ) = tr(ρ(r))`, extended linearly.
pub fn ho_trace(chain: &Chain, rep: &Representation) -> Result<LaurentPoly, QuiverError> {
    let mut acc = rep.zero();
    for (class, c) in chain.terms() {
        acc = &acc + &rep.class_trace(class)?.scale(c);
    }
    Ok(acc)
}

/// The representation space of `quiver` with dimension vector `dims` as a
/// free coordinate ring on the matrix entries; the determinant of every
/// nonempty square arrow matrix is a distinguished unit (the invertible
/// chart).
pub fn rep_moduli_chart(quiver: &Quiver, dims: &[usize], cap: usize) -> Result<VarietyPresentation, QuiverError> {
    let rep = Representation::symbolic(quiver, dims, cap)?;
    let zero = rep.zero();
    let one = LaurentPoly::one(rep.vars.clone());
    let units = rep
        .matrices
        .iter()
        .filter(|m| m.rows() == m.cols() && m.rows() > 0)
        .map(|m| m.det(&zero, &one).expect("square"))
        .collect();
    let ring = CoordinateRing::new(rep.vars.clone(), Vec::new(), units)?;
    Ok(VarietyPresentation {
        ring,
        provenance: Provenance {
            source: "rep_moduli_chart".into(),
            strands: None,
            word: None,
            convention: Some(WALK_CONVENTION.into()),
        },
    })
}

/// `[[a, b], [c, d]]` or a bare entry, split into row-major entry texts.
fn split_matrix(text: &str) -> Option<Vec<Vec<&str>>> {
    let Some(inner) = text.strip_prefix('[') else {
        return (!text.is_empty() && !text.contains(['[', ']', ','])).then(|| vec![vec![text]]);
    };
    let mut inner = inner.strip_suffix(']')?.trim();
    let mut rows = Vec::new();
    while !inner.is_empty() {
        let r = inner.strip_prefix('[')?;
        let close = r.find(']')?;
        let row: Vec<&str> = r[..close].split(',').map(str::trim).collect();
        if row.iter().any(|e| e.is_empty() || e.contains('[')) {
            return None;
        }
        rows.push(row);
        inner = r[close + 1..].trim_start();
        if let Some(rest) = inner.strip_prefix(',') {
            inner = rest.trim_start();
            if inner.is_empty() {
                return None;
            }
        } else if !inner.is_empty() {
            return None;
        }
    }
    Some(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly_auto;
    use crate::quiverhh::{Arrow, Quiver};

    fn two_loops() -> Quiver {
        Quiver::new(
            1,
            vec![
                Arrow { source: 1, target: 1, label: "a".into() },
                Arrow { source: 1, target: 1, label: "b".into() },
            ],
        )
        .unwrap()
    }

    #[test]
    fn idempotent_gives_dimension() {
        let q = Quiver::single_loop();
        let rep = Representation::symbolic(&q, &[3], DEFAULT_SYMBOLIC_CAP).unwrap();
        let v = ho_trace(&Chain::parse("e1", &q).unwrap(), &rep).unwrap();
        assert_eq!(v.to_string(), "3");
    }

    #[test]
    fn cyclic_two_rank_one() {
        let q = Quiver::cyclic(2);
        let rep = Representation::parse("1,1;a1=x;a2=[[y]]", &q).unwrap();
        let v = ho_trace(&Chain::parse("[a1 a2]", &q).unwrap(), &rep).unwrap();
        assert_eq!(v.to_string(), "x*y");
    }

    #[test]
    fn commutator_vanishes() {
        let q = two_loops();
        let rep = Representation::parse("2;a=[[1,x],[y,2]];b=[[0,1],[z,3]]", &q).unwrap();
        let v = ho_trace(&Chain::parse("[a b] - [b a]", &q).unwrap(), &rep).unwrap();
        assert!(v.is_zero());
        let ab = rep.walk_matrix(&[0, 1]).unwrap();
        let ba = rep.walk_matrix(&[1, 0]).unwrap();
        assert_ne!(ab, ba);
        let zero = LaurentPoly::zero(rep.vars().clone());
        assert_eq!(ab.trace(&zero), ba.trace(&zero));
    }

    #[test]
    fn walk_matrix_order() {
        // a then b maps to B·A
        let q = Quiver::linear(3);
        let rep = Representation::parse("1,2,1;b1=[[1],[2]];b2=[[3,5]]", &q).unwrap();
        assert_eq!(rep.walk_matrix(&[0, 1]).unwrap().get(0, 0).to_string(), "13");
    }

    #[test]
    fn symbolic_rank_one_cycle_is_monomial() {
        for n in 1..=6 {
            let q = Quiver::cyclic(n);
            let rep = Representation::symbolic(&q, &vec![1; n], DEFAULT_SYMBOLIC_CAP).unwrap();
            let cls = PathClass::Cycle((0..n).collect());
            let v = ho_trace(&Chain::single(cls), &rep).unwrap();
            let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
            assert_eq!(v.to_string(), names.join("*"));
            assert!(v.is_monomial() && v.is_polynomial());
        }
    }

    #[test]
    fn charts() {
        let p = rep_moduli_chart(&Quiver::cyclic(2), &[1, 1], DEFAULT_SYMBOLIC_CAP).unwrap();
        assert_eq!(p.ring.vars().as_slice(), ["a1", "a2"]);
        let units: Vec<String> = p.ring.units().iter().map(|u| u.to_string()).collect();
        assert_eq!(units, vec!["a1", "a2"]);
        assert!(p.ring.ideal().is_empty());

        let p = rep_moduli_chart(&Quiver::single_loop(), &[1], DEFAULT_SYMBOLIC_CAP).unwrap();
        assert_eq!(p.ring.vars().as_slice(), ["t"]);

        let p = rep_moduli_chart(&Quiver::linear(2), &[1, 1], DEFAULT_SYMBOLIC_CAP).unwrap();
        assert_eq!(p.ring.vars().as_slice(), ["b1"]);

        let p = rep_moduli_chart(&Quiver::single_loop(), &[2], DEFAULT_SYMBOLIC_CAP).unwrap();
        assert_eq!(
            p.ring.units()[0],
            parse_poly("t_1_1*t_2_2 - t_1_2*t_2_1", p.ring.vars()).unwrap()
        );
        assert!(matches!(
            rep_moduli_chart(&Quiver::single_loop(), &[9], DEFAULT_SYMBOLIC_CAP),
            Err(QuiverError::CapExceeded { vars: 81, cap: 64 })
        ));
    }

    #[test]
    fn parse_errors() {
        let q = Quiver::cyclic(2);
        assert!(Representation::parse("1;a1=x;a2=y", &q).is_err());
        assert!(Representation::parse("1,1;a1=x", &q).is_err());
        assert!(Representation::parse("1,1;a1=x;a2=y;a1=z", &q).is_err());
        assert!(Representation::parse("1,1;a1=[[x,y]];a2=y", &q).is_err());
        assert!(Representation::parse("1,1;a1=[[x]];a2=[[y]", &q).is_err());
        assert!(Representation::parse("1,1;c=x", &q).is_err());
        assert!(Representation::parse("1,1;a1=x^;a2=y", &q).is_err());
        // zero-dimensional vertices need no matrices
        let rep = Representation::parse("0,1", &q).unwrap();
        assert_eq!(rep.matrix(0).shape(), (1, 0));
        let rep = Representation::parse("2,2;a1=[[1,0],[0,1]];a2=[[x,0],[0,x^-1]]", &q).unwrap();
        let v = ho_trace(&Chain::parse("[a1 a2]", &q).unwrap(), &rep).unwrap();
        assert_eq!(v, parse_poly_auto("x + x^-1").unwrap().embed(rep.vars()).unwrap());
    }
}
