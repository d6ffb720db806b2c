use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::quiver::Quiver;
use super::QuiverError;
use crate::exactalg::parse_rational;

/// A basis element of the trace space `R/[R,R]` of a path algebra.
///
/// Cycles store arrow indices in their lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathClass {
    /// The trivial path at a 1-based vertex.
    Idempotent(usize),
    Cycle(Vec<usize>),
}

impl PathClass {
    pub fn len(&self) -> usize {
        match self {
            PathClass::Idempotent(_) => 0,
            PathClass::Cycle(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `e3` or `[a1 a2 a3]`, using the quiver's labels.
    pub fn display(&self, quiver: &Quiver) -> String {
        match self {
            PathClass::Idempotent(v) => format!("e{v}"),
            PathClass::Cycle(c) => {
                let labels: Vec<&str> = c.iter().map(|&i| quiver.arrow(i).label.as_str()).collect();
                format!("[{}]", labels.join(" "))
            }
        }
    }
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = f[j - k - 1];
        while i != -1 && *sj != s[(k + i as usize + 1) % n] {
            if *sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && *sj != s[(k + i.wrapping_add(1) as usize) % n] {
            if *sj < s[k % n] {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}

/// Checks composability of a walk given as arrow indices.
pub(crate) fn is_walk(quiver: &Quiver, path: &[usize]) -> bool {
    path.windows(2)
        .all(|w| quiver.arrow(w[0]).target == quiver.arrow(w[1]).source)
}

pub(crate) fn is_closed(quiver: &Quiver, path: &[usize]) -> bool {
    match (path.first(), path.last()) {
        (Some(&a), Some(&b)) => quiver.arrow(b).target == quiver.arrow(a).source,
        _ => false,
    }
}

/// The rotation class of a closed walk.
pub fn canonicalize_cycle(quiver: &Quiver, path: &[usize]) -> Result<PathClass, QuiverError> {
    if let Some(&bad) = path.iter().find(|&&i| i >= quiver.arrows().len()) {
        return Err(QuiverError::UnknownArrow(bad.to_string()));
    }
    if path.is_empty() || !is_walk(quiver, path) || !is_closed(quiver, path) {
        return Err(QuiverError::NotClosed);
    }
    let k = least_rotation(path);
    let mut rotated = path[k..].to_vec();
    rotated.extend_from_slice(&path[..k]);
    Ok(PathClass::Cycle(rotated))
}

/// Class of an arbitrary path in the trace space: `None` when the path is
/// zero there (non-composable, or open and hence a commutator).
pub fn path_class(quiver: &Quiver, path: &[usize]) -> Result<Option<PathClass>, QuiverError> {
    match canonicalize_cycle(quiver, path) {
        Ok(c) => Ok(Some(c)),
        Err(QuiverError::NotClosed) => Ok(None),
        Err(e) => Err(e),
    }
}

/// A finite ℚ-linear combination of trace-space classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Chain {
    terms: BTreeMap<PathClass, BigRational>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn single(class: PathClass) -> Self {
        let mut c = Chain::zero();
        c.add_term(class, BigRational::one());
        c
    }

    pub fn add_term(&mut self, class: PathClass, coeff: BigRational) {
        let e = self.terms.entry(class.clone()).or_insert_with(BigRational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&class);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PathClass, &BigRational)> {
        self.terms.iter()
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (cls, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if !a.is_one() {
                let _ = write!(s, "{a}*");
            }
            s.push_str(&cls.display(quiver));
        }
        s
    }

    /// Parses `e1 + 2*[a1 a2] - 1/2*[b a]`, or `0`. Paths that are zero in the trace
    /// space (open or non-composable) contribute nothing.
    pub fn parse(text: &str, quiver: &Quiver) -> Result<Self, QuiverError> {
        let syntax = |msg: &str| QuiverError::Chain(msg.to_string());
        let mut chain = Chain::zero();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(syntax("empty chain"));
        }
        if rest == "0" {
            return Ok(chain);
        }
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = BigRational::one();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            } else if !first {
                return Err(syntax("expected `+` or `-` between terms"));
            }
            first = false;
            let mut coeff = BigRational::one();
            if let Some(star) = rest.find('*') {
                let head = &rest[..star];
                if !head.contains('[') && !head.contains('+') && !head.contains('-') {
                    coeff = parse_rational(head).ok_or_else(|| syntax("bad coefficient"))?;
                    rest = rest[star + 1..].trim_start();
                }
            }
            let (class, tail) = if let Some(r) = rest.strip_prefix('[') {
                let close = r.find(']').ok_or_else(|| syntax("unclosed `[`"))?;
                let labels: Vec<&str> = r[..close]
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .collect();
                let mut path = Vec::with_capacity(labels.len());
                for l in labels {
                    path.push(quiver.arrow_index(l).ok_or_else(|| QuiverError::UnknownArrow(l.to_string()))?);
                }
                (path_class(quiver, &path)?, &r[close + 1..])
            } else if let Some(r) = rest.strip_prefix('e') {
                let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                let v: usize = r[..end].parse().map_err(|_| syntax("bad idempotent"))?;
                if v == 0 || v > quiver.vertices() {
                    return Err(QuiverError::BadVertex {
                        label: format!("e{v}"),
                        vertices: quiver.vertices(),
                    });
                }
                (Some(PathClass::Idempotent(v)), &r[end..])
            } else {
                return Err(syntax("expected `e<vertex>` or `[arrows]`"));
            };
            if let Some(c) = class {
                chain.add_term(c, sign * coeff);
            }
            rest = tail.trim_start();
        }
        Ok(chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_least_rotation(s: &[u8]) -> Vec<u8> {
        (0..s.len().max(1))
            .map(|k| {
                let mut r = s[k.min(s.len())..].to_vec();
                r.extend_from_slice(&s[..k.min(s.len())]);
                r
            })
            .min()
            .unwrap()
    }

    proptest! {
        #[test]
        fn booth_matches_brute_force(s in prop::collection::vec(0u8..3, 0..12)) {
            let k = least_rotation(&s);
            let mut r = s[k..].to_vec();
            r.extend_from_slice(&s[..k]);
            prop_assert_eq!(r, brute_least_rotation(&s));
        }
    }

    #[test]
    fn rotations_of_the_cycle() {
        let q = Quiver::cyclic(3);
        let a = canonicalize_cycle(&q, &[1, 2, 0]).unwrap();
        assert_eq!(a, PathClass::Cycle(vec![0, 1, 2]));
        assert_eq!(a.display(&q), "[a1 a2 a3]");
        let sq = canonicalize_cycle(&q, &[0, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(sq, PathClass::Cycle(vec![0, 1, 2, 0, 1, 2]));
        assert_eq!(canonicalize_cycle(&q, &[2, 0, 1, 2, 0, 1]).unwrap(), sq);
        let l = Quiver::single_loop();
        assert_eq!(canonicalize_cycle(&l, &[0]).unwrap().display(&l), "[t]");
    }

    #[test]
    fn open_and_broken_walks() {
        let q = Quiver::cyclic(3);
        assert_eq!(canonicalize_cycle(&q, &[0, 1]), Err(QuiverError::NotClosed));
        assert_eq!(canonicalize_cycle(&q, &[0, 2]), Err(QuiverError::NotClosed));
        assert_eq!(canonicalize_cycle(&q, &[]), Err(QuiverError::NotClosed));
        assert!(matches!(canonicalize_cycle(&q, &[7]), Err(QuiverError::UnknownArrow(_))));
        assert_eq!(path_class(&q, &[0, 1]).unwrap(), None);
    }

    #[test]
    fn chain_parsing() {
        let q = Quiver::new(
            1,
            vec![
                super::super::Arrow { source: 1, target: 1, label: "a".into() },
                super::super::Arrow { source: 1, target: 1, label: "b".into() },
            ],
        )
        .unwrap();
        // [ab] and [ba] coincide after canonicalization
        let c = Chain::parse("[a b] - [b a]", &q).unwrap();
        assert!(c.is_zero());
        let c = Chain::parse("e1 + 3/2*[b,a] - [a]", &q).unwrap();
        assert_eq!(c.display(&q), "e1 - [a] + 3/2*[a b]");
        assert!(Chain::parse("", &q).is_err());
        assert!(Chain::parse("[c]", &q).is_err());
        assert!(Chain::parse("e2", &q).is_err());
        assert!(Chain::parse("e1 e1", &q).is_err());
        assert!(Chain::parse("[a", &q).is_err());
        assert!(Chain::parse("x*[a]", &q).is_err());
    }
}
