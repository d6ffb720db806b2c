//! Positive braid words, Demazure products, braid matrices and the braid
//! varieties read off from them.
//!
//! The generator `σ_i` with parameter `z` acts by `B_i(z)`: the identity
//! except for the block `[[z, 1], [1, 0]]` in rows and columns `i, i+1`.
//! The braid variety of a word whose Demazure product is the longest
//! permutation is the locus where the product `B_{i₁}(z₁)⋯B_{i_ℓ}(z_ℓ)` has
//! every entry strictly above the antidiagonal equal to zero.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    vars, AlgError, CoordinateRing, LaurentPoly, Matrix, Provenance, Vars, VarietyPresentation,
};

/// Convention tag stored in every emitted presentation.
pub const CONVENTION: &str = "B(z)=[[z,1],[1,0]];above-antidiag=0";

pub const MAX_STRANDS: usize = 16;
/// Longest word accepted for symbolic products.
pub const MAX_LETTERS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("need between 2 and {MAX_STRANDS} strands, got {0}")]
    BadStrands(usize),
    #[error("letter {letter} is outside 1..={} for {strands} strands", strands - 1)]
    BadLetter { letter: usize, strands: usize },
    #[error("malformed braid word: {0}")]
    Syntax(String),
    #[error("word has {0} letters; symbolic products are capped at {MAX_LETTERS}")]
    TooLong(usize),
    #[error("Demazure product {0} is not the longest element")]
    NotLongest(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// A positive braid word in the generators `σ_1, …, σ_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self, BraidError> {
        if !(2..=MAX_STRANDS).contains(&strands) {
            return Err(BraidError::BadStrands(strands));
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(BraidError::BadLetter { letter, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses letters separated by commas or whitespace, e.g. `1,2,1`.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let letters = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| BraidError::Syntax(format!("bad letter `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::BadStrands(other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// `images[j]` is `w(j+1) − 1`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn longest(n: usize) -> Self {
        Permutation { images: (0..n).rev().collect() }
    }

    /// From 1-based one-line notation; `None` unless a bijection.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Permutation { images: images.iter().map(|i| i - 1).collect() })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    pub fn is_longest(&self) -> bool {
        *self == Permutation::longest(self.size())
    }

    /// `w·s_i` (1-based `i`): swaps the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Whether `ℓ(w·s_i) > ℓ(w)`.
    pub fn ascends_at(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// A reduced word, found by bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut out = Vec::new();
        // sort w to the identity by right multiplication; the swaps read
        // backwards form a reduced word for the original permutation
        loop {
            let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
                break;
            };
            w.swap(i, i + 1);
            out.push(i + 1);
        }
        out.reverse();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

/// The Demazure product: fold the word with `w ⋆ s = ws` when the length
/// goes up, `w` otherwise.
pub fn demazure(word: &BraidWord) -> Permutation {
    word.letters.iter().fold(Permutation::identity(word.strands), |w, &i| {
        if w.ascends_at(i) {
            w.times_simple(i)
        } else {
            w
        }
    })
}

/// `B_i(z)` in `n` strands.
pub fn braid_block(n: usize, i: usize, z: &LaurentPoly) -> Matrix<LaurentPoly> {
    let zero = LaurentPoly::zero(z.vars().clone());
    let one = LaurentPoly::one(z.vars().clone());
    Matrix::from_fn(n, n, |r, c| match (r + 1, c + 1) {
        (r, c) if r == i && c == i => z.clone(),
        (r, c) if (r == i && c == i + 1) || (r == i + 1 && c == i) => one.clone(),
        (r, c) if r == i + 1 && c == i + 1 => zero.clone(),
        (r, c) if r == c => one.clone(),
        _ => zero.clone(),
    })
}

/// Names `z1, …, zℓ` of the braid parameters.
pub fn braid_vars(len: usize) -> Vars {
    let names: Vec<String> = (1..=len).map(|k| format!("z{k}")).collect();
    vars(&names)
}

/// `B_{i₁}(z_{s+1})⋯B_{i_ℓ}(z_{s+ℓ})` over `vars`, where `s = first_var`.
pub fn braid_matrix_product_in(word: &BraidWord, vars: &Vars, first_var: usize) -> Matrix<LaurentPoly> {
    let zero = LaurentPoly::zero(vars.clone());
    let one = LaurentPoly::one(vars.clone());
    let n = word.strands;
    word.letters
        .iter()
        .enumerate()
        .fold(Matrix::identity(n, &zero, &one), |acc, (k, &i)| {
            let z = LaurentPoly::var(vars.clone(), first_var + k);
            acc.mul(&braid_block(n, i, &z), &zero).expect("square")
        })
}

/// The symbolic braid matrix of a word in the variables `z1..zℓ`.
pub fn braid_matrix_product(word: &BraidWord) -> Result<Matrix<LaurentPoly>, BraidError> {
    if word.len() > MAX_LETTERS {
        return Err(BraidError::TooLong(word.len()));
    }
    Ok(braid_matrix_product_in(word, &braid_vars(word.len()), 0))
}

/// Entries strictly above the antidiagonal, as `(row, col)` 0-based.
fn above_antidiagonal(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n - 1 - i).map(move |j| (i, j)))
}

/// The braid variety of `word`: variables `z1..zℓ`, one relation per
/// nonzero entry above the antidiagonal of the braid matrix, no units.
pub fn variety_presentation(word: &BraidWord) -> Result<VarietyPresentation, BraidError> {
    let d = demazure(word);
    if !d.is_longest() {
        return Err(BraidError::NotLongest(d.to_string()));
    }
    let m = braid_matrix_product(word)?;
    let relations = above_antidiagonal(word.strands)
        .map(|(i, j)| m.get(i, j).clone())
        .filter(|p| !p.is_zero())
        .collect();
    let ring = CoordinateRing::new(braid_vars(word.len()), relations, Vec::new())?;
    Ok(VarietyPresentation {
        ring,
        provenance: Provenance {
            source: "braid".into(),
            strands: Some(word.strands),
            word: Some(word.letters.clone()),
            convention: Some(CONVENTION.into()),
        },
    })
}

/// `|X(𝔽_q)|` by enumeration.
pub fn count_points(pres: &VarietyPresentation, q: u64, cap: u64) -> Result<u64, BraidError> {
    Ok(pres.ring.count_points(q, cap)?)
}

/// The integer `a ≥ 0` with `count(q) = (q−1)^a (q²−q+1)` for every
/// `(q, count)` given, if there is one.
pub fn fit_torus_exponent(counts: &[(u64, u64)]) -> Option<u32> {
    let fits = |a: u32| {
        counts.iter().all(|&(q, c)| {
            (q - 1)
                .checked_pow(a)
                .and_then(|t| t.checked_mul(q * q - q + 1))
                .is_some_and(|v| v == c)
        })
    };
    // every count is at least (q−1)^a, which bounds the search
    let bound = counts.iter().map(|&(_, c)| 64 - c.leading_zeros()).max().unwrap_or(0);
    (0..=bound).find(|&a| fits(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, DEFAULT_ENUMERATION_CAP};

    fn w(n: usize, letters: &[usize]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn demazure_examples() {
        assert_eq!(demazure(&w(2, &[1])).one_line(), vec![2, 1]);
        assert_eq!(demazure(&w(2, &[1, 1])).one_line(), vec![2, 1]);
        assert!(demazure(&w(3, &[1, 2, 1])).is_longest());
        assert!(!demazure(&w(3, &[1, 2])).is_longest());
        assert_eq!(demazure(&w(3, &[])), Permutation::identity(3));
    }

    #[test]
    fn reduced_words() {
        for images in [[1, 2, 3, 4], [4, 3, 2, 1], [2, 4, 1, 3], [3, 1, 4, 2]] {
            let p = Permutation::from_one_line(&images).unwrap();
            let r = p.reduced_word();
            assert_eq!(r.len(), p.length());
            assert_eq!(demazure(&w(4, &r)), p);
        }
        assert!(Permutation::from_one_line(&[1, 1]).is_none());
    }

    #[test]
    fn matrix_products() {
        let m = braid_matrix_product(&w(3, &[])).unwrap();
        assert_eq!(m.to_string(), "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]");
        assert_eq!(braid_matrix_product(&w(2, &[1])).unwrap().to_string(), "[[z1, 1], [1, 0]]");
        let m = braid_matrix_product(&w(2, &[1, 1])).unwrap();
        let v = braid_vars(2);
        let expect = ["z1*z2 + 1", "z1", "z2", "1"].map(|s| parse_poly(s, &v).unwrap());
        assert_eq!(m.entries(), &expect);
    }

    #[test]
    fn determinant_sign() {
        let word = w(3, &[1, 2, 2, 1, 2]);
        let m = braid_matrix_product(&word).unwrap();
        let v = braid_vars(word.len());
        let det = m.det(&LaurentPoly::zero(v.clone()), &LaurentPoly::one(v.clone())).unwrap();
        assert_eq!(det, LaurentPoly::from_int(v, -1));
    }

    #[test]
    fn presentations() {
        assert!(matches!(variety_presentation(&w(3, &[1, 2])), Err(BraidError::NotLongest(_))));
        let p = variety_presentation(&w(3, &[1, 2, 1])).unwrap();
        assert_eq!(p.ring.vars().len(), 3);
        assert_eq!(p.provenance.convention.as_deref(), Some(CONVENTION));
        for q in [2, 3, 5] {
            assert_eq!(count_points(&p, q, DEFAULT_ENUMERATION_CAP).unwrap(), 1);
        }
        let hopf = variety_presentation(&w(2, &[1, 1, 1])).unwrap();
        let counts: Vec<(u64, u64)> = [2u64, 3, 5]
            .iter()
            .map(|&q| (q, count_points(&hopf, q, DEFAULT_ENUMERATION_CAP).unwrap()))
            .collect();
        assert_eq!(counts, vec![(2, 3), (3, 7), (5, 21)]);
        assert_eq!(fit_torus_exponent(&counts), Some(0));
        let two = variety_presentation(&w(2, &[1, 1])).unwrap();
        assert_eq!(count_points(&two, 5, DEFAULT_ENUMERATION_CAP).unwrap(), 4);
    }

    #[test]
    fn torus_fit() {
        let f = |q: u64, a: u32| (q, (q - 1).pow(a) * (q * q - q + 1));
        assert_eq!(fit_torus_exponent(&[f(2, 3), f(3, 3), f(5, 3)]), Some(3));
        // (q−1)(q²+1) is not of that shape
        assert_eq!(fit_torus_exponent(&[(2, 5), (3, 20), (5, 104)]), None);
    }

    #[test]
    fn word_validation() {
        assert_eq!(BraidWord::parse(3, "1, 2 1").unwrap().letters(), &[1, 2, 1]);
        assert!(matches!(BraidWord::parse(3, "1,3"), Err(BraidError::BadLetter { letter: 3, .. })));
        assert!(matches!(BraidWord::parse(1, ""), Err(BraidError::BadStrands(1))));
        assert!(BraidWord::parse(3, "1,x").is_err());
        assert!(BraidWord::parse(3, "0").is_err());
    }
}
