use std::fmt;

use super::laurent::LaurentPoly;
use super::scalar::Scalar;

/// Commutative ring operations needed by [`Matrix`].
pub trait RingElem: Clone + PartialEq + fmt::Debug {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl RingElem for LaurentPoly {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl RingElem for Scalar {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

/// Dense row-major matrix over a commutative ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: RingElem> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Option<Self> {
        (data.len() == rows * cols).then_some(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize, zero: &T, one: &T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// `self · rhs`, or `None` on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix<T>, zero: &T) -> Option<Matrix<T>> {
        if self.cols != rhs.rows {
            return None;
        }
        Some(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        }))
    }

    pub fn trace(&self, zero: &T) -> Option<T> {
        if self.rows != self.cols {
            return None;
        }
        Some((0..self.rows).fold(zero.clone(), |acc, i| acc.add(self.get(i, i))))
    }

    /// Determinant by cofactor expansion along the first row; intended for
    /// the small matrices that appear in representation charts.
    pub fn det(&self, zero: &T, one: &T) -> Option<T> {
        if self.rows != self.cols {
            return None;
        }
        let idx: Vec<usize> = (0..self.cols).collect();
        Some(self.minor_det(0, &idx, zero, one))
    }

    fn minor_det(&self, row: usize, cols: &[usize], zero: &T, one: &T) -> T {
        if cols.is_empty() {
            return one.clone();
        }
        let mut acc = zero.clone();
        for (pos, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul(&self.minor_det(row + 1, &rest, zero, one));
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn map<U: RingElem>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: RingElem + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::Domain;

    fn m(rows: usize, cols: usize, v: &[i64]) -> Matrix<Scalar> {
        Matrix::new(rows, cols, v.iter().map(|&x| Scalar::from_int(x, Domain::Rational)).collect()).unwrap()
    }

    #[test]
    fn product_trace_det() {
        let z = Scalar::zero(Domain::Rational);
        let o = Scalar::one(Domain::Rational);
        let a = m(2, 2, &[1, 2, 3, 4]);
        let b = m(2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.mul(&b, &z).unwrap(), m(2, 2, &[2, 1, 4, 3]));
        assert_eq!(a.trace(&z).unwrap(), Scalar::from_int(5, Domain::Rational));
        assert_eq!(a.det(&z, &o).unwrap(), Scalar::from_int(-2, Domain::Rational));
        let c = m(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]);
        assert_eq!(c.det(&z, &o).unwrap(), Scalar::from_int(6, Domain::Rational));
        assert!(m(2, 3, &[0; 6]).mul(&a, &z).is_none());
        assert!(m(2, 3, &[0; 6]).trace(&z).is_none());
    }
}
