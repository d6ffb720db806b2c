use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgError;

/// Largest modulus accepted for prime fields.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Deterministic primality test for moduli below 2^31 (trial division).
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q < 4 {
        return true;
    }
    if q.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Checks that `q` is a prime no larger than [`MAX_MODULUS`].
pub fn check_prime(q: u64) -> Result<u64, AlgError> {
    if q <= MAX_MODULUS && is_prime(q) {
        Ok(q)
    } else {
        Err(AlgError::NotPrime(q))
    }
}

/// An element of the prime field 𝔽_q, always stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    /// Builds `value mod q`. The caller is responsible for `q` being prime;
    /// use [`check_prime`] on untrusted moduli.
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Fp { value: v, modulus }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let v = value.mod_floor(&m).to_u64().expect("reduced value fits in u64");
        Fp { value: v, modulus }
    }

    /// Reduces a rational modulo `q`; fails when `q` divides the denominator.
    pub fn from_rational(value: &BigRational, modulus: u64) -> Option<Self> {
        let den = Fp::from_bigint(value.denom(), modulus);
        let num = Fp::from_bigint(value.numer(), modulus);
        den.inv().map(|d| num * d)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::from_u64(1, self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "prime field elements with different moduli"
        );
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: ((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Which coefficient field a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    Prime(u64),
}

/// An exact scalar: either a rational number or an element of 𝔽_q.
///
/// Arithmetic between scalars of different domains is a programming error
/// and panics; constructors that take untrusted input validate domains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(Fp),
}

impl Scalar {
    pub fn zero(domain: Domain) -> Self {
        match domain {
            Domain::Rational => Scalar::Rational(BigRational::zero()),
            Domain::Prime(q) => Scalar::Prime(Fp::from_u64(0, q)),
        }
    }

    pub fn one(domain: Domain) -> Self {
        match domain {
            Domain::Rational => Scalar::Rational(BigRational::one()),
            Domain::Prime(q) => Scalar::Prime(Fp::from_u64(1, q)),
        }
    }

    pub fn from_int(value: i64, domain: Domain) -> Self {
        match domain {
            Domain::Rational => Scalar::Rational(BigRational::from_integer(value.into())),
            Domain::Prime(q) => Scalar::Prime(Fp::new(value, q)),
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Rational(_) => Domain::Rational,
            Scalar::Prime(x) => Domain::Prime(x.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime(x) => x.value() == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Prime(x) => x.inv().map(Scalar::Prime),
        }
    }

    /// Integer power; negative exponents require an invertible base.
    pub fn pow(&self, exp: i64) -> Option<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Some(match base {
            Scalar::Rational(r) => {
                let e = u32::try_from(e).ok()?;
                Scalar::Rational(num_traits::pow::Pow::pow(r, e))
            }
            Scalar::Prime(x) => Scalar::Prime(x.pow(e)),
        })
    }

    /// Moves a scalar into `domain`. Rationals reduce into 𝔽_q when the
    /// denominator is invertible; prime-field elements only stay put.
    pub fn to_domain(&self, domain: Domain) -> Option<Scalar> {
        match (self, domain) {
            (Scalar::Rational(r), Domain::Rational) => Some(Scalar::Rational(r.clone())),
            (Scalar::Rational(r), Domain::Prime(q)) => Fp::from_rational(r, q).map(Scalar::Prime),
            (Scalar::Prime(x), Domain::Prime(q)) if x.modulus() == q => Some(Scalar::Prime(*x)),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Prime(_) => None,
        }
    }

    pub fn as_fp(&self) -> Option<Fp> {
        match self {
            Scalar::Prime(x) => Some(*x),
            Scalar::Rational(_) => None,
        }
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(
            self.domain(),
            other.domain(),
            "arithmetic between scalars of different domains"
        );
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(*a + *b),
            _ => unreachable!(),
        }
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(*a - *b),
            _ => unreachable!(),
        }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(*a * *b),
            _ => unreachable!(),
        }
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime(a) => Scalar::Prime(-*a),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write_rational(f, r),
            Scalar::Prime(x) => write!(f, "{x}"),
        }
    }
}

pub(crate) fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Prime(x) => s.serialize_u64(x.value()),
            Scalar::Rational(r) if r.denom().is_one() && r.numer().abs() < BigInt::from(1i64 << 53) => {
                s.serialize_i64(r.numer().to_i64().expect("checked bound"))
            }
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Parses an integer or `p/q` rational literal.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}
