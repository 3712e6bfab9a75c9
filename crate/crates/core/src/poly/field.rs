//! Coefficient fields: exact rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

/// Which field coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rational,
    Prime(u32),
}

impl FieldKind {
    pub fn prime(p: u32) -> Result<Self> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime")));
        }
        Ok(FieldKind::Prime(p))
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "q"),
            FieldKind::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Parses `q` or `fp:<p>`; a bare `fp` means the default prime.
impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldKind::Rational),
            "fp" => FieldKind::prime(DEFAULT_PRIME),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidField(format!("expected q or fp:<p>, got `{s}`")))?;
                FieldKind::prime(p)
            }
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Field element interface used by the polynomial kernel.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_i64(v: i64, field: FieldKind) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn kind(&self) -> FieldKind;
}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Coeff for Rational {
    fn from_i64(v: i64, _field: FieldKind) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    #[inline]
    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rational(self.0.recip())
    }

    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }
}

/// Element of `Z/pZ`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(v: i64, p: u32) -> Self {
        Fp { value: v.rem_euclid(p as i64) as u32, modulus: p }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self) -> i64 {
        let v = self.value as i64;
        if v > (self.modulus / 2) as i64 {
            v - self.modulus as i64
        } else {
            v
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl Coeff for Fp {
    fn from_i64(v: i64, field: FieldKind) -> Self {
        match field {
            FieldKind::Prime(p) => Fp::new(v, p),
            FieldKind::Rational => panic!("Fp coefficients need a prime field"),
        }
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    #[inline]
    fn is_one(&self) -> bool {
        self.value == 1
    }

    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        let s = self.value as u64 + rhs.value as u64;
        let p = self.modulus as u64;
        Fp { value: (if s >= p { s - p } else { s }) as u32, modulus: self.modulus }
    }

    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        let p = self.modulus as u64;
        let s = self.value as u64 + p - rhs.value as u64;
        Fp { value: (if s >= p { s - p } else { s }) as u32, modulus: self.modulus }
    }

    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        let v = (self.value as u64 * rhs.value as u64) % self.modulus as u64;
        Fp { value: v as u32, modulus: self.modulus }
    }

    #[inline]
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }

    fn inv(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        let g = (self.value as i64).extended_gcd(&(self.modulus as i64));
        Fp::new(g.x, self.modulus)
    }

    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.modulus)
    }
}

/// Rational coefficients are rendered with a sign handled by the caller.
pub(crate) fn split_sign(c: &impl Coeff) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_tags() {
        assert_eq!("q".parse::<FieldKind>().unwrap(), FieldKind::Rational);
        assert_eq!("fp".parse::<FieldKind>().unwrap(), FieldKind::Prime(DEFAULT_PRIME));
        assert_eq!("fp:101".parse::<FieldKind>().unwrap(), FieldKind::Prime(101));
        assert!("fp:100".parse::<FieldKind>().is_err());
        assert!("fp:2".parse::<FieldKind>().is_err());
        assert!("r".parse::<FieldKind>().is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let p = FieldKind::Prime(7);
        let a = Fp::from_i64(3, p);
        let b = Fp::from_i64(5, p);
        assert_eq!(a.add(&b), Fp::from_i64(1, p));
        assert_eq!(a.sub(&b), Fp::from_i64(-2, p));
        assert_eq!(a.mul(&b), Fp::from_i64(1, p));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(Fp::from_i64(-1, p).to_string(), "-1");
        for v in 1..7 {
            assert!(Fp::new(v, 7).mul(&Fp::new(v, 7).inv()).is_one());
        }
    }

    #[test]
    fn rational_arithmetic() {
        let a = Rational::new(1, 2);
        let b = Rational::new(-2, 3);
        assert_eq!(a.add(&b), Rational::new(-1, 6));
        assert_eq!(a.mul(&b).inv(), Rational::new(-3, 1));
        assert_eq!(b.to_string(), "-2/3");
        assert_eq!(split_sign(&b), (true, "2/3".to_string()));
    }
}
