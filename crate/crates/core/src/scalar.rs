//! Exact scalars over the rationals and over prime fields.
//!
//! A [`Scalar`] carries its own field so that arithmetic never needs outside
//! context. Mixing scalars from two different fields is a logic error and
//! panics; every public constructor that takes foreign input goes through
//! [`FieldSpec`] and reports failures as [`Error`]s instead.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// A validated prime modulus below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The ground field: ℚ or 𝔽p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(Prime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(FieldSpec::PrimeField(Prime::new(p)?))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p.get(),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::PrimeField(_))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let m = p.get() as i64;
                Scalar::Residue {
                    value: n.rem_euclid(m) as u32,
                    modulus: p.get(),
                }
            }
        }
    }

    /// Maps a rational number into this field; fails when the denominator
    /// vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(q.clone())),
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(p.get());
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &m) + &m) % &m;
                    r.to_u32().expect("residue below modulus")
                };
                let num = self.residue(reduce(q.numer()));
                let den = self.residue(reduce(q.denom()));
                let inv = den.inv().map_err(|_| Error::NotInField {
                    value: q.to_string(),
                    field: self,
                })?;
                Ok(&num * &inv)
            }
        }
    }

    fn residue(self, value: u32) -> Scalar {
        match self {
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: value % p.get(),
                modulus: p.get(),
            },
            FieldSpec::Rationals => unreachable!("residue requested over Q"),
        }
    }

    /// Parses a scalar literal: "n" or "n/d" over ℚ, a decimal residue
    /// (any integer, reduced mod p) over 𝔽p. Fractions are also accepted
    /// over 𝔽p when the denominator is invertible.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let q = parse_rational(text)?;
        self.from_rational(&q)
    }

    /// All field elements in residue order, for finite fields only.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some((0..p.get()).map(|v| self.residue(v)).collect()),
        }
    }

    pub fn order(self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(p.get() as u64),
        }
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid scalar literal {text:?}"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.trim_start_matches(['-', '+']).chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(s).map_err(|_| bad())
    };
    let num = parse_int(n)?;
    let den = match d {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{}", p.get()),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix('F')
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?} (expected \"Q\" or \"F<p>\")")))?;
        FieldSpec::prime(p)
    }
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// invariant `BigRational` maintains); residues lie in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(Prime(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// Residue value for prime-field scalars.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    /// Total order used for deterministic tie-breaking (not a field order).
    pub fn sort_key(&self) -> (BigRational, u32) {
        match self {
            Scalar::Rational(q) => (q.clone(), 0),
            Scalar::Residue { value, .. } => (BigRational::zero(), *value),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) if m == n => {
                Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % *m as u64) as u32,
                    modulus: *m,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) if m == n => {
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % *m as u64) as u32,
                    modulus: *m,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) if m == n => {
                *a = ((*a as u64 + *b as u64) % *m as u64) as u32;
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => mismatch(self, rhs),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &(-rhs);
    }
}
