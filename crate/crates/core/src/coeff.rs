//! Exact coefficient fields.
//!
//! Two concrete fields implement [`Field`]: the rationals (backed by
//! `num_rational::BigRational`, always stored reduced with a positive
//! denominator) and the prime fields `F_p` for odd primes `p < 2^32`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number, reduced, denominator positive, zero is `0/1`.
pub type Rational = num_rational::BigRational;

/// Largest modulus accepted by [`PrimeField::new`] (exclusive).
pub const MAX_MODULUS: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields: mod {0} and mod {1}")]
    MixedModulus(u64, u64),
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^32")]
    ModulusTooLarge(u64),
    #[error("denominator of {value} is divisible by {modulus}; reduction is undefined")]
    NonInvertibleDenominator { value: String, modulus: u64 },
}

/// Operations shared by every coefficient field.
///
/// The arithmetic operators panic on operands from different prime fields;
/// use the `checked_*` methods to get a [`FieldError`] instead. Elements of
/// a prime field carry their modulus, so constants are built from an
/// existing element of the same field (`zero_like`, `one_like`, ...).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Image of an integer under the canonical ring map `Z -> F`.
    fn embed_bigint(&self, n: &BigInt) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn inverse(&self) -> Result<Self, FieldError>;

    fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError>;
    fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError>;
    fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.checked_mul(&rhs.inverse()?)
    }

    fn embed_i64(&self, n: i64) -> Self {
        self.embed_bigint(&BigInt::from(n))
    }

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn embed_bigint(&self, n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self + rhs)
    }

    fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self - rhs)
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * rhs)
    }
}

/// Builds `num/den` as a reduced rational. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Deterministic primality test by trial division; fine for `n < 2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// The prime field `F_p` for an odd prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if p == 2 || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, v: i64) -> Fp {
        Fp {
            value: v.rem_euclid(self.p as i64) as u64,
            modulus: self.p,
        }
    }

    pub fn zero(&self) -> Fp {
        self.element(0)
    }

    pub fn one(&self) -> Fp {
        self.element(1)
    }

    pub fn from_bigint(&self, n: &BigInt) -> Fp {
        let r = n.mod_floor(&BigInt::from(self.p));
        Fp {
            value: r.to_u64().expect("residue fits in u64"),
            modulus: self.p,
        }
    }

    /// Every element `0, 1, ..., p - 1` in order.
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p).map(move |v| Fp {
            value: v,
            modulus: self.p,
        })
    }
}

/// An element of `F_p`; the value is always in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    fn same_field(&self, rhs: &Self) -> Result<(), FieldError> {
        if self.modulus == rhs.modulus {
            Ok(())
        } else {
            Err(FieldError::MixedModulus(self.modulus, rhs.modulus))
        }
    }

    fn with(&self, value: u64) -> Fp {
        Fp {
            value,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        self.with(0)
    }

    fn one_like(&self) -> Self {
        self.with(1)
    }

    fn embed_bigint(&self, n: &BigInt) -> Self {
        self.field().from_bigint(n)
    }

    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // Fermat: a^(p-2) = a^-1 for prime p.
        Ok(self.pow(self.modulus - 2))
    }

    fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with((self.value + rhs.value) % self.modulus))
    }

    fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with((self.value + self.modulus - rhs.value) % self.modulus))
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with(self.value * rhs.value % self.modulus))
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.checked_add(&rhs).expect("prime field addition")
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.checked_sub(&rhs).expect("prime field subtraction")
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.checked_mul(&rhs).expect("prime field multiplication")
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.with((self.modulus - self.value) % self.modulus)
    }
}

/// Reduces a rational into `F_p` as `numerator * denominator^-1`.
pub fn rational_mod_p(x: &Rational, field: &PrimeField) -> Result<Fp, FieldError> {
    let den = field.from_bigint(x.denom());
    if den.is_zero_elem() {
        return Err(FieldError::NonInvertibleDenominator {
            value: x.to_string(),
            modulus: field.modulus(),
        });
    }
    let num = field.from_bigint(x.numer());
    Ok(num * den.inverse()?)
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn signum(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
