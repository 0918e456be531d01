//! Exact scalar arithmetic.
//!
//! Every identity in this library is decided by literal equality of matrix
//! entries, so scalars must form a field with exact, canonical representations.
//! Two backends are provided: arbitrary-precision rationals and prime fields
//! with a runtime modulus.
//!
//! Because the modulus of a prime field is only known at runtime, arithmetic
//! goes through a field *descriptor* object rather than bare element methods.
//! The descriptor is a zero-sized type for the rationals, so nothing is paid
//! there.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::CoreError;

/// A field of scalars together with a canonical element representation.
///
/// Elements must have canonical form: equal values compare equal with `==`.
pub trait Field: Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Division by zero is rejected, never absorbed.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, CoreError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, CoreError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;

    /// Parse the wire format: a decimal integer or `a/b`.
    fn parse(&self, s: &str) -> Result<Self::Elem, CoreError>;

    /// Canonical rendering, inverse to `parse`.
    fn render(&self, a: &Self::Elem) -> String;

    /// Short field name for reports ("Q", "F7", ...).
    fn name(&self) -> String;
}

/// The rationals with arbitrary-precision numerator and denominator.
///
/// `BigRational` keeps values reduced to lowest terms with positive
/// denominator, so `==` is exact value equality.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, CoreError> {
        if a.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse(&self, s: &str) -> Result<BigRational, CoreError> {
        let s = s.trim();
        let bad = || CoreError::ScalarParse {
            input: s.to_string(),
            field: self.name(),
        };
        if let Some((num, den)) = s.split_once('/') {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(CoreError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        } else {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }

    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn name(&self) -> String {
        "Q".to_string()
    }
}

/// The prime field of `modulus` elements; residues are stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self, CoreError> {
        if !is_prime_u64(modulus) {
            return Err(CoreError::NotPrime { candidate: modulus });
        }
        Ok(PrimeField { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        let p = self.modulus as i128;
        (v.rem_euclid(p)) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        let p = self.modulus as u128;
        ((*a as u128 + p - *b as u128 % p) % p) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - *a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }
    fn inv(&self, a: &u64) -> Result<u64, CoreError> {
        if *a == 0 {
            return Err(CoreError::DivisionByZero);
        }
        Ok(pow_mod(*a, self.modulus - 2, self.modulus))
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }

    fn parse(&self, s: &str) -> Result<u64, CoreError> {
        let s = s.trim();
        let bad = || CoreError::ScalarParse {
            input: s.to_string(),
            field: self.name(),
        };
        if let Some((num, den)) = s.split_once('/') {
            let n: i128 = num.trim().parse().map_err(|_| bad())?;
            let d: i128 = den.trim().parse().map_err(|_| bad())?;
            let d = self.reduce_i128(d);
            self.div(&self.reduce_i128(n), &d)
        } else {
            let n: i128 = s.parse().map_err(|_| bad())?;
            Ok(self.reduce_i128(n))
        }
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        format!("F{}", self.modulus)
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
