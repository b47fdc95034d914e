//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Everything downstream (matrices, polynomial evaluation, reduction
//! certificates) is generic over [`Field`]. No floating point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("denominator of {value} vanishes modulo {modulus}")]
    DenominatorVanishes { value: String, modulus: u64 },
}

/// Inclusive integer range that random assignment values are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleRange {
    pub lo: i64,
    pub hi: i64,
}

impl SampleRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty sample range {lo}:{hi}");
        Self { lo, hi }
    }
}

impl Default for SampleRange {
    fn default() -> Self {
        Self { lo: -10, hi: 10 }
    }
}

/// An exact field. Elements are plain values; the field itself carries any
/// context they need (for a prime field, the modulus).
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Embed an exact rational. Fails over GF(p) when the denominator is
    /// divisible by p.
    fn from_rational(&self, value: &BigRational) -> Result<Self::Elem, FieldError>;
    /// Draw one element for verification sampling. Over the rationals this is
    /// a uniform integer in `range`; over GF(p) it is uniform on the whole
    /// field and `range` is ignored.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, range: SampleRange) -> Self::Elem;
    fn name(&self) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|i| self.mul(a, &i))
    }
}

/// The field of arbitrary-precision rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn from_rational(&self, value: &BigRational) -> Result<BigRational, FieldError> {
        Ok(value.clone())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, range: SampleRange) -> BigRational {
        BigRational::from_integer(BigInt::from(rng.gen_range(range.lo..=range.hi)))
    }

    fn name(&self) -> String {
        "rational".to_owned()
    }
}

/// GF(p) for a prime modulus. Elements are reduced representatives in 0..p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self, FieldError> {
        if is_prime_u64(modulus) {
            Ok(Self { modulus })
        } else {
            Err(FieldError::NotPrime(modulus))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
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

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - *a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Extended Euclid on (a, p); p prime so gcd is 1.
        let (mut r0, mut r1) = (*a as i128, self.modulus as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(self.modulus as i128) as u64)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn from_rational(&self, value: &BigRational) -> Result<u64, FieldError> {
        let p = BigInt::from(self.modulus);
        let num = value.numer().mod_floor(&p).to_u64().expect("residue fits in u64");
        let den = value.denom().mod_floor(&p).to_u64().expect("residue fits in u64");
        let den_inv = self.inv(&den).ok_or_else(|| FieldError::DenominatorVanishes {
            value: value.to_string(),
            modulus: self.modulus,
        })?;
        Ok(self.mul(&num, &den_inv))
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, _range: SampleRange) -> u64 {
        rng.gen_range(0..self.modulus)
    }

    fn name(&self) -> String {
        format!("gf({})", self.modulus)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the fixed base set decides primality for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}
