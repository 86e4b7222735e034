//! Residue arithmetic with a modulus carried on every value.
//!
//! Contents:
//! - `Residue`: a value tagged with its modulus; mixing moduli is a
//!   programming error and panics immediately.
//! - `mod_inverse`, `batch_inverses`: extended-Euclid inversion, single and
//!   amortized (one gcd for a whole block of values).
//! - `reduce_mod`: canonical image of an exact rational in Z/m.
//! - `residues_congruent`: the congruence a/b = c/d (mod m) via inversion of
//!   the denominators.
//!
//! Moduli are u64 with u128 intermediates, which covers every sweep this
//! crate performs (the prime generator itself stops below 2^62).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::CheckError;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Wraps a value already in [0, modulus).
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        assert!(value < modulus, "value {value} out of range for modulus {modulus}");
        Residue { value, modulus }
    }

    pub fn from_i128(x: i128, modulus: u64) -> Self {
        assert!(modulus >= 2);
        let m = modulus as i128;
        Residue::new(x.rem_euclid(m) as u64, modulus)
    }

    pub fn from_bigint(x: &BigInt, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let v = x.mod_floor(&m);
        Residue::new(v.to_u64().expect("mod_floor result fits u64"), modulus)
    }

    pub fn zero(modulus: u64) -> Self {
        Residue::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Residue::new(1 % modulus, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check_same(&self, rhs: &Residue) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "mixed moduli: {} vs {}",
            self.modulus, rhs.modulus
        );
    }

    pub fn pow(&self, mut e: u64) -> Residue {
        let mut base = self.value;
        let mut acc: u64 = 1 % self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base, self.modulus);
            }
            e >>= 1;
            base = mul_mod(base, base, self.modulus);
        }
        Residue::new(acc, self.modulus)
    }

    pub fn inv(&self) -> Result<Residue, CheckError> {
        Ok(Residue::new(mod_inverse_u64(self.value, self.modulus)?, self.modulus))
    }

    /// self * k for a possibly negative integer scalar.
    pub fn scale(&self, k: i64) -> Residue {
        let kk = Residue::from_i128(k as i128, self.modulus);
        *self * kk
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check_same(&rhs);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Residue::new(s as u64, self.modulus)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.check_same(&rhs);
        let m = self.modulus as u128;
        let d = (self.value as u128 + m - rhs.value as u128) % m;
        Residue::new(d as u64, self.modulus)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check_same(&rhs);
        Residue::new(mul_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::zero(self.modulus) - self
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut b = base % m;
    let mut acc: u64 = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        e >>= 1;
        b = mul_mod(b, b, m);
    }
    acc
}

/// Inverse of a mod m for any integer a, via extended Euclid.
/// Fails with the offending gcd when a and m share a factor.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64, CheckError> {
    assert!(m >= 2, "modulus must be at least 2");
    let reduced = (a as i128).rem_euclid(m as i128) as u64;
    mod_inverse_u64(reduced, m)
}

pub(crate) fn mod_inverse_u64(a: u64, m: u64) -> Result<u64, CheckError> {
    // Iterative extended Euclid on signed 128-bit words.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(CheckError::NotInvertible {
            value: a,
            modulus: m,
            gcd: old_r.unsigned_abs() as u64,
        });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Inverses of a whole slice in O(n) multiplications plus one gcd
/// (prefix-product trick). Every entry must be invertible mod m.
pub fn batch_inverses(values: &[u64], m: u64) -> Result<Vec<u64>, CheckError> {
    let n = values.len();
    let mut prefix = vec![0u64; n];
    let mut acc: u64 = 1 % m;
    for (i, &v) in values.iter().enumerate() {
        prefix[i] = acc;
        acc = mul_mod(acc, v % m, m);
    }
    let mut inv_acc = match mod_inverse_u64(acc, m) {
        Ok(x) => x,
        Err(_) => {
            // Name the first non-invertible entry rather than the product.
            for &v in values {
                if let Err(e) = mod_inverse_u64(v % m, m) {
                    return Err(e);
                }
            }
            unreachable!("product not invertible but every factor is");
        }
    };
    let mut out = vec![0u64; n];
    for i in (0..n).rev() {
        out[i] = mul_mod(inv_acc, prefix[i], m);
        inv_acc = mul_mod(inv_acc, values[i] % m, m);
    }
    Ok(out)
}

/// Canonical image of an exact rational in Z/m. Fails when the denominator
/// shares a factor with m.
pub fn reduce_mod(x: &Rational, m: u64) -> Result<Residue, CheckError> {
    let mb = BigInt::from(m);
    let den = x.denom().mod_floor(&mb).to_u64().expect("fits u64");
    let den_inv = mod_inverse_u64(den, m).map_err(|e| match e {
        CheckError::NotInvertible { gcd, .. } => CheckError::NotInvertible {
            value: den,
            modulus: m,
            gcd,
        },
        other => other,
    })?;
    let num = Residue::from_bigint(x.numer(), m);
    Ok(num * Residue::new(den_inv, m))
}

/// The congruence x = y (mod m) for exact rationals, defined through
/// `reduce_mod` on both sides.
pub fn residues_congruent(x: &Rational, y: &Rational, m: u64) -> Result<bool, CheckError> {
    Ok(reduce_mod(x, m)? == reduce_mod(y, m)?)
}

/// Reduce a possibly huge integer mod m.
pub fn bigint_mod(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    debug_assert!(!r.is_negative());
    r.to_u64().expect("mod_floor result fits u64")
}
