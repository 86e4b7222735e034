//! Integer combinatorics: factorials, binomials, falling factorials.
//!
//! Everything returns `BigInt`; the identity checks routinely need values
//! like C(200, 100) that overflow any machine word.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// C(n, k), with 0 for k outside [0, n].
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // falling factorial over k! in one exact division
    let mut num = BigInt::one();
    for i in 0..k {
        num *= n - i;
    }
    num / factorial(k as u32)
}

/// (n)_j = n (n-1) ... (n-j+1), with (n)_0 = 1. n may be negative.
pub fn falling_factorial(n: i64, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j as i64 {
        acc *= n - i;
    }
    acc
}
