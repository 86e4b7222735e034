//! Exact rational arithmetic used by every identity check.
//!
//! `Rational` is `num_rational::BigRational`: always reduced, denominator
//! positive, zero canonicalized to 0/1. The helpers here exist so the rest of
//! the crate never touches raw numerator/denominator constructors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from a single integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact reciprocal 1/n. Panics on n = 0.
pub fn rat_recip(n: &BigInt) -> Rational {
    Rational::new(BigInt::one(), n.clone())
}

/// x^k by repeated squaring on exact rationals. k = 0 gives 1, also for x = 0.
pub fn rat_pow(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Canonical text form: integers render bare, everything else as "a/b" with
/// the sign on the numerator. Two rationals render equal iff they are equal.
pub fn render_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True when x is a (possibly negative) integer.
pub fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Sum of reciprocals 1/k^r over an explicit iterator of positive integers.
pub fn recip_power_sum<I: IntoIterator<Item = u64>>(ks: I, r: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in ks {
        debug_assert!(k > 0);
        acc += rat_recip(&BigInt::from(k).pow(r));
    }
    acc
}

#[allow(unused)]
fn abs(x: &Rational) -> Rational {
    Signed::abs(x)
}
