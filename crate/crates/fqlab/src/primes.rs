//! Primality testing and prime enumeration for sweeps.
//!
//! Below ten million a sieve is cheaper than repeated Miller-Rabin; above it,
//! a deterministic Miller-Rabin with a fixed witness set is exact for every
//! u64 up to 3.3e18, which bounds the sweep range this crate accepts.

use crate::modular::{mul_mod, pow_mod};

/// Every composite below 3,317,044,064,679,887,385,961,981 fails one of
/// these witnesses, so the test is deterministic over the accepted range.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Largest value `is_prime` accepts.
pub const PRIMALITY_BOUND: u64 = 3_300_000_000_000_000_000;

const SIEVE_CUTOFF: u64 = 10_000_000;

pub fn is_prime(n: u64) -> bool {
    assert!(
        n <= PRIMALITY_BOUND,
        "{n} exceeds the deterministic witness bound"
    );
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in [lo, hi], ascending. Sieved below ten million, trial
/// Miller-Rabin on odd candidates above.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if hi < 2 || hi < lo {
        return out;
    }
    let sieve_hi = hi.min(SIEVE_CUTOFF - 1);
    if lo <= sieve_hi {
        let mut composite = vec![false; sieve_hi as usize + 1];
        let mut p = 2usize;
        while p * p <= sieve_hi as usize {
            if !composite[p] {
                for q in (p * p..=sieve_hi as usize).step_by(p) {
                    composite[q] = true;
                }
            }
            p += 1;
        }
        for n in lo.max(2)..=sieve_hi {
            if !composite[n as usize] {
                out.push(n);
            }
        }
    }
    if hi >= SIEVE_CUTOFF {
        let mut n = lo.max(SIEVE_CUTOFF);
        if n % 2 == 0 {
            n += 1;
        }
        while n <= hi {
            if is_prime(n) {
                out.push(n);
            }
            n += 2;
        }
    }
    out
}
