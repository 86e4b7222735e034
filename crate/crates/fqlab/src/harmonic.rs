//! Generalized harmonic numbers H_n^(r) = sum_{i=1..n} 1/i^r, exact.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::CheckError;
use crate::rational::{rat_recip, Rational};

/// H_n^(r) computed fresh. H_0^(r) = 0.
pub fn harmonic(n: u32, r: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n as u64 {
        acc += rat_recip(&BigInt::from(k).pow(r));
    }
    acc
}

/// H_n^(t) - H_{n-j}^(t), the difference every closed form below is built of.
pub fn harmonic_diff(n: u32, j: u32, t: u32) -> Rational {
    assert!(j <= n, "j={j} exceeds n={n}");
    let mut acc = Rational::zero();
    for k in (n - j + 1) as u64..=n as u64 {
        acc += rat_recip(&BigInt::from(k).pow(t));
    }
    acc
}

/// Table of H_k^(r) for 0 <= k <= max_n, 1 <= r <= max_r, built once by the
/// defining recurrence H_k = H_{k-1} + 1/k^r and shared across a sweep.
pub struct HarmonicTable {
    rows: Vec<Vec<Rational>>, // rows[r-1][k] = H_k^(r)
}

impl HarmonicTable {
    pub fn new(max_n: u32, max_r: u32) -> Self {
        assert!(max_r >= 1);
        let mut rows = Vec::with_capacity(max_r as usize);
        for r in 1..=max_r {
            let mut row = Vec::with_capacity(max_n as usize + 1);
            row.push(Rational::zero());
            for k in 1..=max_n as u64 {
                let next = row.last().unwrap() + rat_recip(&BigInt::from(k).pow(r));
                row.push(next);
            }
            rows.push(row);
        }
        HarmonicTable { rows }
    }

    pub fn get(&self, k: u32, r: u32) -> &Rational {
        &self.rows[r as usize - 1][k as usize]
    }

    pub fn diff(&self, n: u32, j: u32, r: u32) -> Rational {
        self.get(n, r) - self.get(n - j, r)
    }
}

/// sum over 1 <= i1 < i2 < i3 <= n of 1/(i1 i2 i3), by the literal triple
/// loop. Needs n >= 3 to be a nonempty sum.
pub fn triple_harmonic_sum(n: u32) -> Result<Rational, CheckError> {
    if n < 3 {
        return Err(CheckError::domain(format!(
            "triple harmonic sum needs n >= 3, got {n}"
        )));
    }
    let mut acc = Rational::zero();
    for i1 in 1..=n as u64 {
        for i2 in i1 + 1..=n as u64 {
            for i3 in i2 + 1..=n as u64 {
                acc += rat_recip(&BigInt::from(i1 * i2 * i3));
            }
        }
    }
    Ok(acc)
}

/// All values of the triple sum for 0..=max_n at once, by growing n one step
/// at a time: the terms with largest index i3 = n contribute (1/n) times the
/// pair sum over 1 <= i1 < i2 < n, and the pair sum grows the same way from
/// the plain harmonic prefix. Pure regrouping of the same finite sums.
pub fn triple_harmonic_prefix(max_n: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max_n as usize + 1);
    let mut h = Rational::zero(); // H_{n-1} after the update below
    let mut pairs = Rational::zero(); // sum 1/(i1 i2) over i1 < i2 <= n-1
    let mut triples = Rational::zero();
    for n in 0..=max_n as u64 {
        if n >= 1 {
            let inv_n = rat_recip(&BigInt::from(n));
            triples += &pairs * &inv_n;
            pairs += &h * &inv_n;
            h += inv_n;
        }
        out.push(triples.clone());
    }
    out
}
