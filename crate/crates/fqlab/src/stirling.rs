//! Unsigned Stirling numbers of the first kind.
//!
//! stf(n, k) counts permutations of n elements with k cycles and obeys
//! stf(n+1, k) = n stf(n, k) + stf(n, k-1). The signed connection to falling
//! factorials, (x)_n = sum_k (-1)^(n-k) stf(n, k) x^k, is what the identity
//! checks consume and what the tests verify by expanding (x)_n directly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Triangle of stf(n, k) for 0 <= k <= n <= max_n.
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max_n: u32) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![BigInt::one()]);
        for n in 0..max_n as u64 {
            let prev = &rows[n as usize];
            let mut row = vec![BigInt::zero(); n as usize + 2];
            for k in 0..=n as usize {
                // stf(n+1, k) picks up n * stf(n, k), stf(n+1, k+1) picks up stf(n, k)
                row[k] += &prev[k] * n;
                row[k + 1] += &prev[k];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    /// stf(n, k); zero outside the triangle.
    pub fn get(&self, n: u32, k: i64) -> BigInt {
        if k < 0 || k as usize > n as usize {
            return BigInt::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    pub fn max_n(&self) -> u32 {
        self.rows.len() as u32 - 1
    }
}

/// One-off stf(n, k) without keeping a table around.
pub fn stirling1(n: u32, k: i64) -> BigInt {
    StirlingTable::new(n).get(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{poly_from_ints, DensePoly};
    use crate::rational::rat_int;

    /// Oracle: expand (x)_n = x (x-1) ... (x-n+1) as a polynomial and read
    /// stf(n, k) off the coefficient of x^k as (-1)^(n-k) times it.
    fn stirling_via_expansion(n: u32, k: u32) -> BigInt {
        let mut prod = DensePoly::constant(rat_int(1));
        for i in 0..n as i64 {
            prod = &prod * &poly_from_ints(&[-i, 1]);
        }
        let c = prod.coefficient(k as usize);
        assert!(c.denom() == &BigInt::one());
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        c.numer() * sign
    }

    #[test]
    fn small_values_against_expansion_oracle() {
        assert_eq!(stirling_via_expansion(4, 2), BigInt::from(11));
        assert_eq!(stirling1(4, 2), BigInt::from(11));
        assert_eq!(stirling1(3, 1), BigInt::from(2));
        assert_eq!(stirling1(5, 1), BigInt::from(24)); // (n-1)!
        assert_eq!(stirling1(6, 6), BigInt::one());
        assert_eq!(stirling1(6, 0), BigInt::zero());
        assert_eq!(stirling1(6, 7), BigInt::zero());
        assert_eq!(stirling1(6, -1), BigInt::zero());
        assert_eq!(stirling1(0, 0), BigInt::one());
    }

    #[test]
    fn triangle_matches_falling_factorial_expansion_up_to_30() {
        let table = StirlingTable::new(30);
        let mut prod = DensePoly::constant(rat_int(1));
        for n in 0..=30u32 {
            // prod holds (x)_n at this point
            for k in 0..=n {
                let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
                let expect = prod.coefficient(k as usize).numer() * sign;
                assert_eq!(table.get(n, k as i64), expect, "n={n} k={k}");
            }
            prod = &prod * &poly_from_ints(&[-(n as i64), 1]);
        }
    }
}
