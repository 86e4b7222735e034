//! Integer partitions as multiplicity vectors, and the two machine-generated
//! forms of the harmonic-difference closed formulas.
//!
//! With h_t = H_n^(t) - H_{n-j}^(t), the order-r form is
//!
//!   sum over partitions (i_1, ..., i_r) of r of
//!     prod_t (1/i_t!) (h_t / t)^(i_t)
//!
//! and equivalently (1/r!) times the determinant of the r x r lower
//! Hessenberg matrix with h_1 on the diagonal, h_2, h_3, ... filling each
//! column downward, and superdiagonal -1, -2, ..., -(r-1). Both are exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::error::CheckError;
use crate::harmonic::harmonic_diff;
use crate::rational::{rat_pow, rat_recip, Rational};

/// A partition of r stored as multiplicities: `multiplicities[t-1]` copies of
/// part t, so sum of t * i_t = r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    multiplicities: Vec<u32>,
}

impl Partition {
    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn weight(&self) -> u32 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u32 + 1) * m)
            .sum()
    }

    /// Number of parts, sum of multiplicities.
    pub fn len(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All partitions of r, in lexicographic order of the multiplicity vector.
/// r = 0 gives the single empty partition.
pub fn partitions(r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = vec![0u32; r as usize];
    descend(r, r, &mut current, &mut out);
    out.sort();
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            multiplicities: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        let cap = remaining / part;
        for count in 1..=cap {
            current[part as usize - 1] = count;
            descend(remaining - part * count, part - 1, current, out);
        }
        current[part as usize - 1] = 0;
    }
}

fn check_domain(r: u32, n: u32, j: u32) -> Result<(), CheckError> {
    if r == 0 {
        return Err(CheckError::domain("order r must be positive"));
    }
    if j == 0 || j > n {
        return Err(CheckError::domain(format!(
            "need 1 <= j <= n, got n={n} j={j}"
        )));
    }
    Ok(())
}

/// Partition-sum form at order r: the complete exponential polynomial in the
/// harmonic differences h_1 .. h_r.
pub fn hdiff_partition_form(r: u32, n: u32, j: u32) -> Result<Rational, CheckError> {
    check_domain(r, n, j)?;
    let h: Vec<Rational> = (1..=r).map(|t| harmonic_diff(n, j, t)).collect();
    let mut total = Rational::zero();
    for part in partitions(r) {
        let mut term = Rational::one();
        for (idx, &mult) in part.multiplicities().iter().enumerate() {
            if mult == 0 {
                continue;
            }
            let t = idx as u32 + 1;
            let base = &h[idx] * rat_recip(&BigInt::from(t));
            term *= rat_pow(&base, mult) * rat_recip(&factorial(mult));
        }
        total += term;
    }
    Ok(total)
}

/// Determinant form at order r, evaluated division-free by the linear
/// recurrence on leading minors of the Hessenberg matrix:
///
///   d_0 = 1,  d_k = sum_{i=1..k} h_{k-i+1} * ((k-1)!/(i-1)!) * d_{i-1}
///
/// (cofactor expansion along the last row; the superdiagonal entries -t turn
/// into the integer factor (k-1)!/(i-1)!). The only division is the final
/// d_r / r!.
pub fn hdiff_determinant_form(r: u32, n: u32, j: u32) -> Result<Rational, CheckError> {
    check_domain(r, n, j)?;
    let h: Vec<Rational> = (1..=r).map(|t| harmonic_diff(n, j, t)).collect();
    let mut minors: Vec<Rational> = vec![Rational::one()];
    for k in 1..=r as usize {
        let mut d = Rational::zero();
        let mut coef = BigInt::one(); // (k-1)!/(i-1)!, built downward from i=k
        for i in (1..=k).rev() {
            d += &h[k - i] * Rational::from(coef.clone()) * &minors[i - 1];
            if i > 1 {
                coef *= i as u64 - 1;
            }
        }
        minors.push(d);
    }
    Ok(minors[r as usize].clone() * rat_recip(&factorial(r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::harmonic;
    use crate::rational::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn partition_counts_one_through_seven() {
        let expected = [1, 2, 3, 5, 7, 11, 15];
        for (r, want) in (1u32..=7).zip(expected) {
            assert_eq!(partitions(r).len(), want, "r={r}");
        }
        assert_eq!(partitions(0).len(), 1);
    }

    #[test]
    fn partitions_of_four_explicitly() {
        let got: Vec<Vec<u32>> = partitions(4)
            .iter()
            .map(|p| p.multiplicities().to_vec())
            .collect();
        // lexicographic by multiplicity vector: 4; 2+2; 1+3; 1+1+2; 1+1+1+1
        let want = vec![
            vec![0, 0, 0, 1],
            vec![0, 2, 0, 0],
            vec![1, 0, 1, 0],
            vec![2, 1, 0, 0],
            vec![4, 0, 0, 0],
        ];
        assert_eq!(got, want);
        for p in partitions(4) {
            assert_eq!(p.weight(), 4);
        }
    }

    #[test]
    fn partition_form_hand_values() {
        // order 1 is the plain harmonic difference
        assert_eq!(hdiff_partition_form(1, 3, 2).unwrap(), rat(5, 6));
        // order 2 at (3,2): (5/6)^2/2 + (13/36)/2 = 19/36
        assert_eq!(hdiff_partition_form(2, 3, 2).unwrap(), rat(19, 36));
        // n = j = 1: every h_t = 1 and the value is 1 at every order
        for r in 1..=7 {
            assert_eq!(hdiff_partition_form(r, 1, 1).unwrap(), rat(1, 1), "r={r}");
        }
    }

    #[test]
    fn determinant_form_hand_values() {
        // 1x1 determinant is h_1
        assert_eq!(
            hdiff_determinant_form(1, 5, 3).unwrap(),
            harmonic(5, 1) - harmonic(2, 1)
        );
        // 2x2: (1/2)(h_1^2 + h_2) at (3,2) = 19/36
        assert_eq!(hdiff_determinant_form(2, 3, 2).unwrap(), rat(19, 36));
    }

    #[test]
    fn domain_errors() {
        assert!(hdiff_partition_form(0, 3, 1).is_err());
        assert!(hdiff_partition_form(2, 3, 0).is_err());
        assert!(hdiff_partition_form(2, 3, 4).is_err());
        assert!(hdiff_determinant_form(3, 2, 3).is_err());
    }

    #[test]
    fn determinant_equals_partition_form_randomized() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..60 {
            let n = rng.gen_range(1u32..=24);
            let j = rng.gen_range(1u32..=n);
            let r = rng.gen_range(1u32..=7);
            assert_eq!(
                hdiff_determinant_form(r, n, j).unwrap(),
                hdiff_partition_form(r, n, j).unwrap(),
                "r={r} n={n} j={j}"
            );
        }
    }
}
