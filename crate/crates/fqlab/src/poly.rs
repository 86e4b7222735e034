//! Dense univariate polynomials over exact rationals.
//!
//! Identity checks compare polynomials coefficient by coefficient; nothing in
//! this crate ever decides equality by sampling. The coefficient vector never
//! carries trailing zeros, so `==` on the vector is polynomial equality and
//! the zero polynomial is the empty vector.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::rational::{rat_int, render_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        DensePoly::new(vec![c])
    }

    /// The monomial c * x^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    pub fn variable() -> Self {
        DensePoly::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i; zero beyond the degree.
    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> DensePoly {
        if c.is_zero() {
            return DensePoly::zero();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> DensePoly {
        if self.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> DensePoly {
        let mut acc = DensePoly::constant(Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Canonical text form "c0 + c1*x + c2*x^2 + ...", zero terms skipped,
    /// fractions as "a/b". Equal strings iff equal polynomials.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = render_rational(c);
            parts.push(match i {
                0 => cs,
                1 => format!("{cs}*{var}"),
                _ => format!("{cs}*{var}^{i}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coefficient(i) + rhs.coefficient(i));
        }
        DensePoly::new(coeffs)
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coefficient(i) - rhs.coefficient(i));
        }
        DensePoly::new(coeffs)
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DensePoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for DensePoly {
            type Output = DensePoly;
            fn $method(self, rhs: DensePoly) -> DensePoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&DensePoly> for DensePoly {
            type Output = DensePoly;
            fn $method(self, rhs: &DensePoly) -> DensePoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// (x + c)^k expanded by repeated multiplication.
pub fn shifted_power(c: &Rational, k: u32) -> DensePoly {
    DensePoly::new(vec![c.clone(), Rational::one()]).pow(k)
}

/// Convenience constructor from integer coefficients, constant term first.
pub fn poly_from_ints(coeffs: &[i64]) -> DensePoly {
    DensePoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn product_of_conjugates() {
        let lhs = poly_from_ints(&[1, 1]) * poly_from_ints(&[1, -1]);
        assert_eq!(lhs, poly_from_ints(&[1, 0, -1]));
    }

    #[test]
    fn addition_with_zero_is_identity() {
        let p = poly_from_ints(&[3, 0, 5]);
        assert_eq!(&p + &DensePoly::zero(), p);
        assert_eq!(&p - &p, DensePoly::zero());
    }

    #[test]
    fn fifth_power_of_x_plus_one() {
        // Oracle: repeated multiplication, done longhand here.
        let base = poly_from_ints(&[1, 1]);
        let mut expect = DensePoly::constant(Rational::one());
        for _ in 0..5 {
            expect = &expect * &base;
        }
        assert_eq!(expect, poly_from_ints(&[1, 5, 10, 10, 5, 1]));
        assert_eq!(shifted_power(&rat(1, 1), 5), expect);
    }

    #[test]
    fn shifted_power_matches_binomial_theorem() {
        // Oracle: explicit binomial expansion of (x + c)^k.
        use crate::arith::binomial;
        use crate::rational::rat_pow;
        let c = rat(-3, 2);
        for k in 0..=9u32 {
            let expect = DensePoly::new(
                (0..=k)
                    .map(|i| {
                        Rational::from(binomial(k as u64, i as i64))
                            * rat_pow(&c, k - i)
                    })
                    .collect(),
            );
            assert_eq!(shifted_power(&c, k), expect, "k={k}");
        }
        assert_eq!(
            shifted_power(&rat(-1, 1), 3),
            poly_from_ints(&[-1, 3, -3, 1])
        );
    }

    #[test]
    fn coefficient_beyond_degree_is_zero() {
        let p = poly_from_ints(&[2, 7]);
        assert_eq!(p.coefficient(5), Rational::zero());
        assert_eq!(p.degree(), Some(1));
        assert_eq!(DensePoly::zero().degree(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(poly_from_ints(&[0]).render("x"), "0");
        assert_eq!(
            DensePoly::new(vec![rat(3, 2), rat(-1, 1), rat(0, 1), rat(1, 3)]).render("q"),
            "3/2 + -1*q + 1/3*q^3"
        );
    }

    #[test]
    fn trailing_zeros_are_trimmed_on_every_path() {
        let p = DensePoly::new(vec![rat(1, 1), rat(2, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(1));
        let q = poly_from_ints(&[1, -2]) + poly_from_ints(&[1, 2]);
        assert_eq!(q.degree(), Some(0));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=10).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly() -> impl Strategy<Value = DensePoly> {
        prop::collection::vec(small_rational(), 0..=31).prop_map(DensePoly::new)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn equality_iff_difference_vanishes(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(a == b, (&a - &b).is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(
            a in small_poly(),
            b in small_poly(),
            t in small_rational(),
        ) {
            prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
            prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
        }
    }

    #[test]
    fn evaluation_homomorphism_on_shifted_powers() {
        // 100 seeded random (c, k, t) triples: (t + c)^k == eval of expansion.
        use crate::rational::rat_pow;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..100 {
            let c = rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9));
            let t = rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9));
            let k = rng.gen_range(0u32..=10);
            let direct = rat_pow(&(&t + &c), k);
            assert_eq!(shifted_power(&c, k).eval(&t), direct);
        }
    }
}
