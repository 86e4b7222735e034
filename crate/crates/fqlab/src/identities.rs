//! Exact rational and polynomial identities built from binomial coefficients
//! and generalized harmonic numbers.
//!
//! Contents:
//!
//! - [`dsum`], the signed double-binomial sum at order r, with its closed
//!   form in harmonic differences ([`dsum_closed_form`]) and its Stirling
//!   number form at order 2 ([`dsum_stirling_form`]).
//! - Companion lemmas for the same sums: the vanishing companion sum
//!   ([`bsum_vanishes`]), the first-order telescoping steps
//!   ([`difference_recurrences`]), and the hypergeometric step identity
//!   ([`hypergeom_step`]).
//! - [`mneimneh_poly`], binomially weighted harmonic sums as polynomials in
//!   q, in four equivalent forms selected by [`MneimnehForm`], compared by
//!   [`check_mneimneh`].
//! - Alternating-binomial identities: [`check_lemma2`], [`check_heartsuit`],
//!   [`check_corollary1`], [`check_sury93`].
//! - Three convergent series with harmonic-polynomial numerators:
//!   [`choi_partial_sum`] with the tail bound [`choi_tail_tolerance`] and the
//!   report wrapper [`check_choi`].
//! - Report wrappers for the sweep families: [`check_dsum_closed`],
//!   [`check_dsum_cross`], [`check_triple_sum`], [`check_partition_count`],
//!   [`check_det_vs_partition`].
//!
//! Everything except the series checks is exact: polynomial comparisons are
//! coefficient-by-coefficient and scalar comparisons are reduced-fraction
//! string equality, never floating point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, falling_factorial};
use crate::error::CheckError;
use crate::harmonic::{harmonic, harmonic_diff};
use crate::partition::{hdiff_determinant_form, hdiff_partition_form, partitions};
use crate::poly::{poly_from_ints, shifted_power, DensePoly};
use crate::rational::{rat, rat_int, rat_pow, render_rational, Rational};
use crate::report::{BackendTag, CheckReport, Modulus, Params};
use crate::stirling::StirlingTable;

/// (-1)^k as an i64 factor.
fn alt(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_window(n: u32, j: u32) -> Result<(), CheckError> {
    if j == 0 || j > n {
        return Err(CheckError::domain(format!(
            "need 1 <= j <= n, got n={n} j={j}"
        )));
    }
    Ok(())
}

/// The signed double-binomial sum at order r:
///
///   sum_{l=0}^{j-1} (-1)^(j-l-1) C(n-l-1, n-j) C(n, l) / (n-l)^(r-1)
///
/// Defined for r >= 1 and 1 <= j <= n. At r = 1 the sum telescopes to 1 for
/// every admissible (n, j).
pub fn dsum(r: u32, n: u32, j: u32) -> Result<Rational, CheckError> {
    if r == 0 {
        return Err(CheckError::domain("order r must be positive"));
    }
    check_window(n, j)?;
    let mut acc = Rational::zero();
    for l in 0..j {
        let numer = BigInt::from(alt(j - l - 1))
            * binomial(u64::from(n - l - 1), i64::from(n - j))
            * binomial(u64::from(n), i64::from(l));
        let denom = BigInt::from(n - l).pow(r - 1);
        acc += Rational::new(numer, denom);
    }
    Ok(acc)
}

/// One closed-form term: numerator, denominator, and the exponent of each
/// harmonic difference h_1 .. h_6 in the monomial it multiplies.
type ClosedTerm = (i64, i64, [u32; 6]);

const CLOSED_3: &[ClosedTerm] = &[(1, 2, [2, 0, 0, 0, 0, 0]), (1, 2, [0, 1, 0, 0, 0, 0])];

const CLOSED_4: &[ClosedTerm] = &[
    (1, 6, [3, 0, 0, 0, 0, 0]),
    (1, 2, [1, 1, 0, 0, 0, 0]),
    (1, 3, [0, 0, 1, 0, 0, 0]),
];

// The quartic table's squared-h_2 and h_4 coefficients (1/8 and 1/4) are
// forced by the partition-sum cross-check in the tests; swapping them breaks
// the frozen value at (n, j) = (2, 2).
const CLOSED_5: &[ClosedTerm] = &[
    (1, 24, [4, 0, 0, 0, 0, 0]),
    (1, 4, [2, 1, 0, 0, 0, 0]),
    (1, 3, [1, 0, 1, 0, 0, 0]),
    (1, 8, [0, 2, 0, 0, 0, 0]),
    (1, 4, [0, 0, 0, 1, 0, 0]),
];

const CLOSED_6: &[ClosedTerm] = &[
    (1, 120, [5, 0, 0, 0, 0, 0]),
    (1, 12, [3, 1, 0, 0, 0, 0]),
    (1, 6, [2, 0, 1, 0, 0, 0]),
    (1, 8, [1, 2, 0, 0, 0, 0]),
    (1, 4, [1, 0, 0, 1, 0, 0]),
    (1, 6, [0, 1, 1, 0, 0, 0]),
    (1, 5, [0, 0, 0, 0, 1, 0]),
];

const CLOSED_7: &[ClosedTerm] = &[
    (1, 720, [6, 0, 0, 0, 0, 0]),
    (1, 48, [4, 1, 0, 0, 0, 0]),
    (1, 18, [3, 0, 1, 0, 0, 0]),
    (1, 16, [2, 2, 0, 0, 0, 0]),
    (1, 8, [2, 0, 0, 1, 0, 0]),
    (1, 6, [1, 1, 1, 0, 0, 0]),
    (1, 5, [1, 0, 0, 0, 1, 0]),
    (1, 48, [0, 3, 0, 0, 0, 0]),
    (1, 8, [0, 1, 0, 1, 0, 0]),
    (1, 18, [0, 0, 2, 0, 0, 0]),
    (1, 6, [0, 0, 0, 0, 0, 1]),
];

/// Closed form of [`dsum`] as a polynomial in the harmonic differences
/// h_t = H_n^(t) - H_(n-j)^(t). Available for 1 <= r <= 7; orders 3 through 7
/// are transcribed term tables, order 2 is h_1 itself and order 1 is the
/// constant 1.
pub fn dsum_closed_form(r: u32, n: u32, j: u32) -> Result<Rational, CheckError> {
    check_window(n, j)?;
    let terms: &[ClosedTerm] = match r {
        0 => return Err(CheckError::domain("order r must be positive")),
        1 => return Ok(Rational::one()),
        2 => return Ok(harmonic_diff(n, j, 1)),
        3 => CLOSED_3,
        4 => CLOSED_4,
        5 => CLOSED_5,
        6 => CLOSED_6,
        7 => CLOSED_7,
        _ => {
            return Err(CheckError::domain(format!(
                "no transcribed closed form at order {r}"
            )))
        }
    };
    let h: Vec<Rational> = (1..=6).map(|t| harmonic_diff(n, j, t)).collect();
    let mut acc = Rational::zero();
    for (numer, denom, exps) in terms {
        let mut term = rat(*numer, *denom);
        for (idx, &e) in exps.iter().enumerate() {
            if e > 0 {
                term *= rat_pow(&h[idx], e);
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Order-2 instance of [`dsum`] written over unsigned Stirling numbers of the
/// first kind:
///
///   (1 / (n)_j) * sum_{v=0}^{j-1} (-1)^(j-v-1) (v+1) stf(j, v+1) n^v
///
/// where (n)_j is the falling factorial. Equals H_n - H_(n-j).
pub fn dsum_stirling_form(n: u32, j: u32) -> Result<Rational, CheckError> {
    check_window(n, j)?;
    let table = StirlingTable::new(j);
    let mut numer = BigInt::zero();
    for v in 0..j {
        numer += BigInt::from(alt(j - v - 1))
            * BigInt::from(u64::from(v) + 1)
            * table.get(j, i64::from(v) + 1)
            * BigInt::from(u64::from(n)).pow(v);
    }
    Ok(Rational::new(numer, falling_factorial(i64::from(n), j)))
}

/// The companion double-binomial sum with the shifted top index,
///
///   sum_{l=0}^{j} (-1)^(j-l) C(n-l, n-j) C(n, l),
///
/// which vanishes for every 1 <= j <= n. The report compares the computed
/// integer against the literal "0".
pub fn bsum_vanishes(n: u32, j: u32) -> Result<CheckReport, CheckError> {
    check_window(n, j)?;
    let mut acc = BigInt::zero();
    for l in 0..=j {
        acc += BigInt::from(alt(j - l))
            * binomial(u64::from(n - l), i64::from(n - j))
            * binomial(u64::from(n), i64::from(l));
    }
    Ok(CheckReport::comparison(
        "bsum",
        Params(vec![("n", i64::from(n)), ("j", i64::from(j))]),
        Modulus::Exact,
        acc.to_string(),
        "0".to_string(),
        BackendTag::Exact,
    ))
}

/// First-order difference structure of the low-order sums. Writing
/// C, D, F for [`dsum`] at orders 2, 3, 4 and
///
///   E(n, j) = (n-j+1) (D(n, j) - D(n, j-1)),
///   G(n, j) = (n-j+1) (F(n, j) - F(n, j-1)),   with D(n, 0) = F(n, 0) = 0,
///
/// the report checks, for 2 <= j <= n:
///
///   C(n, j) - C(n, j-1) = 1/(n-j+1)
///   E(n, j) - E(n, j-1) = 1/(n-j+1)
///   G(n, j) - G(n, j-1) = (H_n - H_(n-j)) / (n-j+1)
///   D(n, 1) = 1/n^2 and F(n, 1) = 1/n^3
pub fn difference_recurrences(n: u32, j: u32) -> Result<CheckReport, CheckError> {
    if j < 2 || j > n {
        return Err(CheckError::domain(format!(
            "need 2 <= j <= n, got n={n} j={j}"
        )));
    }
    let d = |jj: u32, r: u32| -> Result<Rational, CheckError> {
        if jj == 0 {
            Ok(Rational::zero())
        } else {
            dsum(r, n, jj)
        }
    };
    let step = |jj: u32, r: u32| -> Result<Rational, CheckError> {
        Ok(rat_int(i64::from(n - jj + 1)) * (d(jj, r)? - d(jj - 1, r)?))
    };

    let c_step = dsum(2, n, j)? - dsum(2, n, j - 1)?;
    let e_step = step(j, 3)? - step(j - 1, 3)?;
    let g_step = step(j, 4)? - step(j - 1, 4)?;
    let d_base = dsum(3, n, 1)?;
    let f_base = dsum(4, n, 1)?;

    let gap = rat_int(i64::from(n - j + 1));
    let recip = rat(1, i64::from(n - j + 1));
    let targets = [
        recip.clone(),
        recip,
        harmonic_diff(n, j, 1) / gap,
        rat_recip_pow(n, 2),
        rat_recip_pow(n, 3),
    ];
    let values = [c_step, e_step, g_step, d_base, f_base];

    let lhs = join_rationals(&values);
    let rhs = join_rationals(&targets);
    Ok(CheckReport::comparison(
        "difference-recurrences",
        Params(vec![("n", i64::from(n)), ("j", i64::from(j))]),
        Modulus::Exact,
        lhs,
        rhs,
        BackendTag::Exact,
    ))
}

fn rat_recip_pow(n: u32, e: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(n).pow(e))
}

fn join_rationals(values: &[Rational]) -> String {
    values
        .iter()
        .map(render_rational)
        .collect::<Vec<_>>()
        .join(" ; ")
}

/// The single-binomial alternating partial-fraction sum collapses to a
/// beta-integral value:
///
///   sum_{l=0}^{j-1} (-1)^(j-l-1) C(j-1, l) / (n-l) = (j-1)! (n-j)! / n!
pub fn hypergeom_step(n: u32, j: u32) -> Result<CheckReport, CheckError> {
    check_window(n, j)?;
    let mut acc = Rational::zero();
    for l in 0..j {
        acc += Rational::new(
            BigInt::from(alt(j - l - 1)) * binomial(u64::from(j - 1), i64::from(l)),
            BigInt::from(n - l),
        );
    }
    let target = Rational::new(factorial(j - 1) * factorial(n - j), factorial(n));
    Ok(CheckReport::comparison(
        "hypergeom-step",
        Params(vec![("n", i64::from(n)), ("j", i64::from(j))]),
        Modulus::Exact,
        render_rational(&acc),
        render_rational(&target),
        BackendTag::Exact,
    ))
}

/// The equivalent expansions of the binomially weighted harmonic sum
///
///   S_n^(r)(q) = sum_{k=0}^n H_k^(r) C(n, k) (1-q)^k q^(n-k)
///
/// as polynomials in q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MneimnehForm {
    /// The defining sum itself, expanded term by term.
    Convolution,
    /// H_n - sum_{j=1}^n q^j / j. Only exists at order r = 1.
    HarmonicTail,
    /// H_n^(r) minus binomially scaled inverse-power kernels,
    /// sum_j C(n,j) (sum_{l<j} (-1)^(j-l-1) C(j-1,l)/(n-l)^r) q^j.
    InverseBinomialKernel,
    /// H_n^(r) - sum_j dsum(r, n, j) q^j / j.
    DoubleBinomialKernel,
    /// Same as [`MneimnehForm::DoubleBinomialKernel`] with the coefficient
    /// replaced by its harmonic closed form; needs r <= 7.
    ClosedFormKernel,
}

/// Expand one form of S_n^(r)(q); all forms of the same (n, r) are equal as
/// polynomials.
pub fn mneimneh_poly(n: u32, r: u32, form: MneimnehForm) -> Result<DensePoly, CheckError> {
    if n == 0 {
        return Err(CheckError::domain("n must be positive"));
    }
    if r == 0 {
        return Err(CheckError::domain("order r must be positive"));
    }
    match form {
        MneimnehForm::Convolution => {
            let one_minus_q = poly_from_ints(&[1, -1]);
            let mut power = DensePoly::constant(Rational::one());
            let mut acc = DensePoly::zero();
            for k in 0..=n {
                if k > 0 {
                    power = &power * &one_minus_q;
                }
                let coef = harmonic(k, r)
                    * Rational::from_integer(binomial(u64::from(n), i64::from(k)));
                if !coef.is_zero() {
                    acc = acc + power.scale(&coef).shift((n - k) as usize);
                }
            }
            Ok(acc)
        }
        MneimnehForm::HarmonicTail => {
            if r != 1 {
                return Err(CheckError::domain(
                    "the tail form exists only at order r = 1",
                ));
            }
            let mut coeffs = vec![harmonic(n, 1)];
            for j in 1..=n {
                coeffs.push(rat(-1, i64::from(j)));
            }
            Ok(DensePoly::new(coeffs))
        }
        MneimnehForm::InverseBinomialKernel => {
            let mut coeffs = vec![harmonic(n, r)];
            for j in 1..=n {
                let mut inner = Rational::zero();
                for l in 0..j {
                    inner += Rational::new(
                        BigInt::from(alt(j - l - 1)) * binomial(u64::from(j - 1), i64::from(l)),
                        BigInt::from(n - l).pow(r),
                    );
                }
                coeffs.push(
                    -(inner * Rational::from_integer(binomial(u64::from(n), i64::from(j)))),
                );
            }
            Ok(DensePoly::new(coeffs))
        }
        MneimnehForm::DoubleBinomialKernel => {
            let mut coeffs = vec![harmonic(n, r)];
            for j in 1..=n {
                coeffs.push(-(dsum(r, n, j)? / rat_int(i64::from(j))));
            }
            Ok(DensePoly::new(coeffs))
        }
        MneimnehForm::ClosedFormKernel => {
            if r > 7 {
                return Err(CheckError::domain(
                    "no transcribed closed form above order 7",
                ));
            }
            let mut coeffs = vec![harmonic(n, r)];
            for j in 1..=n {
                coeffs.push(-(dsum_closed_form(r, n, j)? / rat_int(i64::from(j))));
            }
            Ok(DensePoly::new(coeffs))
        }
    }
}

/// Expand the defining convolution of S_n^(r)(q) and compare it against every
/// other form available at this order, coefficient by coefficient.
pub fn check_mneimneh(n: u32, r: u32) -> Result<CheckReport, CheckError> {
    let lhs = mneimneh_poly(n, r, MneimnehForm::Convolution)?;
    let mut others = Vec::new();
    if r == 1 {
        others.push(mneimneh_poly(n, r, MneimnehForm::HarmonicTail)?);
    }
    others.push(mneimneh_poly(n, r, MneimnehForm::InverseBinomialKernel)?);
    others.push(mneimneh_poly(n, r, MneimnehForm::DoubleBinomialKernel)?);
    if r <= 7 {
        others.push(mneimneh_poly(n, r, MneimnehForm::ClosedFormKernel)?);
    }
    let rhs_strings: Vec<String> = others.iter().map(|p| p.render("q")).collect();
    Ok(CheckReport::multi_comparison(
        "mneimneh",
        Params(vec![("n", i64::from(n)), ("r", i64::from(r))]),
        Modulus::Exact,
        lhs.render("q"),
        &rhs_strings,
        BackendTag::Exact,
    ))
}

/// For odd n, the alternating-binomial rewrite of the truncated logarithm:
///
///   sum_{r=1}^n (-1)^(r-1) x^r / r
///     = sum_{r=1}^n C(n,r) (-1)^(r-1) (x+1)^r / r + sum_{r=1}^n (-1)^r C(n,r) / r
///
/// checked as a polynomial identity in x. For n >= 3 the report also checks
/// the two scalar identities obtained from the x^2 and x^3 coefficients:
///
///   n = sum_{r=1}^{n-1} (-1)^r C(n,r) (r-1)
///   (n-1)(n-2) = 2 + sum_{r=1}^{n-1} (-1)^r C(n,r) (r-1)(r-2)
pub fn check_lemma2(n: u32) -> Result<CheckReport, CheckError> {
    if n == 0 || n % 2 == 0 {
        return Err(CheckError::domain(format!("stated for odd n, got {n}")));
    }
    let mut lhs_poly = DensePoly::zero();
    let mut rhs_poly = DensePoly::zero();
    let mut constant = Rational::zero();
    for r in 1..=n {
        lhs_poly = lhs_poly
            + DensePoly::monomial(
                Rational::new(BigInt::from(alt(r - 1)), BigInt::from(r)),
                r as usize,
            );
        let b = binomial(u64::from(n), i64::from(r));
        rhs_poly = rhs_poly
            + shifted_power(&Rational::one(), r).scale(&Rational::new(
                BigInt::from(alt(r - 1)) * &b,
                BigInt::from(r),
            ));
        constant += Rational::new(BigInt::from(alt(r)) * b, BigInt::from(r));
    }
    rhs_poly = rhs_poly + DensePoly::constant(constant);

    let (lhs, rhs) = if n >= 3 {
        let mut s2 = BigInt::zero();
        let mut s3 = BigInt::zero();
        for r in 1..n {
            let b = BigInt::from(alt(r)) * binomial(u64::from(n), i64::from(r));
            s2 += &b * BigInt::from(i64::from(r) - 1);
            s3 += &b * BigInt::from(i64::from(r) - 1) * BigInt::from(i64::from(r) - 2);
        }
        (
            format!(
                "{} ; {} ; {}",
                lhs_poly.render("x"),
                n,
                u64::from(n - 1) * u64::from(n - 2)
            ),
            format!(
                "{} ; {} ; {}",
                rhs_poly.render("x"),
                s2,
                BigInt::from(2) + s3
            ),
        )
    } else {
        (lhs_poly.render("x"), rhs_poly.render("x"))
    };
    Ok(CheckReport::comparison(
        "lemma2",
        Params(vec![("n", i64::from(n))]),
        Modulus::Exact,
        lhs,
        rhs,
        BackendTag::Exact,
    ))
}

/// The alternating-binomial rewrite of the truncated logarithm at 1 - x,
/// in its two stated shapes, both as polynomial identities in x:
///
///   sum_{k=1}^n (1-x)^k / k = sum_{k=1}^n C(n,k) (-1)^k (x^k - 1) / k
///
/// and the reindexed version cleared of its x - 1 denominator,
///
///   (x-1) sum_{r=0}^{n-1} (1-x)^r / (r+1)
///     = sum_{r=0}^{n-1} C(n,r+1) (-1)^r (x^(r+1) - 1) / (r+1).
pub fn check_heartsuit(n: u32) -> Result<CheckReport, CheckError> {
    if n == 0 {
        return Err(CheckError::domain("n must be positive"));
    }
    let one_minus_x = poly_from_ints(&[1, -1]);

    let mut base_lhs = DensePoly::zero();
    let mut power = DensePoly::constant(Rational::one());
    for k in 1..=n {
        power = &power * &one_minus_x;
        base_lhs = base_lhs + power.scale(&rat(1, i64::from(k)));
    }
    let mut base_rhs = DensePoly::zero();
    for k in 1..=n {
        let coef = Rational::new(
            BigInt::from(alt(k)) * binomial(u64::from(n), i64::from(k)),
            BigInt::from(k),
        );
        let x_k_minus_1 = DensePoly::monomial(Rational::one(), k as usize)
            - DensePoly::constant(Rational::one());
        base_rhs = base_rhs + x_k_minus_1.scale(&coef);
    }

    let mut tail_sum = DensePoly::zero();
    let mut power = DensePoly::constant(Rational::one());
    for r in 0..n {
        if r > 0 {
            power = &power * &one_minus_x;
        }
        tail_sum = tail_sum + power.scale(&rat(1, i64::from(r) + 1));
    }
    let cleared_lhs = poly_from_ints(&[-1, 1]) * tail_sum;
    let mut cleared_rhs = DensePoly::zero();
    for r in 0..n {
        let coef = Rational::new(
            BigInt::from(alt(r)) * binomial(u64::from(n), i64::from(r) + 1),
            BigInt::from(r + 1),
        );
        let x_r1_minus_1 = DensePoly::monomial(Rational::one(), r as usize + 1)
            - DensePoly::constant(Rational::one());
        cleared_rhs = cleared_rhs + x_r1_minus_1.scale(&coef);
    }

    Ok(CheckReport::comparison(
        "heartsuit",
        Params(vec![("n", i64::from(n))]),
        Modulus::Exact,
        format!("{} ; {}", base_lhs.render("x"), cleared_lhs.render("x")),
        format!("{} ; {}", base_rhs.render("x"), cleared_rhs.render("x")),
        BackendTag::Exact,
    ))
}

/// Two alternating-binomial evaluations:
///
///   sum_{k=1}^n C(n,k) (-1)^(k+1) / (k+1) = n / (n+1)
///   H_n = sum_{k=1}^n C(n,k) (-1)^(k+1) / k
pub fn check_corollary1(n: u32) -> Result<CheckReport, CheckError> {
    if n == 0 {
        return Err(CheckError::domain("n must be positive"));
    }
    let mut shifted = Rational::zero();
    let mut plain = Rational::zero();
    for k in 1..=n {
        let b = BigInt::from(alt(k + 1)) * binomial(u64::from(n), i64::from(k));
        shifted += Rational::new(b.clone(), BigInt::from(k + 1));
        plain += Rational::new(b, BigInt::from(k));
    }
    let lhs = format!(
        "{} ; {}",
        render_rational(&shifted),
        render_rational(&harmonic(n, 1))
    );
    let rhs = format!(
        "{} ; {}",
        render_rational(&rat(i64::from(n), i64::from(n) + 1)),
        render_rational(&plain)
    );
    Ok(CheckReport::comparison(
        "corollary1",
        Params(vec![("n", i64::from(n))]),
        Modulus::Exact,
        lhs,
        rhs,
        BackendTag::Exact,
    ))
}

/// The inverse-binomial sum in three shapes, compared pairwise:
///
///   sum_{r=0}^n 1 / C(n,r)
///     = (n+1)/2^n * sum_{i=0}^n 2^i / (i+1)
///     = (n+1)/2^n * sum_{odd j <= n+1} C(n+1, j) / j
pub fn check_sury93(n: u32) -> Result<CheckReport, CheckError> {
    let mut direct = Rational::zero();
    for r in 0..=n {
        direct += Rational::new(BigInt::one(), binomial(u64::from(n), i64::from(r)));
    }
    let scale = Rational::new(BigInt::from(u64::from(n) + 1), BigInt::from(2u64).pow(n));
    let mut geometric = Rational::zero();
    let mut pw = BigInt::one();
    for i in 0..=n {
        geometric += Rational::new(pw.clone(), BigInt::from(i + 1));
        pw *= 2;
    }
    let mut odd = Rational::zero();
    for j in (1..=n + 1).step_by(2) {
        odd += Rational::new(
            binomial(u64::from(n) + 1, i64::from(j)),
            BigInt::from(j),
        );
    }
    let rhs_values = [
        render_rational(&(scale.clone() * geometric)),
        render_rational(&(scale * odd)),
    ];
    Ok(CheckReport::multi_comparison(
        "sury93",
        Params(vec![("n", i64::from(n))]),
        Modulus::Exact,
        render_rational(&direct),
        &rhs_values,
        BackendTag::Exact,
    ))
}

/// Closed form of the triple sum
///
///   sum over 1 <= i < j < k <= n of 1/(i j k) = (H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3)) / 6
///
/// given the sum's value and the three harmonic numbers. The sum argument is
/// supplied by the caller (see `triple_harmonic_prefix`) so a sweep can reuse
/// one accumulator pass.
pub fn check_triple_sum(
    n: u32,
    sum: &Rational,
    h1: &Rational,
    h2: &Rational,
    h3: &Rational,
) -> CheckReport {
    let closed = (rat_pow(h1, 3) - rat_int(3) * h2.clone() * h1.clone()
        + rat_int(2) * h3.clone())
        / rat_int(6);
    CheckReport::comparison(
        "triple-sum",
        Params(vec![("n", i64::from(n))]),
        Modulus::Exact,
        render_rational(sum),
        render_rational(&closed),
        BackendTag::Exact,
    )
}

/// Number of partitions of r against the reference counts 1, 2, 3, 5, 7, 11,
/// 15 for r = 1 .. 7.
pub fn check_partition_count(r: u32) -> Result<CheckReport, CheckError> {
    const EXPECTED: [usize; 7] = [1, 2, 3, 5, 7, 11, 15];
    if !(1..=7).contains(&r) {
        return Err(CheckError::domain(format!(
            "reference counts recorded for orders 1..7 only, got {r}"
        )));
    }
    Ok(CheckReport::comparison(
        "partition-count",
        Params(vec![("r", i64::from(r))]),
        Modulus::Exact,
        partitions(r).len().to_string(),
        EXPECTED[(r - 1) as usize].to_string(),
        BackendTag::Exact,
    ))
}

/// Determinant form against partition-sum form of the order-r harmonic
/// polynomial in the differences h_t = H_n^(t) - H_(n-j)^(t).
pub fn check_det_vs_partition(r: u32, n: u32, j: u32) -> Result<CheckReport, CheckError> {
    let det = hdiff_determinant_form(r, n, j)?;
    let part = hdiff_partition_form(r, n, j)?;
    Ok(CheckReport::comparison(
        "determinant-vs-partition",
        Params(vec![
            ("r", i64::from(r)),
            ("n", i64::from(n)),
            ("j", i64::from(j)),
        ]),
        Modulus::Exact,
        render_rational(&det),
        render_rational(&part),
        BackendTag::Exact,
    ))
}

/// [`dsum`] against its closed form; at order 2 the Stirling form joins the
/// comparison as a second right-hand side.
pub fn check_dsum_closed(r: u32, n: u32, j: u32) -> Result<CheckReport, CheckError> {
    let lhs = dsum(r, n, j)?;
    let mut rhs_values = vec![render_rational(&dsum_closed_form(r, n, j)?)];
    if r == 2 {
        rhs_values.push(render_rational(&dsum_stirling_form(n, j)?));
    }
    Ok(CheckReport::multi_comparison(
        "dsum-closed",
        Params(vec![
            ("r", i64::from(r)),
            ("n", i64::from(n)),
            ("j", i64::from(j)),
        ]),
        Modulus::Exact,
        render_rational(&lhs),
        &rhs_values,
        BackendTag::Exact,
    ))
}

/// [`dsum`] at order r against the partition-sum and determinant forms at
/// order r - 1. At r = 1 both reference values are the constant 1.
pub fn check_dsum_cross(r: u32, n: u32, j: u32) -> Result<CheckReport, CheckError> {
    let lhs = dsum(r, n, j)?;
    let rhs_values = if r == 1 {
        vec!["1".to_string(), "1".to_string()]
    } else {
        vec![
            render_rational(&hdiff_partition_form(r - 1, n, j)?),
            render_rational(&hdiff_determinant_form(r - 1, n, j)?),
        ]
    };
    Ok(CheckReport::multi_comparison(
        "dsum-cross",
        Params(vec![
            ("r", i64::from(r)),
            ("n", i64::from(n)),
            ("j", i64::from(j)),
        ]),
        Modulus::Exact,
        render_rational(&lhs),
        &rhs_values,
        BackendTag::Exact,
    ))
}

/// Partial sum of one of three convergent series whose numerators are the
/// elementary harmonic polynomials H_n, (H_n^2 - H_n^(2))/2 and
/// (H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3))/6 over the denominator (n+1)(n+2).
/// Each series converges to 1. Computed in f64 with a single forward pass, so
/// the result is deterministic for a given (series, terms).
pub fn choi_partial_sum(series: u32, terms: u64) -> Result<f64, CheckError> {
    if !(1..=3).contains(&series) {
        return Err(CheckError::domain(format!(
            "series index must be 1, 2 or 3, got {series}"
        )));
    }
    let mut h = 0.0f64;
    let mut h2 = 0.0f64;
    let mut h3 = 0.0f64;
    let mut acc = 0.0f64;
    for n in 1..=terms {
        let x = n as f64;
        h += 1.0 / x;
        h2 += 1.0 / (x * x);
        h3 += 1.0 / (x * x * x);
        let numer = match series {
            1 => h,
            2 => (h * h - h2) / 2.0,
            _ => (h * h * h - 3.0 * h * h2 + 2.0 * h3) / 6.0,
        };
        acc += numer / ((x + 1.0) * (x + 2.0));
    }
    Ok(acc)
}

/// Upper bound on |partial sum - 1| after the given number of terms N:
///
///   2 * (sum_{k=0}^{s} u^k / k!) / N   with u = ln N + 1.
///
/// The numerator of series s is at most (H_n)^s / s! <= (ln n + 1)^s / s!,
/// and the factor 2 absorbs the slow growth of that bound across the tail.
pub fn choi_tail_tolerance(series: u32, terms: u64) -> Result<f64, CheckError> {
    if !(1..=3).contains(&series) {
        return Err(CheckError::domain(format!(
            "series index must be 1, 2 or 3, got {series}"
        )));
    }
    if terms == 0 {
        return Err(CheckError::domain("need at least one term"));
    }
    let u = (terms as f64).ln() + 1.0;
    let mut total = 0.0f64;
    let mut term = 1.0f64;
    for k in 0..=series {
        if k > 0 {
            term *= u / k as f64;
        }
        total += term;
    }
    Ok(2.0 * total / terms as f64)
}

/// Accumulate the partial sum and compare its deviation from the limit 1
/// against the tail bound. The report passes iff the deviation is within the
/// bound; otherwise the right-hand side carries the measured deviation.
pub fn check_choi(series: u32, terms: u64) -> Result<CheckReport, CheckError> {
    let sum = choi_partial_sum(series, terms)?;
    let tol = choi_tail_tolerance(series, terms)?;
    let deviation = (sum - 1.0).abs();
    let lhs = format!("|S({terms}) - 1| <= {tol:.3e}");
    let rhs = if deviation <= tol {
        lhs.clone()
    } else {
        format!("|S({terms}) - 1| = {deviation:.3e}")
    };
    Ok(CheckReport::comparison(
        "choi-series",
        Params(vec![("series", i64::from(series)), ("terms", terms as i64)]),
        Modulus::Exact,
        lhs,
        rhs,
        BackendTag::Exact,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::triple_harmonic_prefix;
    use crate::harmonic::HarmonicTable;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn dsum_small_frozen_values() {
        assert_eq!(dsum(1, 3, 2).unwrap(), rat_int(1));
        assert_eq!(dsum(2, 3, 2).unwrap(), rat(5, 6));
        assert_eq!(dsum(3, 3, 2).unwrap(), rat(19, 36));
        assert_eq!(dsum(4, 3, 2).unwrap(), rat(65, 216));
        assert_eq!(dsum(5, 2, 2).unwrap(), rat(31, 16));
    }

    #[test]
    fn dsum_rejects_out_of_window_indices() {
        assert!(dsum(2, 3, 0).unwrap_err().is_domain());
        assert!(dsum(2, 3, 4).unwrap_err().is_domain());
        assert!(dsum(0, 3, 2).unwrap_err().is_domain());
    }

    #[test]
    fn dsum_order_one_telescopes_to_one() {
        for n in 1..=25u32 {
            for j in 1..=n {
                assert_eq!(dsum(1, n, j).unwrap(), rat_int(1), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn closed_form_matches_direct_sum_up_to_order_seven() {
        for r in 1..=7u32 {
            for n in 1..=14u32 {
                for j in 1..=n {
                    assert_eq!(
                        dsum_closed_form(r, n, j).unwrap(),
                        dsum(r, n, j).unwrap(),
                        "r={r} n={n} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn quartic_closed_form_pins_the_unequal_coefficient_pair() {
        // At (n, j) = (2, 2) the h_2^2 and h_4 monomials differ, so this value
        // separates the correct coefficient pair (1/8, 1/4) from its swap.
        assert_eq!(dsum_closed_form(5, 2, 2).unwrap(), rat(31, 16));
        let h2 = harmonic_diff(2, 2, 2);
        let h4 = harmonic_diff(2, 2, 4);
        let swapped_delta = (rat_pow(&h2, 2) - h4.clone()) / rat_int(8)
            - (rat_pow(&h2, 2) - h4) / rat_int(4);
        assert!(!swapped_delta.is_zero());
    }

    #[test]
    fn closed_form_matches_partition_form_at_shifted_order() {
        for r in 2..=7u32 {
            for n in 1..=10u32 {
                for j in 1..=n {
                    assert_eq!(
                        dsum_closed_form(r, n, j).unwrap(),
                        hdiff_partition_form(r - 1, n, j).unwrap(),
                        "r={r} n={n} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn stirling_form_recovers_harmonic_difference() {
        assert_eq!(dsum_stirling_form(5, 5).unwrap(), rat(137, 60));
        for n in 1..=20u32 {
            for j in 1..=n {
                assert_eq!(
                    dsum_stirling_form(n, j).unwrap(),
                    harmonic_diff(n, j, 1),
                    "n={n} j={j}"
                );
            }
        }
    }

    #[test]
    fn companion_sum_vanishes() {
        for n in 1..=30u32 {
            for j in 1..=n {
                let report = bsum_vanishes(n, j).unwrap();
                assert!(report.pass, "n={n} j={j}: lhs={}", report.lhs.unwrap());
            }
        }
    }

    #[test]
    fn difference_recurrences_hand_values() {
        // E(3,2) - E(3,1) = 1/2 and G(3,2) - G(3,1) = (H_3 - H_1)/2 = 5/12.
        let d = |j| dsum(3, 3, j).unwrap();
        let e2 = rat_int(2) * (d(2) - d(1));
        let e1 = rat_int(3) * d(1);
        assert_eq!(e2 - e1, rat(1, 2));
        let f = |j| dsum(4, 3, j).unwrap();
        let g2 = rat_int(2) * (f(2) - f(1));
        let g1 = rat_int(3) * f(1);
        assert_eq!(g2 - g1, rat(5, 12));
        assert_eq!(dsum(3, 7, 1).unwrap(), rat(1, 49));
        assert_eq!(dsum(4, 7, 1).unwrap(), rat(1, 343));
    }

    #[test]
    fn difference_recurrences_sweep() {
        for n in 2..=18u32 {
            for j in 2..=n {
                let report = difference_recurrences(n, j).unwrap();
                assert!(report.pass, "n={n} j={j}");
            }
        }
        assert!(difference_recurrences(5, 1).unwrap_err().is_domain());
        assert!(difference_recurrences(5, 6).unwrap_err().is_domain());
    }

    #[test]
    fn hypergeom_step_examples_and_sweep() {
        let r32 = hypergeom_step(3, 2).unwrap();
        assert_eq!(r32.lhs.as_deref(), Some("1/6"));
        assert!(r32.pass);
        let r64 = hypergeom_step(6, 4).unwrap();
        assert_eq!(r64.lhs.as_deref(), Some("1/60"));
        assert!(r64.pass);
        for n in 1..=25u32 {
            let first = hypergeom_step(n, 1).unwrap();
            assert_eq!(first.lhs.as_deref(), Some(render_rational(&rat(1, i64::from(n))).as_str()));
            for j in 1..=n {
                assert!(hypergeom_step(n, j).unwrap().pass, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn alternating_binomial_prefixes_collapse() {
        // sum_{v=0}^{l} (-1)^v C(j, v) = (-1)^l C(j-1, l) for 0 <= l < j.
        for j in 1..=30u32 {
            let mut prefix = BigInt::zero();
            for l in 0..j {
                prefix += BigInt::from(alt(l)) * binomial(u64::from(j), i64::from(l));
                let target = BigInt::from(alt(l)) * binomial(u64::from(j) - 1, i64::from(l));
                assert_eq!(prefix, target, "j={j} l={l}");
            }
        }
    }

    #[test]
    fn kernel_coefficients_agree_across_forms() {
        // C(n,j) * sum_{l<j} (-1)^(j-l-1) C(j-1,l)/(n-l)^r = dsum(r, n, j)/j;
        // the exponent shift between the two kernels is absorbed by
        // C(n-l-1, n-j) C(n, l) = j C(n, j) C(j-1, l) / (n-l).
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..60 {
            let n = rng.gen_range(1..=30u32);
            let j = rng.gen_range(1..=n);
            let r = rng.gen_range(1..=5u32);
            let mut inner = Rational::zero();
            for l in 0..j {
                inner += Rational::new(
                    BigInt::from(alt(j - l - 1)) * binomial(u64::from(j - 1), i64::from(l)),
                    BigInt::from(n - l).pow(r),
                );
            }
            let lhs = inner * Rational::from_integer(binomial(u64::from(n), i64::from(j)));
            let rhs = dsum(r, n, j).unwrap() / rat_int(i64::from(j));
            assert_eq!(lhs, rhs, "r={r} n={n} j={j}");
        }
    }

    #[test]
    fn mneimneh_explicit_small_polynomials() {
        let p21 = mneimneh_poly(2, 1, MneimnehForm::Convolution).unwrap();
        assert_eq!(p21.render("q"), "3/2 + -1*q + -1/2*q^2");
        let p11 = mneimneh_poly(1, 1, MneimnehForm::Convolution).unwrap();
        assert_eq!(p11.render("q"), "1 + -1*q");
        assert_eq!(
            p21,
            mneimneh_poly(2, 1, MneimnehForm::HarmonicTail).unwrap()
        );
    }

    #[test]
    fn mneimneh_forms_agree_on_small_grid() {
        for n in 1..=12u32 {
            for r in 1..=4u32 {
                let report = check_mneimneh(n, r).unwrap();
                assert!(report.pass, "n={n} r={r}: {:?}", report.rhs);
            }
        }
    }

    #[test]
    fn mneimneh_rejects_bad_orders() {
        assert!(mneimneh_poly(3, 2, MneimnehForm::HarmonicTail)
            .unwrap_err()
            .is_domain());
        assert!(mneimneh_poly(3, 8, MneimnehForm::ClosedFormKernel)
            .unwrap_err()
            .is_domain());
        assert!(mneimneh_poly(0, 1, MneimnehForm::Convolution)
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn lemma2_holds_for_small_odd_n() {
        for n in [1u32, 3, 5, 7, 9, 11, 21, 33] {
            let report = check_lemma2(n).unwrap();
            assert!(report.pass, "n={n}");
        }
        assert!(check_lemma2(4).unwrap_err().is_domain());
        assert!(check_lemma2(0).unwrap_err().is_domain());
    }

    #[test]
    fn lemma2_coefficient_sums_hand_checked() {
        // n = 5: sum_{r=1}^{4} (-1)^r C(5,r) (r-1) = 10 - 20 + 15 = 5.
        let mut s = 0i64;
        for r in 1..5u32 {
            let b: i64 = binomial(5, i64::from(r)).try_into().unwrap();
            s += alt(r) * b * (i64::from(r) - 1);
        }
        assert_eq!(s, 5);
    }

    #[test]
    fn heartsuit_holds_for_small_n() {
        for n in 1..=16u32 {
            let report = check_heartsuit(n).unwrap();
            assert!(report.pass, "n={n}");
        }
    }

    #[test]
    fn corollary1_frozen_values() {
        // n = 2: 2/3 on the shifted side and H_2 = 3/2 on the plain side.
        let report = check_corollary1(2).unwrap();
        assert!(report.pass);
        assert_eq!(report.lhs.as_deref(), Some("2/3 ; 3/2"));
        for n in 1..=24u32 {
            assert!(check_corollary1(n).unwrap().pass, "n={n}");
        }
    }

    #[test]
    fn sury93_three_shapes_agree() {
        let report = check_sury93(2).unwrap();
        assert!(report.pass);
        assert_eq!(report.lhs.as_deref(), Some("5/2"));
        for n in 0..=24u32 {
            assert!(check_sury93(n).unwrap().pass, "n={n}");
        }
    }

    #[test]
    fn triple_sum_closed_form_small_values() {
        // n = 3 has the single triple (1,2,3) with value 1/6; n = 4 adds
        // (1,2,4), (1,3,4), (2,3,4) for 5/12 total.
        let prefix = triple_harmonic_prefix(12);
        assert_eq!(prefix[3], rat(1, 6));
        assert_eq!(prefix[4], rat(5, 12));
        let table = HarmonicTable::new(12, 3);
        for n in 1..=12u32 {
            let report = check_triple_sum(
                n,
                &prefix[n as usize],
                table.get(n, 1),
                table.get(n, 2),
                table.get(n, 3),
            );
            assert!(report.pass, "n={n}");
        }
    }

    #[test]
    fn partition_count_reference_table() {
        for r in 1..=7u32 {
            assert!(check_partition_count(r).unwrap().pass, "r={r}");
        }
        assert!(check_partition_count(8).unwrap_err().is_domain());
    }

    #[test]
    fn determinant_and_partition_forms_agree() {
        for r in 1..=7u32 {
            for n in 1..=10u32 {
                for j in 1..=n {
                    assert!(check_det_vs_partition(r, n, j).unwrap().pass, "r={r} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn dsum_check_wrappers_pass_on_small_grid() {
        for r in 1..=6u32 {
            for n in 1..=10u32 {
                for j in 1..=n {
                    assert!(check_dsum_closed(r, n, j).unwrap().pass, "closed r={r} n={n} j={j}");
                    assert!(check_dsum_cross(r, n, j).unwrap().pass, "cross r={r} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn choi_partial_sums_frozen_prefixes() {
        // Series 1 after two terms: H_1/(2*3) + H_2/(3*4) = 1/6 + 1/8 = 7/24.
        let s1 = choi_partial_sum(1, 2).unwrap();
        assert!((s1 - 7.0 / 24.0).abs() < 1e-12, "got {s1}");
        // Series 2 and 3 numerators vanish at n = 1.
        assert_eq!(choi_partial_sum(2, 1).unwrap(), 0.0);
        assert_eq!(choi_partial_sum(3, 1).unwrap(), 0.0);
        assert!(choi_partial_sum(4, 10).unwrap_err().is_domain());
    }

    #[test]
    fn choi_series_approach_one_within_tolerance() {
        for series in 1..=3u32 {
            let report = check_choi(series, 100_000).unwrap();
            assert!(report.pass, "series {series}: {:?}", report.rhs);
        }
    }

    #[test]
    fn choi_third_series_converges_slowest() {
        // After 10^6 terms the third series still sits about 6.0e-4 away from
        // its limit while the first two are inside 2.0e-4.
        let d1 = (choi_partial_sum(1, 1_000_000).unwrap() - 1.0).abs();
        let d2 = (choi_partial_sum(2, 1_000_000).unwrap() - 1.0).abs();
        let d3 = (choi_partial_sum(3, 1_000_000).unwrap() - 1.0).abs();
        assert!(d1 < 2.0e-4, "d1={d1}");
        assert!(d2 < 2.0e-4, "d2={d2}");
        assert!(d3 > 2.0e-4 && d3 < 1.0e-3, "d3={d3}");
        assert!(d3 < choi_tail_tolerance(3, 1_000_000).unwrap());
    }

    #[test]
    fn deep_grid_spot_checks_with_seeded_rng() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..25 {
            let n = rng.gen_range(20..=40u32);
            let j = rng.gen_range(1..=n);
            let r = rng.gen_range(1..=7u32);
            assert!(check_dsum_closed(r, n, j).unwrap().pass, "r={r} n={n} j={j}");
        }
    }
}
