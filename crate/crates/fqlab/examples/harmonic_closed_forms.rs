//! The signed double-binomial sums, their harmonic closed forms, the
//! Stirling rewrite at order 2, and the telescoping one-step recurrences.

use fqlab::identities::{
    difference_recurrences, dsum, dsum_closed_form, dsum_stirling_form, hypergeom_step,
};
use fqlab::rational::render_rational;
use fqlab::CheckError;

fn main() -> Result<(), CheckError> {
    println!("dsum(r, n, j) against the closed form in h_t = H_n^(t) - H_(n-j)^(t):");
    for r in 1..=5u32 {
        let (n, j) = (9, 4);
        let direct = dsum(r, n, j)?;
        let closed = dsum_closed_form(r, n, j)?;
        println!(
            "  r = {r}: direct {} closed {} equal {}",
            render_rational(&direct),
            render_rational(&closed),
            direct == closed
        );
    }

    println!("\norder-2 sum in Stirling numbers of the first kind:");
    for (n, j) in [(5u32, 3u32), (9, 4), (14, 7)] {
        let stirling = dsum_stirling_form(n, j)?;
        let direct = dsum(2, n, j)?;
        println!(
            "  n = {n:2}, j = {j}: {} (matches direct: {})",
            render_rational(&stirling),
            stirling == direct
        );
    }

    println!("\ntelescoping steps for the order 2..4 sums at n = 9, j = 4:");
    let report = difference_recurrences(9, 4)?;
    println!("  lhs {}", report.lhs.as_deref().unwrap_or("-"));
    println!("  rhs {}", report.rhs.as_deref().unwrap_or("-"));
    println!("  pass {}", report.pass);

    println!("\nalternating partial fractions collapse to (j-1)!(n-j)!/n!:");
    for (n, j) in [(6u32, 4u32), (9, 4), (12, 5)] {
        let report = hypergeom_step(n, j)?;
        println!(
            "  n = {n:2}, j = {j}: value {} pass {}",
            report.lhs.as_deref().unwrap_or("-"),
            report.pass
        );
    }
    Ok(())
}
