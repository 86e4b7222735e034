//! Three series with harmonic-number numerators that converge to 1, tracked
//! term by term against their proven tail tolerances.
//!
//! The third series converges much more slowly than the other two; at a
//! million terms it still sits several tolerance widths away from 1, and
//! this example prints that honestly rather than smoothing it over.

use fqlab::identities::{check_choi, choi_partial_sum, choi_tail_tolerance};
use fqlab::CheckError;

fn main() -> Result<(), CheckError> {
    for series in 1..=3u32 {
        println!("series {series}:");
        for terms in [100u64, 10_000, 1_000_000] {
            let sum = choi_partial_sum(series, terms)?;
            let tol = choi_tail_tolerance(series, terms)?;
            let deviation = (sum - 1.0).abs();
            println!(
                "  N = {terms:>9}: partial sum {sum:.9}, |sum - 1| = {deviation:.3e}, tolerance {tol:.3e}, within {}",
                deviation <= tol
            );
        }
        let report = check_choi(series, 1_000_000)?;
        println!("  report: lhs {} pass {}", report.lhs.as_deref().unwrap_or("-"), report.pass);
    }
    Ok(())
}
