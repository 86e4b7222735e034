//! Congruences that live modulo p^2: the vanishing harmonic sum, the lifted
//! halved-quotient expansion, and its refinement with a second-order term.
//!
//! The harmonic sum over 1..p-1 vanishes mod p^2 only for p > 3, and the
//! lifted expansion genuinely fails at p = 3, so both show up here as an
//! error row and a failing row rather than being skipped.

use fqlab::fermat::{check_prop1, check_thm1, check_wolstenholme, Backend};
use fqlab::{CheckError, CheckReport};

type PrimeCheck = fn(u64, Backend) -> Result<CheckReport, CheckError>;

fn main() {
    let checks: [(&str, PrimeCheck); 3] = [
        ("wolstenholme", check_wolstenholme),
        ("prop1", check_prop1),
        ("thm1", check_thm1),
    ];
    for p in [3u64, 5, 7, 11, 13, 17] {
        println!("p = {p}:");
        for (name, check) in checks {
            match check(p, Backend::Exact) {
                Ok(report) => println!(
                    "  {name:12} lhs {:>4} rhs {:>4} pass {}",
                    report.lhs.as_deref().unwrap_or("-"),
                    report.rhs.as_deref().unwrap_or("-"),
                    report.pass
                ),
                Err(e) => println!("  {name:12} out of domain: {e}"),
            }
        }
    }
}
