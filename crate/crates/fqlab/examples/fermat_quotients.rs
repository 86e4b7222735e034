//! Fermat quotients (a^p - a)/p: exact values, residues mod p, and the
//! shift rule relating the quotient at a to the quotient at a + 1.

use fqlab::fermat::{
    check_spadesuit, fermat_quotient, fermat_quotient_residue, halved_fermat_quotient, Backend,
};
use fqlab::CheckError;

fn main() -> Result<(), CheckError> {
    println!("exact quotients (a^p - a)/p:");
    for p in [3u64, 5, 7, 11, 13] {
        let q2 = fermat_quotient(2, p)?;
        let q10 = fermat_quotient(10, p)?;
        println!("  p = {p:2}: a=2 -> {q2}, a=10 -> {q10}");
    }

    println!("\nhalved quotients (2^(p-1) - 1)/p and their residues mod p:");
    for p in [5u64, 7, 11, 13, 1093] {
        let half = halved_fermat_quotient(p)?;
        let res = fermat_quotient_residue(2, p, 1)?;
        // 1093 is a Wieferich prime, so its quotient residue vanishes.
        println!("  p = {p:4}: value {half}, (2^p - 2)/p = {} mod {p}", res.value());
    }

    println!("\nshift rule (a^p - a)/p = sum_r (a+1)^r/r + ((a+1)^p - (a+1))/p mod p:");
    for a in [-3i64, 0, 2, 9] {
        let report = check_spadesuit(a, 13, Backend::Exact)?;
        println!("  a = {a:2}: lhs {} rhs {} pass {}",
            report.lhs.as_deref().unwrap_or("-"),
            report.rhs.as_deref().unwrap_or("-"),
            report.pass);
    }
    Ok(())
}
