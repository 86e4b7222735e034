//! The order-r harmonic polynomial in two division-light shapes: a sum over
//! integer partitions of r and a Hessenberg determinant, plus the triple
//! reciprocal sum whose closed form is built from the same pieces.

use fqlab::harmonic::{harmonic, triple_harmonic_sum};
use fqlab::identities::check_triple_sum;
use fqlab::partition::{hdiff_determinant_form, hdiff_partition_form, partitions};
use fqlab::rational::render_rational;
use fqlab::CheckError;

fn main() -> Result<(), CheckError> {
    println!("partitions of r and the two forms they feed, at n = 8, j = 3:");
    for r in 1..=5u32 {
        let parts = partitions(r);
        let from_partitions = hdiff_partition_form(r, 8, 3)?;
        let from_determinant = hdiff_determinant_form(r, 8, 3)?;
        println!(
            "  r = {r}: {} partitions, partition form {}, determinant form {}, equal {}",
            parts.len(),
            render_rational(&from_partitions),
            render_rational(&from_determinant),
            from_partitions == from_determinant
        );
    }

    println!("\npartitions of 4 written as multiplicity vectors:");
    for part in partitions(4) {
        println!("  multiplicities {:?} (weight {})", part.multiplicities(), part.weight());
    }

    println!("\ntriple sum 1/(i j k) over i < j < k <= n against its closed form:");
    for n in [3u32, 5, 10, 25] {
        let sum = triple_harmonic_sum(n)?;
        let report = check_triple_sum(
            n,
            &sum,
            &harmonic(n, 1),
            &harmonic(n, 2),
            &harmonic(n, 3),
        );
        println!(
            "  n = {n:2}: sum {} pass {}",
            report.lhs.as_deref().unwrap_or("-"),
            report.pass
        );
    }
    Ok(())
}
