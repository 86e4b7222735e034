//! The mod-p sum forms of the quotient: the halved quotient written as an
//! inverse-binomial sum, as power sums, as a 2^j/j sum, and as alternating
//! and half-range reciprocal sums, all checked at a single prime.

use fqlab::fermat::{check_eisenstein, check_lemma1, Backend, Lemma1Variant};
use fqlab::CheckError;

fn main() -> Result<(), CheckError> {
    let p = 17;

    let report = check_eisenstein(p, Backend::Exact)?;
    println!(
        "eisenstein   p = {p}: lhs {} rhs {} pass {}",
        report.lhs.as_deref().unwrap_or("-"),
        report.rhs.as_deref().unwrap_or("-"),
        report.pass
    );

    let variants = [
        Lemma1Variant::Eq2,
        Lemma1Variant::Eq3 { n: 3 },
        Lemma1Variant::Eq4 { n: 3 },
        Lemma1Variant::Eq5,
        Lemma1Variant::Eq6a,
        Lemma1Variant::Eq6b,
    ];
    for variant in variants {
        let report = check_lemma1(p, variant, Backend::Exact)?;
        println!(
            "{:?} p = {p}: lhs {} rhs {} pass {}",
            variant,
            report.lhs.as_deref().unwrap_or("-"),
            report.rhs.as_deref().unwrap_or("-"),
            report.pass
        );
    }
    Ok(())
}
