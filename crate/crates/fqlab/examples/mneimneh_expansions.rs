//! Binomially weighted harmonic sums as polynomials in q: the defining
//! convolution sum_k H_k^(r) C(n,k) (1-q)^k q^(n-k) expanded against every
//! kernel form that is supposed to equal it.

use fqlab::identities::{mneimneh_poly, MneimnehForm};
use fqlab::CheckError;

fn main() -> Result<(), CheckError> {
    println!("defining convolution for small n at order r = 1:");
    for n in 1..=4u32 {
        let poly = mneimneh_poly(n, 1, MneimnehForm::Convolution)?;
        println!("  n = {n}: {}", poly.render("q"));
    }

    println!("\nall kernel forms at n = 5, r = 2:");
    let reference = mneimneh_poly(5, 2, MneimnehForm::Convolution)?;
    println!("  convolution          {}", reference.render("q"));
    for form in [
        MneimnehForm::InverseBinomialKernel,
        MneimnehForm::DoubleBinomialKernel,
        MneimnehForm::ClosedFormKernel,
    ] {
        let poly = mneimneh_poly(5, 2, form)?;
        println!(
            "  {form:?}: matches convolution = {}",
            poly == reference
        );
    }

    // The harmonic-tail rewrite exists only at order 1.
    let tail = mneimneh_poly(5, 1, MneimnehForm::HarmonicTail)?;
    let base = mneimneh_poly(5, 1, MneimnehForm::Convolution)?;
    println!("\nharmonic-tail form at r = 1 matches: {}", tail == base);
    let rejected = mneimneh_poly(5, 2, MneimnehForm::HarmonicTail);
    println!("harmonic-tail form at r = 2 is rejected: {}", rejected.is_err());
    Ok(())
}
