//! Coefficient-wise polynomial identities: the split alternating expansion
//! of x^m - x, the odd-n truncated-logarithm rewrite, the alternating
//! binomial rewrites, and the two classic evaluations they specialize to.

use fqlab::fermat::check_observation;
use fqlab::identities::{
    check_corollary1, check_heartsuit, check_lemma2, check_sury93,
};
use fqlab::{CheckError, CheckReport};

fn show(name: &str, report: &CheckReport) {
    println!("{name}:");
    println!("  lhs  {}", report.lhs.as_deref().unwrap_or("-"));
    println!("  rhs  {}", report.rhs.as_deref().unwrap_or("-"));
    println!("  pass {}", report.pass);
}

fn main() -> Result<(), CheckError> {
    show("x^m - x split expansion, m = 5", &check_observation(5));
    show("truncated-logarithm rewrite, n = 5", &check_lemma2(5)?);
    show("alternating rewrite of sum (1-x)^k/k, n = 4", &check_heartsuit(4)?);
    show("evaluations to n/(n+1) and H_n, n = 4", &check_corollary1(4)?);
    show("inverse binomial sum in three shapes, n = 4", &check_sury93(4)?);
    Ok(())
}
