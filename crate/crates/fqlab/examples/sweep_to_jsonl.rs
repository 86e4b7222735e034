//! Driving a sweep from code instead of the command line: build a
//! configuration, run the selected families, and render the reports both as
//! JSON lines and as a per-family summary.

use fqlab::sweep::{render_reports, run_sweep, OutputFormat, SweepConfig};
use fqlab::BackendTag;

fn main() {
    let cfg = SweepConfig {
        families: vec!["eisenstein".to_string(), "wolstenholme".to_string()],
        prime_lo: 3,
        prime_hi: 31,
        backend: BackendTag::Both,
        ..SweepConfig::default()
    };

    let reports = run_sweep(&cfg).expect("the configuration above is valid");

    println!("{}", render_reports(&reports, OutputFormat::JsonLines));
    println!("{}", render_reports(&reports, OutputFormat::Summary));

    let failures = reports.iter().filter(|r| !r.pass && !r.domain_error).count();
    let domain = reports.iter().filter(|r| r.domain_error).count();
    println!("failures: {failures}, out-of-domain cells: {domain}");
}
