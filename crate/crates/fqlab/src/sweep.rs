//! Sweep configuration, validation, execution, and report rendering.
//!
//! A sweep is the deterministic expansion of a configuration into check
//! reports: selected families run in selection order, each family walks its
//! grid in a fixed order, and rendering never consults anything beyond the
//! report list. Running the same configuration twice yields byte-identical
//! output.

use std::fmt;
use std::str::FromStr;

use crate::families::{all_families, family, Family, EXACT_PRIME_CAP};
use crate::primes::PRIMALITY_BOUND;
use crate::report::{BackendTag, CheckReport};

/// Everything a sweep needs. `families` empty means the full registry.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub families: Vec<String>,
    pub prime_lo: u64,
    pub prime_hi: u64,
    pub n_lo: u32,
    pub n_hi: u32,
    pub r_max: u32,
    pub backend: BackendTag,
    pub choi_terms: u64,
    pub allow_domain_errors: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: Vec::new(),
            prime_lo: 3,
            prime_hi: 199,
            n_lo: 1,
            n_hi: 30,
            r_max: 6,
            backend: BackendTag::Both,
            choi_terms: 100_000,
            allow_domain_errors: false,
        }
    }
}

/// A configuration the sweep refuses to run; the message names the offending
/// field. Distinct from check failures: these map to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Resolve the family selection: the full registry when empty, otherwise the
/// named families in the given order with duplicates dropped.
pub fn selected_families(cfg: &SweepConfig) -> Result<Vec<&'static Family>, ConfigError> {
    if cfg.families.is_empty() {
        return Ok(all_families().iter().collect());
    }
    let mut out: Vec<&'static Family> = Vec::new();
    for id in &cfg.families {
        let fam = family(id).ok_or_else(|| {
            ConfigError(format!(
                "unknown family \"{id}\"; run list-families for the catalog"
            ))
        })?;
        if !out.iter().any(|f| f.id == fam.id) {
            out.push(fam);
        }
    }
    Ok(out)
}

/// Reject configurations the runners cannot honor.
pub fn validate(cfg: &SweepConfig) -> Result<(), ConfigError> {
    let selection = selected_families(cfg)?;
    if cfg.prime_lo > cfg.prime_hi {
        return Err(ConfigError(format!(
            "empty prime range {}:{}",
            cfg.prime_lo, cfg.prime_hi
        )));
    }
    if cfg.prime_hi > PRIMALITY_BOUND {
        return Err(ConfigError(format!(
            "prime range upper bound {} exceeds the deterministic primality bound {}",
            cfg.prime_hi, PRIMALITY_BOUND
        )));
    }
    if cfg.n_lo < 1 {
        return Err(ConfigError("n range must start at 1 or higher".to_string()));
    }
    if cfg.n_lo > cfg.n_hi {
        return Err(ConfigError(format!(
            "empty n range {}:{}",
            cfg.n_lo, cfg.n_hi
        )));
    }
    if cfg.r_max < 1 {
        return Err(ConfigError("r-max must be at least 1".to_string()));
    }
    if cfg.choi_terms < 1 {
        return Err(ConfigError("choi-terms must be at least 1".to_string()));
    }
    if cfg.backend == BackendTag::Exact
        && cfg.prime_hi > EXACT_PRIME_CAP
        && selection.iter().any(|f| f.uses_primes)
    {
        return Err(ConfigError(format!(
            "the exact backend sweeps primes only up to {EXACT_PRIME_CAP}, got upper bound {}; \
             use the modular or combined backend for larger primes",
            cfg.prime_hi
        )));
    }
    Ok(())
}

/// Validate, then run every selected family in order and concatenate the
/// reports.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<CheckReport>, ConfigError> {
    validate(cfg)?;
    let mut reports = Vec::new();
    for fam in selected_families(cfg)? {
        reports.extend(fam.run(cfg));
    }
    Ok(reports)
}

/// Output renderings of a report list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// One JSON object per line.
    JsonLines,
    /// Comma-separated rows under a fixed header.
    Csv,
    /// Per-family pass/fail/domain tallies plus a total line.
    Summary,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "jsonl" | "json-lines" => Ok(OutputFormat::JsonLines),
            "csv" => Ok(OutputFormat::Csv),
            "summary" => Ok(OutputFormat::Summary),
            other => Err(format!(
                "unknown format \"{other}\" (expected jsonl, csv or summary)"
            )),
        }
    }
}

pub const CSV_HEADER: &str = "family,params,modulus,lhs,rhs,pass,backend,agree,error";

/// Render the report list in the chosen format. The result always ends with
/// a newline unless the list is empty.
pub fn render_reports(reports: &[CheckReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::JsonLines => {
            let mut out = String::new();
            for report in reports {
                out.push_str(&report.to_json_line());
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for report in reports {
                out.push_str(&report.to_csv_row());
                out.push('\n');
            }
            out
        }
        OutputFormat::Summary => render_summary(reports),
    }
}

fn render_summary(reports: &[CheckReport]) -> String {
    struct Tally {
        family: &'static str,
        pass: usize,
        fail: usize,
        domain: usize,
    }
    impl Tally {
        fn line(&self, label: &str) -> String {
            format!(
                "{label}: {} checks, {} pass, {} fail, {} domain\n",
                self.pass + self.fail + self.domain,
                self.pass,
                self.fail,
                self.domain
            )
        }
    }
    let mut tallies: Vec<Tally> = Vec::new();
    let mut total = Tally {
        family: "",
        pass: 0,
        fail: 0,
        domain: 0,
    };
    for report in reports {
        if tallies.last().map(|t| t.family) != Some(report.family) {
            tallies.push(Tally {
                family: report.family,
                pass: 0,
                fail: 0,
                domain: 0,
            });
        }
        let tally = tallies.last_mut().expect("pushed above");
        if report.pass {
            tally.pass += 1;
            total.pass += 1;
        } else if report.domain_error {
            tally.domain += 1;
            total.domain += 1;
        } else {
            tally.fail += 1;
            total.fail += 1;
        }
    }
    let mut out = String::new();
    for tally in &tallies {
        out.push_str(&tally.line(tally.family));
    }
    out.push_str(&total.line("total"));
    out
}

/// Process exit code for a finished sweep: 0 when every report passes
/// (domain-error rows are tolerated only under the allow flag), 1 otherwise.
/// Code 2 is reserved for configuration and usage errors.
pub fn exit_code(reports: &[CheckReport], allow_domain_errors: bool) -> i32 {
    let failing = reports
        .iter()
        .any(|r| !r.pass && !(r.domain_error && allow_domain_errors));
    i32::from(failing)
}
