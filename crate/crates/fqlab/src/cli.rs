//! Command-line front end.
//!
//! `verify [OPTIONS]` runs a sweep and emits one report per check;
//! `verify list-families` prints the family catalog. All options can also be
//! supplied through a JSON config file, with explicit flags winning on
//! conflict. Exit codes: 0 all checks passed (domain-error rows tolerated
//! only under --allow-domain-errors), 1 at least one check failed, 2 the
//! invocation or configuration was unusable.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::families::all_families;
use crate::report::BackendTag;
use crate::sweep::{exit_code, render_reports, run_sweep, OutputFormat, SweepConfig};

#[derive(Parser, Debug)]
#[command(
    name = "verify",
    about = "Check congruence and identity families over configurable sweeps",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    opts: SweepOpts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every check family with its parameter keys.
    ListFamilies,
}

#[derive(Args, Debug, Default)]
struct SweepOpts {
    /// Comma-separated family ids (default: every family).
    #[arg(long, value_name = "IDS")]
    families: Option<String>,

    /// Prime range lo:hi, inclusive on both ends.
    #[arg(long, value_name = "LO:HI")]
    primes: Option<String>,

    /// n range lo:hi, inclusive on both ends.
    #[arg(long = "n-range", value_name = "LO:HI")]
    n_range: Option<String>,

    /// Largest order r for the order-swept families.
    #[arg(long = "r-max", value_name = "R")]
    r_max: Option<u32>,

    /// Arithmetic backend: exact, modular or both.
    #[arg(long, value_name = "NAME")]
    backend: Option<String>,

    /// Output format: jsonl, csv or summary.
    #[arg(long, value_name = "NAME")]
    format: Option<String>,

    /// Write the rendered reports to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// JSON config file with the same keys as these flags; flags win.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Terms to accumulate in the series partial sums.
    #[arg(long = "choi-terms", value_name = "N")]
    choi_terms: Option<u64>,

    /// Treat out-of-domain cells as tolerated; genuine failures still exit 1.
    #[arg(long = "allow-domain-errors")]
    allow_domain_errors: bool,
}

/// The config file mirrors the flags field for field. Unknown keys are
/// rejected so a typo cannot silently fall back to a default.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    families: Option<Vec<String>>,
    primes: Option<String>,
    n_range: Option<String>,
    r_max: Option<u32>,
    backend: Option<String>,
    format: Option<String>,
    out: Option<PathBuf>,
    choi_terms: Option<u64>,
    allow_domain_errors: Option<bool>,
}

fn parse_range_u64(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got \"{s}\""))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound \"{lo}\": {e}"))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound \"{hi}\": {e}"))?;
    Ok((lo, hi))
}

fn parse_range_u32(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = parse_range_u64(s)?;
    let lo = u32::try_from(lo).map_err(|_| format!("lower bound {lo} is too large"))?;
    let hi = u32::try_from(hi).map_err(|_| format!("upper bound {hi} is too large"))?;
    Ok((lo, hi))
}

fn parse_backend(s: &str) -> Result<BackendTag, String> {
    match s {
        "exact" => Ok(BackendTag::Exact),
        "modular" => Ok(BackendTag::Modular),
        "both" => Ok(BackendTag::Both),
        other => Err(format!(
            "unknown backend \"{other}\" (expected exact, modular or both)"
        )),
    }
}

fn split_families(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(str::to_string)
        .collect()
}

/// Fold defaults, then the config file, then the flags into the final sweep
/// configuration plus the output routing.
fn build_config(opts: &SweepOpts) -> Result<(SweepConfig, OutputFormat, Option<PathBuf>), String> {
    let mut cfg = SweepConfig::default();
    let mut format = OutputFormat::JsonLines;
    let mut out_path = None;

    if let Some(path) = &opts.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
        let file: ConfigFile = serde_json::from_str(&text)
            .map_err(|e| format!("bad config file {}: {e}", path.display()))?;
        if let Some(families) = file.families {
            cfg.families = families;
        }
        if let Some(primes) = file.primes {
            (cfg.prime_lo, cfg.prime_hi) = parse_range_u64(&primes)?;
        }
        if let Some(n_range) = file.n_range {
            (cfg.n_lo, cfg.n_hi) = parse_range_u32(&n_range)?;
        }
        if let Some(r_max) = file.r_max {
            cfg.r_max = r_max;
        }
        if let Some(backend) = file.backend {
            cfg.backend = parse_backend(&backend)?;
        }
        if let Some(f) = file.format {
            format = f.parse()?;
        }
        if let Some(terms) = file.choi_terms {
            cfg.choi_terms = terms;
        }
        if let Some(allow) = file.allow_domain_errors {
            cfg.allow_domain_errors = allow;
        }
        if file.out.is_some() {
            out_path = file.out;
        }
    }

    if let Some(families) = &opts.families {
        cfg.families = split_families(families);
    }
    if let Some(primes) = &opts.primes {
        (cfg.prime_lo, cfg.prime_hi) = parse_range_u64(primes)?;
    }
    if let Some(n_range) = &opts.n_range {
        (cfg.n_lo, cfg.n_hi) = parse_range_u32(n_range)?;
    }
    if let Some(r_max) = opts.r_max {
        cfg.r_max = r_max;
    }
    if let Some(backend) = &opts.backend {
        cfg.backend = parse_backend(backend)?;
    }
    if let Some(f) = &opts.format {
        format = f.parse()?;
    }
    if let Some(terms) = opts.choi_terms {
        cfg.choi_terms = terms;
    }
    if opts.allow_domain_errors {
        cfg.allow_domain_errors = true;
    }
    if opts.out.is_some() {
        out_path = opts.out.clone();
    }

    Ok((cfg, format, out_path))
}

/// Parse the argument list, run the requested action, and write everything a
/// user would see to the supplied streams. Returns the process exit code
/// instead of exiting, so tests can drive it directly.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                return 2;
            }
            let _ = write!(stdout, "{rendered}");
            return 0;
        }
    };

    if let Some(Command::ListFamilies) = cli.command {
        for fam in all_families() {
            let _ = writeln!(stdout, "{:<26} {:<16} {}", fam.id, fam.params, fam.description);
        }
        return 0;
    }

    let (cfg, format, out_path) = match build_config(&cli.opts) {
        Ok(built) => built,
        Err(message) => {
            let _ = writeln!(stderr, "{message}");
            return 2;
        }
    };

    let reports = match run_sweep(&cfg) {
        Ok(reports) => reports,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            return 2;
        }
    };

    let rendered = render_reports(&reports, format);
    match out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered.as_bytes()) {
                let _ = writeln!(stderr, "cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = stdout.write_all(rendered.as_bytes());
        }
    }

    exit_code(&reports, cfg.allow_domain_errors)
}
