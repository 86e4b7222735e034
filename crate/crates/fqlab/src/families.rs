//! Registry of check families. A family is a named grid of related checks:
//! the sweep selects families by id, each family expands the configured
//! ranges into cells, and every cell yields exactly one [`CheckReport`].
//!
//! Conventions shared by every runner:
//!
//! - Cells are visited in a fixed nested order, so two runs over the same
//!   configuration emit byte-identical report streams.
//! - A cell whose check is undefined at its parameters (even prime, p = 3
//!   for the mod-p^2 harmonic vanishing, out-of-range order) yields an error
//!   report with `domain_error` set rather than aborting the family.
//! - Congruence families honor the configured backend; above
//!   [`EXACT_PRIME_CAP`] the combined backend degrades to modular only.
//! - Identity families are exact by construction and ignore the backend.
//! - Error reports carry the modulus the check would have used; if p^2 does
//!   not fit in 64 bits the row falls back to the prime itself and the error
//!   message says why.

use crate::error::CheckError;
use crate::fermat::{
    check_eisenstein, check_lemma1, check_observation, check_prop1, check_spadesuit, check_thm1,
    check_wolstenholme, binom_p_over_p_residue, squared_modulus, Backend, Lemma1Variant,
};
use crate::harmonic::{triple_harmonic_prefix, HarmonicTable};
use crate::identities::{
    check_choi, check_corollary1, check_det_vs_partition, check_dsum_closed, check_dsum_cross,
    check_heartsuit, check_lemma2, check_mneimneh, check_partition_count, check_sury93,
    check_triple_sum, difference_recurrences, hypergeom_step,
};
use crate::primes::primes_in_range;
use crate::report::{BackendTag, CheckReport, Modulus, Params};
use crate::sweep::SweepConfig;

/// Largest prime the exact backend sweeps; the combined backend switches to
/// modular-only above it, and an exact-only sweep whose prime range exceeds
/// it is rejected at configuration time.
pub const EXACT_PRIME_CAP: u64 = 101;

/// One named grid of checks.
pub struct Family {
    pub id: &'static str,
    /// Parameter keys of this family's records, in emission order.
    pub params: &'static str,
    pub description: &'static str,
    /// True when the family's grid is driven by the prime range.
    pub uses_primes: bool,
    runner: fn(&SweepConfig) -> Vec<CheckReport>,
}

impl Family {
    pub fn run(&self, cfg: &SweepConfig) -> Vec<CheckReport> {
        (self.runner)(cfg)
    }
}

/// All families in registry order; sweeps with no explicit selection run the
/// whole list top to bottom.
pub fn all_families() -> &'static [Family] {
    &FAMILIES
}

/// Look up one family by id.
pub fn family(id: &str) -> Option<&'static Family> {
    FAMILIES.iter().find(|f| f.id == id)
}

/// Run one congruence cell under the configured backend. The combined
/// backend runs both and merges; above the exact cap it quietly degrades to
/// modular so large primes stay reachable.
fn run_cell(
    choice: BackendTag,
    p: u64,
    check: impl Fn(Backend) -> Result<CheckReport, CheckError>,
    family: &'static str,
    params: impl Fn() -> Params,
    modulus: impl Fn() -> Modulus,
) -> CheckReport {
    let effective = match choice {
        BackendTag::Both if p > EXACT_PRIME_CAP => BackendTag::Modular,
        other => other,
    };
    let err_row =
        |e: &CheckError, tag: BackendTag| CheckReport::from_error(family, params(), modulus(), e, tag);
    match effective {
        BackendTag::Exact => {
            check(Backend::Exact).unwrap_or_else(|e| err_row(&e, BackendTag::Exact))
        }
        BackendTag::Modular => {
            check(Backend::Modular).unwrap_or_else(|e| err_row(&e, BackendTag::Modular))
        }
        BackendTag::Both => match (check(Backend::Exact), check(Backend::Modular)) {
            (Ok(exact), Ok(modular)) => CheckReport::merged_both(exact, modular),
            (Err(e), _) | (Ok(_), Err(e)) => err_row(&e, BackendTag::Both),
        },
    }
}

/// Wrap an exact-only identity cell, turning an error into an error report.
fn identity_cell(
    result: Result<CheckReport, CheckError>,
    family: &'static str,
    params: impl FnOnce() -> Params,
) -> CheckReport {
    result.unwrap_or_else(|e| {
        CheckReport::from_error(family, params(), Modulus::Exact, &e, BackendTag::Exact)
    })
}

/// Modulus for p^2-level rows; falls back to the prime itself when the
/// square does not fit in 64 bits (the paired error message explains).
fn squared_or_prime(p: u64) -> Modulus {
    Modulus::Mod(squared_modulus(p).unwrap_or(p))
}

fn run_eisenstein(cfg: &SweepConfig) -> Vec<CheckReport> {
    primes_in_range(cfg.prime_lo, cfg.prime_hi)
        .into_iter()
        .map(|p| {
            run_cell(
                cfg.backend,
                p,
                |b| check_eisenstein(p, b),
                "eisenstein",
                || Params(vec![("p", p as i64)]),
                || Modulus::Mod(p),
            )
        })
        .collect()
}

fn run_lemma1(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let n_lo = cfg.n_lo.max(2);
    for p in primes_in_range(cfg.prime_lo, cfg.prime_hi) {
        let mut variants = vec![Lemma1Variant::Eq2];
        for n in n_lo..=cfg.n_hi {
            variants.push(Lemma1Variant::Eq3 { n });
        }
        for n in n_lo..=cfg.n_hi {
            variants.push(Lemma1Variant::Eq4 { n });
        }
        variants.extend([Lemma1Variant::Eq5, Lemma1Variant::Eq6a, Lemma1Variant::Eq6b]);
        for v in variants {
            out.push(run_cell(
                cfg.backend,
                p,
                |b| check_lemma1(p, v, b),
                "lemma1",
                || v.params(p),
                || Modulus::Mod(p),
            ));
        }
    }
    out
}

fn run_spadesuit(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for p in primes_in_range(cfg.prime_lo, cfg.prime_hi) {
        for a in -10i64..=10 {
            out.push(run_cell(
                cfg.backend,
                p,
                |b| check_spadesuit(a, p, b),
                "spadesuit",
                || Params(vec![("p", p as i64), ("a", a)]),
                || Modulus::Mod(p),
            ));
        }
    }
    out
}

fn run_binom_over_p(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for p in primes_in_range(cfg.prime_lo, cfg.prime_hi) {
        for r in 1..p {
            out.push(run_cell(
                cfg.backend,
                p,
                |b| binom_p_over_p_residue(p, r, b),
                "binom-over-p",
                || Params(vec![("p", p as i64), ("r", r as i64)]),
                || Modulus::Mod(p),
            ));
        }
    }
    out
}

fn run_wolstenholme(cfg: &SweepConfig) -> Vec<CheckReport> {
    primes_in_range(cfg.prime_lo, cfg.prime_hi)
        .into_iter()
        .map(|p| {
            run_cell(
                cfg.backend,
                p,
                |b| check_wolstenholme(p, b),
                "wolstenholme",
                || Params(vec![("p", p as i64)]),
                || squared_or_prime(p),
            )
        })
        .collect()
}

fn run_prop1(cfg: &SweepConfig) -> Vec<CheckReport> {
    primes_in_range(cfg.prime_lo, cfg.prime_hi)
        .into_iter()
        .map(|p| {
            run_cell(
                cfg.backend,
                p,
                |b| check_prop1(p, b),
                "prop1",
                || Params(vec![("p", p as i64)]),
                || squared_or_prime(p),
            )
        })
        .collect()
}

fn run_thm1(cfg: &SweepConfig) -> Vec<CheckReport> {
    primes_in_range(cfg.prime_lo, cfg.prime_hi)
        .into_iter()
        .map(|p| {
            run_cell(
                cfg.backend,
                p,
                |b| check_thm1(p, b),
                "thm1",
                || Params(vec![("p", p as i64)]),
                || squared_or_prime(p),
            )
        })
        .collect()
}

fn run_observation(cfg: &SweepConfig) -> Vec<CheckReport> {
    (cfg.n_lo.max(1)..=cfg.n_hi)
        .map(check_observation)
        .collect()
}

fn run_lemma2(cfg: &SweepConfig) -> Vec<CheckReport> {
    (cfg.n_lo..=cfg.n_hi)
        .filter(|n| n % 2 == 1)
        .map(|n| identity_cell(check_lemma2(n), "lemma2", || Params(vec![("n", i64::from(n))])))
        .collect()
}

fn run_heartsuit(cfg: &SweepConfig) -> Vec<CheckReport> {
    (cfg.n_lo..=cfg.n_hi)
        .map(|n| {
            identity_cell(check_heartsuit(n), "heartsuit", || {
                Params(vec![("n", i64::from(n))])
            })
        })
        .collect()
}

fn run_corollary1(cfg: &SweepConfig) -> Vec<CheckReport> {
    (cfg.n_lo..=cfg.n_hi)
        .map(|n| {
            identity_cell(check_corollary1(n), "corollary1", || {
                Params(vec![("n", i64::from(n))])
            })
        })
        .collect()
}

fn run_sury93(cfg: &SweepConfig) -> Vec<CheckReport> {
    (cfg.n_lo..=cfg.n_hi)
        .map(|n| {
            identity_cell(check_sury93(n), "sury93", || {
                Params(vec![("n", i64::from(n))])
            })
        })
        .collect()
}

fn run_mneimneh(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in cfg.n_lo..=cfg.n_hi {
        for r in 1..=cfg.r_max {
            out.push(identity_cell(check_mneimneh(n, r), "mneimneh", || {
                Params(vec![("n", i64::from(n)), ("r", i64::from(r))])
            }));
        }
    }
    out
}

fn run_dsum_closed(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for r in 1..=cfg.r_max {
        for n in cfg.n_lo..=cfg.n_hi {
            for j in 1..=n {
                out.push(identity_cell(check_dsum_closed(r, n, j), "dsum-closed", || {
                    Params(vec![
                        ("r", i64::from(r)),
                        ("n", i64::from(n)),
                        ("j", i64::from(j)),
                    ])
                }));
            }
        }
    }
    out
}

fn run_dsum_cross(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for r in 1..=cfg.r_max {
        for n in cfg.n_lo..=cfg.n_hi {
            for j in 1..=n {
                out.push(identity_cell(check_dsum_cross(r, n, j), "dsum-cross", || {
                    Params(vec![
                        ("r", i64::from(r)),
                        ("n", i64::from(n)),
                        ("j", i64::from(j)),
                    ])
                }));
            }
        }
    }
    out
}

fn run_difference_recurrences(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in cfg.n_lo..=cfg.n_hi {
        for j in 2..=n {
            out.push(identity_cell(
                difference_recurrences(n, j),
                "difference-recurrences",
                || Params(vec![("n", i64::from(n)), ("j", i64::from(j))]),
            ));
        }
    }
    out
}

fn run_hypergeom_step(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in cfg.n_lo..=cfg.n_hi {
        for j in 1..=n {
            out.push(identity_cell(hypergeom_step(n, j), "hypergeom-step", || {
                Params(vec![("n", i64::from(n)), ("j", i64::from(j))])
            }));
        }
    }
    out
}

fn run_triple_sum(cfg: &SweepConfig) -> Vec<CheckReport> {
    let prefix = triple_harmonic_prefix(cfg.n_hi);
    let table = HarmonicTable::new(cfg.n_hi, 3);
    (cfg.n_lo..=cfg.n_hi)
        .map(|n| {
            check_triple_sum(
                n,
                &prefix[n as usize],
                table.get(n, 1),
                table.get(n, 2),
                table.get(n, 3),
            )
        })
        .collect()
}

fn run_partition_count(cfg: &SweepConfig) -> Vec<CheckReport> {
    (1..=cfg.r_max)
        .map(|r| {
            identity_cell(check_partition_count(r), "partition-count", || {
                Params(vec![("r", i64::from(r))])
            })
        })
        .collect()
}

fn run_det_vs_partition(cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for r in 1..=cfg.r_max {
        for n in cfg.n_lo..=cfg.n_hi {
            for j in 1..=n {
                out.push(identity_cell(
                    check_det_vs_partition(r, n, j),
                    "determinant-vs-partition",
                    || {
                        Params(vec![
                            ("r", i64::from(r)),
                            ("n", i64::from(n)),
                            ("j", i64::from(j)),
                        ])
                    },
                ));
            }
        }
    }
    out
}

fn run_choi(cfg: &SweepConfig) -> Vec<CheckReport> {
    (1..=3u32)
        .map(|series| {
            identity_cell(check_choi(series, cfg.choi_terms), "choi-series", || {
                Params(vec![
                    ("series", i64::from(series)),
                    ("terms", cfg.choi_terms as i64),
                ])
            })
        })
        .collect()
}

static FAMILIES: [Family; 21] = [
    Family {
        id: "eisenstein",
        params: "p",
        description: "halved quotient (2^(p-1)-1)/p equals the odd-index reciprocal sum mod p",
        uses_primes: true,
        runner: run_eisenstein,
    },
    Family {
        id: "lemma1",
        params: "p,eq[,n|form]",
        description: "mod-p forms of the quotient: inverse binomials, power sums, 2^j/j, alternating and half-range sums",
        uses_primes: true,
        runner: run_lemma1,
    },
    Family {
        id: "spadesuit",
        params: "p,a",
        description: "quotient shift rule (a^p-a)/p = sum (a+1)^r/r + ((a+1)^p-(a+1))/p mod p, a in -10..=10",
        uses_primes: true,
        runner: run_spadesuit,
    },
    Family {
        id: "binom-over-p",
        params: "p,r",
        description: "C(p,r)/p is congruent to (-1)^(r-1)/r mod p for 0 < r < p",
        uses_primes: true,
        runner: run_binom_over_p,
    },
    Family {
        id: "wolstenholme",
        params: "p",
        description: "harmonic sum over 1..p-1 vanishes mod p^2 for p > 3 (p = 3 is out of domain)",
        uses_primes: true,
        runner: run_wolstenholme,
    },
    Family {
        id: "prop1",
        params: "p",
        description: "mod-p^2 lift: (2^(p-1)-1)/p = -(sum 2^(r-1)/r) with the odd-index vanishing step",
        uses_primes: true,
        runner: run_prop1,
    },
    Family {
        id: "thm1",
        params: "p",
        description: "mod-p^2 refinement: odd reciprocal sum minus p times the 2^(r-1)/r^2 sum",
        uses_primes: true,
        runner: run_thm1,
    },
    Family {
        id: "observation",
        params: "m",
        description: "clearing identity: x^m - x as the split alternating binomial expansion, checked coefficient-wise",
        uses_primes: false,
        runner: run_observation,
    },
    Family {
        id: "lemma2",
        params: "n",
        description: "odd-n alternating rewrite of the truncated logarithm plus its x^2 and x^3 coefficient identities",
        uses_primes: false,
        runner: run_lemma2,
    },
    Family {
        id: "heartsuit",
        params: "n",
        description: "alternating-binomial rewrite of sum (1-x)^k/k in base and cleared reindexed form",
        uses_primes: false,
        runner: run_heartsuit,
    },
    Family {
        id: "corollary1",
        params: "n",
        description: "alternating binomial sums evaluate to n/(n+1) and to H_n",
        uses_primes: false,
        runner: run_corollary1,
    },
    Family {
        id: "sury93",
        params: "n",
        description: "inverse binomial sum in three shapes: direct, geometric-weighted, odd-index binomial",
        uses_primes: false,
        runner: run_sury93,
    },
    Family {
        id: "mneimneh",
        params: "n,r",
        description: "binomially weighted harmonic sums in q: defining convolution against all kernel forms",
        uses_primes: false,
        runner: run_mneimneh,
    },
    Family {
        id: "dsum-closed",
        params: "r,n,j",
        description: "signed double-binomial sum against its harmonic closed form (plus Stirling form at order 2)",
        uses_primes: false,
        runner: run_dsum_closed,
    },
    Family {
        id: "dsum-cross",
        params: "r,n,j",
        description: "signed double-binomial sum against partition-sum and determinant forms at the shifted order",
        uses_primes: false,
        runner: run_dsum_cross,
    },
    Family {
        id: "difference-recurrences",
        params: "n,j",
        description: "first-order telescoping steps and base cases of the order 2..4 sums",
        uses_primes: false,
        runner: run_difference_recurrences,
    },
    Family {
        id: "hypergeom-step",
        params: "n,j",
        description: "alternating partial-fraction sum collapses to (j-1)!(n-j)!/n!",
        uses_primes: false,
        runner: run_hypergeom_step,
    },
    Family {
        id: "triple-sum",
        params: "n",
        description: "sum of 1/(i j k) over i < j < k <= n against its closed form in H_n, H_n^(2), H_n^(3)",
        uses_primes: false,
        runner: run_triple_sum,
    },
    Family {
        id: "partition-count",
        params: "r",
        description: "partition counts of 1..7 against the reference table 1, 2, 3, 5, 7, 11, 15",
        uses_primes: false,
        runner: run_partition_count,
    },
    Family {
        id: "determinant-vs-partition",
        params: "r,n,j",
        description: "Hessenberg determinant form equals the partition-sum form of the order-r harmonic polynomial",
        uses_primes: false,
        runner: run_det_vs_partition,
    },
    Family {
        id: "choi-series",
        params: "series,terms",
        description: "three series with harmonic numerators converge to 1 within proven tail bounds",
        uses_primes: false,
        runner: run_choi,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_config() -> SweepConfig {
        SweepConfig {
            families: Vec::new(),
            prime_lo: 3,
            prime_hi: 13,
            n_lo: 1,
            n_hi: 6,
            r_max: 3,
            backend: BackendTag::Both,
            choi_terms: 500,
            allow_domain_errors: false,
        }
    }

    #[test]
    fn registry_has_expected_shape() {
        assert_eq!(all_families().len(), 21);
        let mut ids: Vec<&str> = all_families().iter().map(|f| f.id).collect();
        assert_eq!(ids[0], "eisenstein");
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 21, "family ids must be unique");
        assert!(family("prop1").is_some());
        assert!(family("nonsense").is_none());
    }

    #[test]
    fn every_family_emits_reports_on_a_tiny_grid() {
        let cfg = tiny_config();
        for fam in all_families() {
            let reports = fam.run(&cfg);
            assert!(!reports.is_empty(), "{} emitted nothing", fam.id);
            for report in &reports {
                assert_eq!(report.family, fam.id);
            }
        }
    }

    #[test]
    fn domain_rows_never_abort_a_family() {
        let cfg = tiny_config();
        let reports = family("wolstenholme").unwrap().run(&cfg);
        // p = 3 is out of domain, p = 5, 7, 11, 13 hold.
        assert_eq!(reports.len(), 5);
        assert!(reports[0].domain_error);
        assert!(!reports[0].pass);
        assert!(reports[1..].iter().all(|r| r.pass));
    }

    #[test]
    fn prime_two_rows_are_domain_errors() {
        let mut cfg = tiny_config();
        cfg.prime_lo = 2;
        cfg.prime_hi = 5;
        let reports = family("eisenstein").unwrap().run(&cfg);
        assert_eq!(reports.len(), 3);
        assert!(reports[0].domain_error);
        assert!(reports[1].pass && reports[2].pass);
    }

    #[test]
    fn both_backend_merges_and_degrades_above_the_cap() {
        let mut cfg = tiny_config();
        cfg.prime_lo = 97;
        cfg.prime_hi = 105;
        let reports = family("eisenstein").unwrap().run(&cfg);
        // 97 and 101 run both backends; 103 exceeds the exact cap.
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[0].backend, BackendTag::Both);
        assert_eq!(reports[0].agree, Some(true));
        assert_eq!(reports[1].backend, BackendTag::Both);
        assert_eq!(reports[2].backend, BackendTag::Modular);
        assert_eq!(reports[2].agree, None);
    }

    #[test]
    fn prop1_family_reports_the_counterexample_at_three() {
        let cfg = tiny_config();
        let reports = family("prop1").unwrap().run(&cfg);
        let at3 = &reports[0];
        assert!(!at3.pass);
        assert!(!at3.domain_error, "a false congruence is a failure, not a domain error");
        assert!(reports[1..].iter().all(|r| r.pass));
    }

    #[test]
    fn runs_are_deterministic() {
        let cfg = tiny_config();
        for fam in all_families() {
            let a: Vec<String> = fam.run(&cfg).iter().map(|r| r.to_json_line()).collect();
            let b: Vec<String> = fam.run(&cfg).iter().map(|r| r.to_json_line()).collect();
            assert_eq!(a, b, "{} is not deterministic", fam.id);
        }
    }
}
