//! Exact verification laboratory for congruences of Fermat quotients and the
//! polynomial and harmonic-number identities behind them.
//!
//! Every check states an equality, evaluates both sides independently, and
//! compares canonical renderings; nothing is ever decided by floating-point
//! proximity except the explicitly float-valued series tails, which carry
//! their own proven bounds. Most checks run on two backends:
//!
//! - exact arithmetic over arbitrary-precision rationals, and
//! - modular arithmetic in `Z/m` for `m` = p or p^2 on `u64` words,
//!
//! and a combined mode that runs both and insists they agree.
//!
//! Module map:
//!
//! - [`modular`], [`rational`], [`arith`]: the two arithmetic backends plus
//!   shared big-integer combinatorics.
//! - [`poly`], [`harmonic`], [`stirling`], [`partition`]: dense rational
//!   polynomials, generalized harmonic numbers, Stirling numbers, and
//!   integer partitions with the two order-r harmonic polynomial forms.
//! - [`primes`]: deterministic primality and prime enumeration for sweeps.
//! - [`fermat`]: quotient congruences modulo p and p^2.
//! - [`identities`]: exact rational and polynomial identities, and the three
//!   convergent series checked against proven tail bounds.
//! - [`report`]: the check-report record every family emits.
//! - [`error`]: the error type shared by all fallible checks.
//! - [`families`]: the registry mapping family ids to sweep runners.
//! - [`sweep`]: sweep configuration, validation, rendering, and exit codes.
//! - [`cli`]: the `verify` command-line front end.

pub mod arith;
pub mod cli;
pub mod error;
pub mod families;
pub mod fermat;
pub mod harmonic;
pub mod identities;
pub mod modular;
pub mod partition;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod report;
pub mod stirling;
pub mod sweep;

pub use error::CheckError;
pub use fermat::Backend;
pub use report::{BackendTag, CheckReport, Modulus, Params};
