//! The record every check emits, and its canonical serialized forms.
//!
//! A report compares two rendered values; `pass` is true exactly when the
//! renderings are equal, so a report can never claim success while printing
//! different sides. Checks comparing more than two quantities fold the extra
//! ones into the right-hand rendering (kept equal to the canonical value only
//! when all of them agree), which preserves that invariant.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::CheckError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modulus {
    /// Identity over the rationals or polynomials, no reduction involved.
    Exact,
    Mod(u64),
}

impl Serialize for Modulus {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Modulus::Exact => s.serialize_str("exact"),
            Modulus::Mod(m) => s.serialize_u64(*m),
        }
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Modulus::Exact => write!(f, "exact"),
            Modulus::Mod(m) => write!(f, "{m}"),
        }
    }
}

/// Named integer parameters, serialized as a JSON object in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params(pub Vec<(&'static str, i64)>);

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Params {
    pub fn render(&self) -> String {
        self.0
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendTag {
    Exact,
    Modular,
    Both,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub family: &'static str,
    pub params: Params,
    pub modulus: Modulus,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub pass: bool,
    pub backend: BackendTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Distinguishes out-of-domain records from genuine failures when
    /// deciding the exit code; not part of the serialized record.
    #[serde(skip)]
    pub domain_error: bool,
}

impl CheckReport {
    /// Two-sided comparison; pass is derived, never supplied.
    pub fn comparison(
        family: &'static str,
        params: Params,
        modulus: Modulus,
        lhs: String,
        rhs: String,
        backend: BackendTag,
    ) -> Self {
        let pass = lhs == rhs;
        CheckReport {
            family,
            params,
            modulus,
            lhs: Some(lhs),
            rhs: Some(rhs),
            pass,
            backend,
            agree: None,
            error: None,
            domain_error: false,
        }
    }

    /// Comparison of one left value against several values that must all
    /// agree. The right rendering is the common value when they do and a
    /// listing (which can never equal a single rendering) when they do not.
    pub fn multi_comparison(
        family: &'static str,
        params: Params,
        modulus: Modulus,
        lhs: String,
        rhs_values: &[String],
        backend: BackendTag,
    ) -> Self {
        assert!(!rhs_values.is_empty());
        let all_equal = rhs_values.windows(2).all(|w| w[0] == w[1]);
        let rhs = if all_equal {
            rhs_values[0].clone()
        } else {
            format!("mismatch[{}]", rhs_values.join(" ; "))
        };
        CheckReport::comparison(family, params, modulus, lhs, rhs, backend)
    }

    /// Record for a parameter cell outside a check's domain, or any other
    /// error raised while running it.
    pub fn from_error(
        family: &'static str,
        params: Params,
        modulus: Modulus,
        err: &CheckError,
        backend: BackendTag,
    ) -> Self {
        CheckReport {
            family,
            params,
            modulus,
            lhs: None,
            rhs: None,
            pass: false,
            backend,
            agree: None,
            error: Some(err.to_string()),
            domain_error: err.is_domain(),
        }
    }

    /// Single record for a cell checked under both backends. Carries the
    /// agreement flag; disagreement between backends is itself a failure.
    pub fn merged_both(exact: CheckReport, modular: CheckReport) -> Self {
        assert_eq!(exact.family, modular.family);
        assert_eq!(exact.params, modular.params);
        let agree = exact.lhs == modular.lhs && exact.rhs == modular.rhs;
        if agree {
            CheckReport {
                backend: BackendTag::Both,
                agree: Some(true),
                ..modular
            }
        } else {
            let fuse = |a: &Option<String>, b: &Option<String>| {
                Some(format!(
                    "exact:{} modular:{}",
                    a.as_deref().unwrap_or("(error)"),
                    b.as_deref().unwrap_or("(error)")
                ))
            };
            CheckReport {
                family: modular.family,
                params: modular.params,
                modulus: modular.modulus,
                lhs: fuse(&exact.lhs, &modular.lhs),
                rhs: fuse(&exact.rhs, &modular.rhs),
                pass: false,
                backend: BackendTag::Both,
                agree: Some(false),
                error: exact.error.or(modular.error),
                domain_error: exact.domain_error && modular.domain_error,
            }
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// CSV row under the header
    /// family,params,modulus,lhs,rhs,pass,backend,agree,error
    pub fn to_csv_row(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains(',') || s.contains('"') || s.contains('\n') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        [
            self.family.to_string(),
            field(&self.params.render()),
            self.modulus.to_string(),
            field(self.lhs.as_deref().unwrap_or("")),
            field(self.rhs.as_deref().unwrap_or("")),
            self.pass.to_string(),
            match self.backend {
                BackendTag::Exact => "exact",
                BackendTag::Modular => "modular",
                BackendTag::Both => "both",
            }
            .to_string(),
            self.agree.map(|a| a.to_string()).unwrap_or_default(),
            field(self.error.as_deref().unwrap_or("")),
        ]
        .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Params {
        Params(vec![("p", 5), ("n", 2)])
    }

    #[test]
    fn pass_iff_renderings_equal() {
        let ok = CheckReport::comparison("demo", params(), Modulus::Mod(25), "3".into(), "3".into(), BackendTag::Modular);
        assert!(ok.pass);
        let bad = CheckReport::comparison("demo", params(), Modulus::Mod(25), "3".into(), "4".into(), BackendTag::Modular);
        assert!(!bad.pass);
    }

    #[test]
    fn json_field_order_and_modulus_forms() {
        let rep = CheckReport::comparison("demo", params(), Modulus::Mod(25), "3".into(), "3".into(), BackendTag::Exact);
        assert_eq!(
            rep.to_json_line(),
            r#"{"family":"demo","params":{"p":5,"n":2},"modulus":25,"lhs":"3","rhs":"3","pass":true,"backend":"exact"}"#
        );
        let rep2 = CheckReport::comparison("demo", Params::default(), Modulus::Exact, "1".into(), "1".into(), BackendTag::Exact);
        assert!(rep2.to_json_line().contains(r#""modulus":"exact""#));
    }

    #[test]
    fn multi_comparison_demands_unanimity() {
        let rep = CheckReport::multi_comparison(
            "demo",
            params(),
            Modulus::Exact,
            "5/2".into(),
            &["5/2".into(), "5/2".into()],
            BackendTag::Exact,
        );
        assert!(rep.pass);
        let rep2 = CheckReport::multi_comparison(
            "demo",
            params(),
            Modulus::Exact,
            "5/2".into(),
            &["5/2".into(), "7/3".into()],
            BackendTag::Exact,
        );
        assert!(!rep2.pass);
        assert!(rep2.rhs.unwrap().contains("mismatch"));
    }

    #[test]
    fn merged_backends_keep_the_invariant() {
        let e = CheckReport::comparison("demo", params(), Modulus::Mod(25), "3".into(), "3".into(), BackendTag::Exact);
        let m = CheckReport::comparison("demo", params(), Modulus::Mod(25), "3".into(), "3".into(), BackendTag::Modular);
        let both = CheckReport::merged_both(e.clone(), m);
        assert!(both.pass && both.agree == Some(true));

        let m2 = CheckReport::comparison("demo", params(), Modulus::Mod(25), "3".into(), "4".into(), BackendTag::Modular);
        let both2 = CheckReport::merged_both(e, m2);
        assert!(!both2.pass && both2.agree == Some(false));
        assert_ne!(both2.lhs, both2.rhs);
    }

    #[test]
    fn error_records_never_pass_and_flag_domain() {
        let err = CheckError::domain("needs p > 3");
        let rep = CheckReport::from_error("demo", params(), Modulus::Mod(9), &err, BackendTag::Modular);
        assert!(!rep.pass && rep.domain_error);
        assert!(rep.to_json_line().contains(r#""error":"needs p > 3""#));
        let csv = rep.to_csv_row();
        assert!(csv.starts_with("demo,p=5;n=2,9,,,false,modular,,"));
    }
}
