//! Structured pass/fail records emitted by the verification suites.

use serde::{Deserialize, Serialize};

/// One verified identity: what was checked, at which parameters, how far off
/// the two sides were, and whether that clears the tolerance.
///
/// When a check cannot even be evaluated (invalid parameters, quadrature
/// breakdown), the failure is still reported as one of these with
/// `max_residual` set to `f64::MAX` and the cause in `status`; JSON must stay
/// free of non-finite numbers, which serde_json would silently turn to null.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub m: usize,
    pub nu: Vec<f64>,
    pub truncation: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub status: Option<String>,
}

impl VerificationReport {
    pub fn new(
        identity: impl Into<String>,
        m: usize,
        nu: Vec<f64>,
        truncation: usize,
        max_residual: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            identity: identity.into(),
            m,
            nu,
            truncation,
            pass: max_residual <= tolerance,
            max_residual,
            tolerance,
            status: None,
        }
    }

    pub fn with_status(mut self, status: impl Into<String>) -> Self {
        self.status = Some(status.into());
        self
    }

    /// A check that could not be carried out at all.
    pub fn failed(
        identity: impl Into<String>,
        m: usize,
        nu: Vec<f64>,
        truncation: usize,
        tolerance: f64,
        status: impl Into<String>,
    ) -> Self {
        Self {
            identity: identity.into(),
            m,
            nu,
            truncation,
            max_residual: f64::MAX,
            tolerance,
            pass: false,
            status: Some(status.into()),
        }
    }

    pub fn csv_header() -> &'static str {
        "identity,m,nu,truncation,max_residual,tolerance,pass,status"
    }

    pub fn to_csv_row(&self) -> String {
        let nu = self
            .nu
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{:e},{:e},{},{}",
            csv_field(&self.identity),
            self.m,
            nu,
            self.truncation,
            self.max_residual,
            self.tolerance,
            self.pass,
            csv_field(self.status.as_deref().unwrap_or("")),
        )
    }
}

/// Quote a CSV field only when it needs it.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
