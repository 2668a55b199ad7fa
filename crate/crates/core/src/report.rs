use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::pseries::Series;

/// First index where a checked identity or congruence fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: u64,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one named check. Serializes to a single JSON line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub order: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    pub ms: f64,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, order: usize, counterexample: Option<Counterexample>) -> Self {
        CheckReport {
            check: check.into(),
            order,
            pass: counterexample.is_none(),
            counterexample,
            ms: 0.0,
        }
    }

    /// Runs `f` and records its wall time in `ms`.
    pub fn timed(
        check: impl Into<String>,
        order: usize,
        f: impl FnOnce() -> Result<Option<Counterexample>>,
    ) -> Result<Self> {
        let start = Instant::now();
        let cx = f()?;
        let mut r = Self::new(check, order, cx);
        r.ms = start.elapsed().as_secs_f64() * 1e3;
        Ok(r)
    }

    /// Coefficientwise comparison of `actual` against `expected` up to their
    /// common order.
    pub fn compare(check: impl Into<String>, actual: &Series, expected: &Series) -> Result<Self> {
        let order = actual.order().min(expected.order());
        let start = Instant::now();
        let cx = series_counterexample(actual, expected)?;
        let mut r = Self::new(check, order, cx);
        r.ms = start.elapsed().as_secs_f64() * 1e3;
        Ok(r)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Runs a check and replaces its `ms` with the wall time of the whole
/// call, setup included.
pub fn with_wall_time(f: impl FnOnce() -> Result<CheckReport>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = f()?;
    r.ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(r)
}

pub fn series_counterexample(actual: &Series, expected: &Series) -> Result<Option<Counterexample>> {
    Ok(actual.first_difference(expected)?.map(|n| Counterexample {
        n: n as u64,
        expected: expected.coeff(n).to_string(),
        actual: actual.coeff(n).to_string(),
    }))
}
