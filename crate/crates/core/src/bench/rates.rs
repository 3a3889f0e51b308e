//! Convergence-rate estimation from error series.

use std::fmt;

use super::ConvergenceRecord;
use crate::error::{Error, Result};

/// Errors at or below this value count as an exact representation.
pub const EXACT_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    L2,
    HSymCurl,
}

impl Norm {
    pub fn of(self, record: &ConvergenceRecord) -> f64 {
        match self {
            Norm::L2 => record.l2_error,
            Norm::HSymCurl => record.hsc_error,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rate {
    /// Some error in the series is at round-off level; no meaningful slope exists.
    Exact,
    Order(f64),
}

impl Rate {
    pub fn order(self) -> Option<f64> {
        match self {
            Rate::Exact => None,
            Rate::Order(p) => Some(p),
        }
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rate::Exact => f.write_str("exact"),
            Rate::Order(p) => write!(f, "{p:.3}"),
        }
    }
}

/// Least-squares slope of `log(error)` against `log(h)` with `h = 2 / n`.
///
/// A series containing an error at or below [`EXACT_THRESHOLD`] is [`Rate::Exact`] at any
/// length; otherwise at least three levels are required.
pub fn estimate_rate(records: &[ConvergenceRecord], norm: Norm) -> Result<Rate> {
    let errors: Vec<f64> = records.iter().map(|r| norm.of(r)).collect();
    if errors.iter().any(|&e| e <= EXACT_THRESHOLD) {
        return Ok(Rate::Exact);
    }
    if records.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "rate estimation needs at least 3 levels, got {}",
            records.len()
        )));
    }
    let hs: Vec<f64> = records.iter().map(|r| 2.0 / r.n as f64).collect();
    Ok(Rate::Order(fit_slope(&hs, &errors)))
}

/// Least-squares slope of `log(y)` against `log(x)`.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}
