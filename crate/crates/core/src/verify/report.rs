//! Structured pass/fail records for identity suites.

use serde::Serialize;

use crate::algebra::{Backend, Multivector, Scalar};

/// Residual of one identity: exactly zero (or not) in exact mode, a
/// magnitude in float mode.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum Residual {
    #[serde(rename = "exact")]
    Exact { zero: bool },
    #[serde(rename = "float")]
    Float { magnitude: f64 },
}

impl Residual {
    pub fn from_multivector(mv: &Multivector) -> Residual {
        match mv.backend() {
            Backend::Exact => Residual::Exact { zero: mv.is_zero() },
            Backend::Float => Residual::Float {
                magnitude: mv.magnitude(),
            },
        }
    }

    pub fn from_scalar(s: &Scalar) -> Residual {
        match s.backend() {
            Backend::Exact => Residual::Exact { zero: s.is_zero() },
            Backend::Float => Residual::Float {
                magnitude: s.magnitude(),
            },
        }
    }

    pub fn from_bool(ok: bool) -> Residual {
        Residual::Exact { zero: ok }
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        match self {
            Residual::Exact { zero } => *zero,
            Residual::Float { magnitude } => *magnitude <= tolerance,
        }
    }
}

/// One verified identity instance.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<i64>,
    pub residual: Residual,
    pub pass: bool,
}

impl Check {
    pub fn new(id: impl Into<String>, indices: Vec<i64>, residual: Residual, tol: f64) -> Check {
        let pass = residual.passes(tol);
        Check {
            id: id.into(),
            indices,
            residual,
            pass,
        }
    }
}

/// A named suite of checks with summary counts; `pass` iff every check
/// passed. Check order is deterministic.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, notes: Vec<String>, checks: Vec<Check>) -> SuiteReport {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        SuiteReport {
            suite: suite.into(),
            notes,
            checks,
            passed,
            failed,
            pass: failed == 0,
        }
    }

    /// Failures first for human eyes, full detail retained.
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
