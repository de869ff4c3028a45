//! Seeded verification suites over every identity the engine implements,
//! with structured reports.

pub mod report;
pub mod sample;
pub mod suites;

use crate::algebra::Backend;
use crate::generators;
use report::SuiteReport;

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub backend: Backend,
    pub tolerance: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            backend: Backend::Exact,
            tolerance: 1e-9,
        }
    }
}

impl SuiteConfig {
    /// Exact mode demands zero residuals; float mode uses the tolerance.
    pub fn effective_tolerance(&self) -> f64 {
        match self.backend {
            Backend::Exact => 0.0,
            Backend::Float => self.tolerance,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Algebra,
    Conformal,
    Generators,
    Twistor,
    Pure,
}

impl std::str::FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Scope::All),
            "algebra" => Ok(Scope::Algebra),
            "conformal" => Ok(Scope::Conformal),
            "generators" => Ok(Scope::Generators),
            "twistor" => Ok(Scope::Twistor),
            "pure" => Ok(Scope::Pure),
            other => Err(format!("unknown scope {other:?}")),
        }
    }
}

/// Run the suites selected by `scope`, in a fixed order.
pub fn run_scope(scope: Scope, cfg: &SuiteConfig) -> Vec<SuiteReport> {
    let tol = cfg.effective_tolerance();
    let mut out = Vec::new();
    if matches!(scope, Scope::All | Scope::Algebra) {
        out.push(suites::algebra_suite(cfg));
    }
    if matches!(scope, Scope::All | Scope::Conformal) {
        out.push(suites::conformal_suite(cfg));
    }
    if matches!(scope, Scope::All | Scope::Generators) {
        out.push(generators::commutation_table(cfg.backend, tol));
        out.push(generators::duality_check(cfg.backend, tol));
    }
    if matches!(scope, Scope::All | Scope::Twistor) {
        out.push(suites::twistor_suite(cfg));
    }
    if matches!(scope, Scope::All | Scope::Pure) {
        out.push(suites::pure_suite(cfg));
    }
    out
}
