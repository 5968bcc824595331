//! Verification suites: seeded, extensional checks of the algebraic
//! identities behind the tensor-space model, reported as JSON.
//!
//! Suites implement [`Suite`] and are looked up by name in a
//! [`SuiteRegistry`].

mod harness;
mod plan;
mod suites;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tensor::{ActionError, HeckePerturbation};

pub use plan::{acceptance_plan, PlanEntry};
pub use suites::{
    BimoduleSuite, HeckeSuite, QCombSuite, QlaSuite, SchurSuite, SelfTestSuite, SpecializationSuite, WeightsSuite,
    DEFAULT_LPRIMES, MORITA_LABEL, OUTSIDE_MORITA_LABEL, PERTURBATIONS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("suite `{0}` is already registered")]
    DuplicateSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Parameters shared by every suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n: usize,
    pub r: usize,
    #[serde(rename = "N", default)]
    pub big_n: Option<usize>,
    #[serde(default)]
    pub lprime: Option<u32>,
    pub trials: usize,
    pub seed: u64,
    /// Entry range for random vectors, inclusive.
    pub window: (i64, i64),
    pub support_bound: usize,
    pub coeff_bound: i64,
    #[serde(default)]
    pub enable_affine_node: bool,
    /// Harness self-test: perturbs one coefficient of `T_k`.
    #[doc(hidden)]
    #[serde(skip)]
    pub sabotage: Option<HeckePerturbation>,
}

impl SuiteConfig {
    /// Defaults: 100 trials, seed 0, window `[1-2n, 3n]`, support 6,
    /// coefficients in `[-3, 3]`.
    pub fn new(n: usize, r: usize) -> Self {
        SuiteConfig {
            n,
            r,
            big_n: None,
            lprime: None,
            trials: 100,
            seed: 0,
            window: default_window(n),
            support_bound: 6,
            coeff_bound: 3,
            enable_affine_node: false,
            sabotage: None,
        }
    }

    pub fn with_lprime(mut self, lprime: Option<u32>) -> Self {
        self.lprime = lprime;
        self
    }

    pub fn with_big_n(mut self, big_n: Option<usize>) -> Self {
        self.big_n = big_n;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::InvalidConfig(msg));
        if self.n == 0 || self.r == 0 {
            return bad(format!("n and r must be at least 1, got n = {}, r = {}", self.n, self.r));
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.window.0 > self.window.1 {
            return bad(format!("empty window [{}, {}]", self.window.0, self.window.1));
        }
        if self.support_bound == 0 || self.coeff_bound <= 0 {
            return bad("support and coefficient bounds must be positive".into());
        }
        if let Some(big_n) = self.big_n {
            if big_n < self.n {
                return bad(format!("N = {big_n} is smaller than n = {}", self.n));
            }
        }
        if self.lprime == Some(0) {
            return bad("l' must be at least 1".into());
        }
        Ok(())
    }
}

/// The default sampling window `[1-2n, 3n]`.
pub fn default_window(n: usize) -> (i64, i64) {
    let n = n as i64;
    (1 - 2 * n, 3 * n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: serde_json::Value,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of one identity over all of its inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub trials: usize,
    pub counterexample: Option<Counterexample>,
    /// Present for skipped identities and for experiments, which run but
    /// are not asserted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observation: Option<String>,
}

impl IdentityResult {
    pub fn skipped(id: impl Into<String>, anchor: &str, reason: impl Into<String>) -> Self {
        IdentityResult {
            id: id.into(),
            anchor: anchor.to_string(),
            status: Status::Skipped,
            trials: 0,
            counterexample: None,
            observation: Some(reason.into()),
        }
    }

    /// Demotes a checked identity to an unasserted experiment.
    pub fn into_experiment(mut self) -> Self {
        let verdict = match self.status {
            Status::Pass => format!("experiment: holds on all {} inputs", self.trials),
            Status::Fail => "experiment: fails, see counterexample".to_string(),
            Status::Skipped => return self,
        };
        self.status = Status::Skipped;
        self.observation = Some(verdict);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub config: SuiteConfig,
    pub results: Vec<IdentityResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl VerificationReport {
    /// True when every non-skipped identity passed.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

/// Several reports, e.g. from `verify all` or `report-merge`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergedReport {
    pub passed: bool,
    pub reports: Vec<VerificationReport>,
}

impl MergedReport {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        MergedReport { passed: reports.iter().all(|r| r.passed()), reports }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    /// One-line description for listings.
    fn summary(&self) -> &'static str;

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError>;
}

pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        SuiteRegistry { suites: Vec::new() }
    }

    /// All built-in suites.
    pub fn with_builtins() -> Self {
        let mut reg = SuiteRegistry::empty();
        let builtins: Vec<Box<dyn Suite>> = vec![
            Box::new(HeckeSuite),
            Box::new(BimoduleSuite),
            Box::new(WeightsSuite),
            Box::new(QlaSuite),
            Box::new(QCombSuite),
            Box::new(SchurSuite),
            Box::new(SpecializationSuite),
            Box::new(SelfTestSuite),
        ];
        for s in builtins {
            reg.register(s).expect("built-in names are distinct");
        }
        reg
    }

    pub fn register(&mut self, suite: Box<dyn Suite>) -> Result<(), VerifyError> {
        if self.get(suite.name()).is_some() {
            return Err(VerifyError::DuplicateSuite(suite.name().to_string()));
        }
        self.suites.push(suite);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    pub fn suites(&self) -> impl Iterator<Item = &dyn Suite> {
        self.suites.iter().map(|s| s.as_ref())
    }

    pub fn run(&self, name: &str, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let suite = self.get(name).ok_or_else(|| VerifyError::UnknownSuite(name.to_string()))?;
        cfg.validate()?;
        suite.run(cfg)
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        SuiteRegistry::with_builtins()
    }
}

pub fn verify_hecke_presentation(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    HeckeSuite.run(cfg)
}

pub fn verify_bimodule_commutation(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    BimoduleSuite.run(cfg)
}

pub fn verify_weight_idempotents(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    WeightsSuite.run(cfg)
}

pub fn verify_level_zero_qla(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    QlaSuite.run(cfg)
}

pub fn verify_qcomb_lemmas(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    QCombSuite.run(cfg)
}

pub fn verify_schur_functor(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    SchurSuite.run(cfg)
}

pub fn verify_specialization_naturality(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    SpecializationSuite.run(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lists_builtins_and_rejects_duplicates() {
        let mut reg = SuiteRegistry::with_builtins();
        assert_eq!(
            reg.names(),
            vec!["hecke", "bimodule", "weights", "qla", "qcomb", "schur", "specialization", "self-test"]
        );
        assert!(reg.get("nope").is_none());
        assert_eq!(reg.register(Box::new(HeckeSuite)), Err(VerifyError::DuplicateSuite("hecke".into())));
        assert!(matches!(reg.run("nope", &SuiteConfig::new(2, 2)), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn config_validation() {
        assert!(SuiteConfig::new(2, 2).validate().is_ok());
        assert!(SuiteConfig::new(2, 2).with_trials(0).validate().is_err());
        assert!(SuiteConfig::new(3, 2).with_big_n(Some(2)).validate().is_err());
        let mut c = SuiteConfig::new(2, 2);
        c.window = (3, 2);
        assert!(c.validate().is_err());
        assert_eq!(SuiteConfig::new(2, 2).window, (-3, 6));
    }

    #[test]
    fn config_json_round_trip() {
        let c = SuiteConfig::new(3, 2).with_big_n(Some(4)).with_lprime(Some(6));
        let js = serde_json::to_string(&c).unwrap();
        assert!(js.contains("\"N\":4"));
        assert_eq!(serde_json::from_str::<SuiteConfig>(&js).unwrap(), c);
    }

    #[test]
    fn experiments_never_fail_a_report() {
        let res = IdentityResult {
            id: "x".into(),
            anchor: "a".into(),
            status: Status::Fail,
            trials: 3,
            counterexample: None,
            observation: None,
        }
        .into_experiment();
        assert_eq!(res.status, Status::Skipped);
        let report = VerificationReport {
            suite: "s".into(),
            config: SuiteConfig::new(1, 1),
            results: vec![res],
            labels: Vec::new(),
        };
        assert!(report.passed());
        assert_eq!(report.exit_code(), 0);
    }
}
