use affine_schur::verify::{
    verify_bimodule_commutation, verify_hecke_presentation, Status, Suite, SuiteConfig, SuiteRegistry,
    VerificationReport, VerifyError,
};
use serde_json::Value;

#[test]
fn reports_are_deterministic_in_the_config() {
    let cfg = SuiteConfig::new(2, 2).with_trials(20).with_seed(7).with_lprime(Some(3));
    let a = serde_json::to_string(&verify_hecke_presentation(&cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_hecke_presentation(&cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn report_json_shape() {
    let rep = verify_bimodule_commutation(&SuiteConfig::new(2, 2).with_trials(10)).unwrap();
    let doc: Value = serde_json::to_value(&rep).unwrap();
    assert_eq!(doc["suite"], "bimodule");
    assert_eq!(doc["config"]["n"], 2);
    assert!(doc["config"]["lprime"].is_null());
    for r in doc["results"].as_array().unwrap() {
        assert!(r["id"].is_string() && r["anchor"].is_string() && r["trials"].is_u64());
        assert!(["pass", "fail", "skipped"].contains(&r["status"].as_str().unwrap()));
        assert!(r["counterexample"].is_null());
    }
    let back: VerificationReport = serde_json::from_value(doc).unwrap();
    assert_eq!(back.results.len(), rep.results.len());
    assert_eq!(rep.exit_code(), 0);
}

#[test]
fn invalid_configs_are_rejected() {
    let reg = SuiteRegistry::with_builtins();
    assert!(matches!(reg.run("hecke", &SuiteConfig::new(2, 2).with_trials(0)), Err(VerifyError::InvalidConfig(_))));
    assert!(matches!(reg.run("schur", &SuiteConfig::new(3, 2).with_big_n(Some(2))), Err(VerifyError::InvalidConfig(_))));
    assert!(matches!(reg.run("nope", &SuiteConfig::new(2, 2)), Err(VerifyError::UnknownSuite(_))));
}

struct Trivial;

impl Suite for Trivial {
    fn name(&self) -> &'static str {
        "trivial"
    }
    fn summary(&self) -> &'static str {
        "always empty"
    }
    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        Ok(VerificationReport { suite: "trivial".into(), config: cfg.clone(), results: vec![], labels: vec![] })
    }
}

#[test]
fn registry_accepts_new_suites_once() {
    let mut reg = SuiteRegistry::with_builtins();
    reg.register(Box::new(Trivial)).unwrap();
    assert!(matches!(reg.register(Box::new(Trivial)), Err(VerifyError::DuplicateSuite(_))));
    assert_eq!(reg.names().last(), Some(&"trivial"));
    let rep = reg.run("trivial", &SuiteConfig::new(1, 2)).unwrap();
    assert!(rep.passed() && rep.count(Status::Pass) == 0);
}
