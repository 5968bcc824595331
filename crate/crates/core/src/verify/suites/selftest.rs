use super::{report, BimoduleSuite, HeckeSuite};
use crate::tensor::HeckePerturbation;
use crate::verify::harness::{check_cases, Mismatch};
use crate::verify::{Suite, SuiteConfig, VerificationReport, VerifyError};

/// Harness sensitivity: every single-coefficient perturbation of `T_k` must
/// make both the Hecke and the bimodule suite fail.
pub struct SelfTestSuite;

pub const PERTURBATIONS: [HeckePerturbation; 4] = [
    HeckePerturbation::EqualEigenvalue,
    HeckePerturbation::AscentCoefficient,
    HeckePerturbation::DescentSwapCoefficient,
    HeckePerturbation::DescentDiagonalCoefficient,
];

impl Suite for SelfTestSuite {
    fn name(&self) -> &'static str {
        "self-test"
    }

    fn summary(&self) -> &'static str {
        "perturbed T_k coefficients are detected by the hecke and bimodule suites"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let mut out = Vec::new();
        let targets: [&dyn Suite; 2] = [&HeckeSuite, &BimoduleSuite];
        for target in targets {
            let reports: Vec<(HeckePerturbation, VerificationReport)> = PERTURBATIONS
                .iter()
                .map(|&p| {
                    let mut sabotaged = cfg.clone();
                    sabotaged.sabotage = Some(p);
                    target.run(&sabotaged).map(|rep| (p, rep))
                })
                .collect::<Result<_, _>>()?;
            out.push(check_cases(
                format!("detects[{}]", target.name()),
                "a perturbed T_k breaks at least one identity",
                &PERTURBATIONS,
                |p| {
                    let rep = &reports.iter().find(|(q, _)| q == p).expect("one report per perturbation").1;
                    match rep.failures().next() {
                        Some(_) => Ok(()),
                        None => Err(Mismatch::new("all identities pass", "at least one failure")),
                    }
                },
            ));
        }
        Ok(report(self.name(), cfg, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_perturbation_is_detected() {
        let rep = SelfTestSuite.run(&SuiteConfig::new(2, 2).with_trials(20)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
    }
}
