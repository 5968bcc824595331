use super::{affine_node_gens, hecke_gens, quantum_gens, report, session_for, Gen};
use crate::tensor::Session;
use crate::verify::harness::{check_vectors, expect_eq, standard_inputs};
use crate::verify::{IdentityResult, Suite, SuiteConfig, VerificationReport, VerifyError};
use crate::tensor::TensorVector;

const ANCHOR: &str = "g (x h) = (g x) h for g in U, h in H";

/// Every quantum-group generator against every Hecke generator.
pub struct BimoduleSuite;

fn commute(s: &Session, g: &Gen, h: &Gen, xs: &[TensorVector], prefix: &str) -> IdentityResult {
    check_vectors(format!("{prefix}[{},{}]", g.0, h.0), ANCHOR, xs, |x| {
        let lhs = s.apply_expr(&g.1, &s.apply_expr(&h.1, x)?)?;
        let rhs = s.apply_expr(&h.1, &s.apply_expr(&g.1, x)?)?;
        expect_eq(lhs, rhs)
    })
}

impl Suite for BimoduleSuite {
    fn name(&self) -> &'static str {
        "bimodule"
    }

    fn summary(&self) -> &'static str {
        "commutation of the left quantum-group and right Hecke actions"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let s = session_for(cfg)?;
        let xs = standard_inputs(&s, cfg, 2);
        let hs = hecke_gens(s.r());
        let mut out = Vec::new();
        for g in quantum_gens(s.n(), s.r()) {
            for h in &hs {
                out.push(commute(&s, &g, h, &xs, "commute"));
            }
        }
        if cfg.enable_affine_node {
            let affine = s.clone().with_affine_node(true);
            for g in affine_node_gens(s.n()) {
                for h in &hs {
                    out.push(commute(&affine, &g, h, &xs, "affine-node").into_experiment());
                }
            }
        }
        Ok(report(self.name(), cfg, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::HeckePerturbation;
    use crate::verify::Status;

    #[test]
    fn passes_small_cases() {
        let rep = BimoduleSuite.run(&SuiteConfig::new(2, 2).with_trials(20)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
        let rep = BimoduleSuite.run(&SuiteConfig::new(3, 2).with_trials(20).with_lprime(Some(4))).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
    }

    #[test]
    fn affine_node_is_reported_separately() {
        let mut cfg = SuiteConfig::new(2, 2).with_trials(10);
        cfg.enable_affine_node = true;
        let rep = BimoduleSuite.run(&cfg).unwrap();
        let affine: Vec<_> = rep.results.iter().filter(|r| r.id.starts_with("affine-node")).collect();
        assert_eq!(affine.len(), 2 * 5);
        assert!(affine.iter().all(|r| r.status == Status::Skipped && r.observation.is_some()));
    }

    #[test]
    fn sabotage_is_caught() {
        let mut cfg = SuiteConfig::new(2, 2).with_trials(20);
        cfg.sabotage = Some(HeckePerturbation::EqualEigenvalue);
        assert!(!BimoduleSuite.run(&cfg).unwrap().passed());
    }
}
