use super::{hecke_gens, quantum_gens, report, Gen};
use crate::scalar::ScalarKind;
use crate::tensor::{OperatorExpr, Session, TensorVector};
use crate::verify::harness::{check_vectors, expect_eq, window_basis, Mismatch, Sampler};
use crate::verify::{Suite, SuiteConfig, VerificationReport, VerifyError};

/// Base change `v -> eps` commutes with every generator action. Sweeps
/// `l'` in `{1, 2, 3, 4, 6}` unless one is configured.
pub struct SpecializationSuite;

pub const DEFAULT_LPRIMES: [u32; 5] = [1, 2, 3, 4, 6];

fn all_gens(s: &Session) -> Vec<Gen> {
    let mut g = quantum_gens(s.n(), s.r());
    g.extend(s.compositions().into_iter().map(|lam| (format!("1_{lam:?}"), OperatorExpr::weight_proj(&lam))));
    g.extend(hecke_gens(s.r()));
    g.extend((1..s.r()).map(|k| (format!("T_{k}^-1"), OperatorExpr::t_inv(k))));
    g
}

impl Suite for SpecializationSuite {
    fn name(&self) -> &'static str {
        "specialization"
    }

    fn summary(&self) -> &'static str {
        "specialize(g x) = g specialize(x) for every generator g"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let generic = Session::new(cfg.n, cfg.r, None)?.with_perturbation(cfg.sabotage);
        let lprimes: Vec<u32> = match cfg.lprime {
            Some(l) => vec![l],
            None => DEFAULT_LPRIMES.to_vec(),
        };
        let mut sampler = Sampler::new(cfg, 8);
        let mut xs: Vec<TensorVector> = (0..cfg.trials).map(|_| sampler.laurent_vector(cfg.r)).collect();
        xs.extend(window_basis(&generic));
        let gens = all_gens(&generic);
        let mut out = Vec::new();
        for lp in lprimes {
            let eps = generic.with_lprime(Some(lp))?;
            for (name, g) in &gens {
                out.push(check_vectors(
                    format!("naturality[{name},l'={lp}]"),
                    "specialize(g x) = g specialize(x)",
                    &xs,
                    |x| expect_eq(generic.apply_expr(g, x)?.specialize(lp)?, eps.apply_expr(g, &x.specialize(lp)?)?),
                ));
            }
            let kind = ScalarKind::Specialized(lp);
            out.push(check_vectors(format!("v-power[l'={lp}]"), "specialize(v^k x) = eps^k specialize(x)", &xs, |x| {
                let base = x.specialize(lp)?;
                for k in -3..=3 {
                    let lhs = x.scale(&generic.v_pow(k)).specialize(lp)?;
                    let rhs = base.scale(&kind.v_pow(k));
                    if lhs != rhs {
                        return Err(Mismatch::new(lhs, rhs).detail(format!("k = {k}")));
                    }
                }
                Ok(())
            }));
        }
        Ok(report(self.name(), cfg, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_including_eps_one() {
        let rep = SpecializationSuite.run(&SuiteConfig::new(2, 2).with_trials(20)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
        assert!(rep.results.iter().any(|r| r.id == "v-power[l'=1]"));
    }
}
