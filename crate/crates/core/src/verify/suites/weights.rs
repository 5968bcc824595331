use super::{report, session_for};
use crate::qcomb::binomial;
use crate::tensor::{OperatorExpr, TensorVector};
use crate::verify::harness::{check_cases, check_vectors, expect_eq, standard_inputs, Mismatch};
use crate::verify::{Suite, SuiteConfig, VerificationReport, VerifyError};

/// The weight idempotents `1_lambda`: completeness, orthogonality and the
/// spectral decomposition of `k_i`.
pub struct WeightsSuite;

impl Suite for WeightsSuite {
    fn name(&self) -> &'static str {
        "weights"
    }

    fn summary(&self) -> &'static str {
        "completeness and orthogonality of 1_lambda, k_i = sum v^lambda_i 1_lambda"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let s = session_for(cfg)?;
        let (n, r) = (s.n(), s.r());
        let lams = s.compositions();
        let xs = standard_inputs(&s, cfg, 3);
        let mut out = Vec::new();

        out.push(check_cases("count", "|Lambda(n, r)| = C(r + n - 1, n - 1)", &[(n, r)], |_| {
            expect_eq(lams.len().to_string(), binomial((r + n - 1) as i64, (n - 1) as u32).to_string())
        }));
        out.push(check_vectors("sum-to-identity", "sum over lambda of 1_lambda = 1", &xs, |x| {
            let mut acc = TensorVector::zero(r);
            for lam in &lams {
                acc = acc.add(&s.project_weight(lam, x)?);
            }
            expect_eq(acc, x.clone())
        }));
        for lam in &lams {
            out.push(check_vectors(
                format!("orthogonality[{lam:?}]"),
                "1_lambda 1_mu = delta(lambda, mu) 1_lambda",
                &xs,
                |x| {
                    let once = s.project_weight(lam, x)?;
                    for mu in &lams {
                        let lhs = s.project_weight(lam, &s.project_weight(mu, x)?)?;
                        let rhs = if mu == lam { once.clone() } else { TensorVector::zero(r) };
                        if lhs != rhs {
                            return Err(Mismatch::new(lhs, rhs).detail(format!("mu = {mu:?}")));
                        }
                    }
                    Ok(())
                },
            ));
        }
        for i in 1..=n {
            out.push(check_vectors(format!("k-expansion[k_{i}]"), "k_i = sum over lambda of v^lambda_i 1_lambda", &xs, |x| {
                let mut rhs = TensorVector::zero(r);
                for lam in &lams {
                    rhs = rhs.add(&s.project_weight(lam, x)?.scale(&s.v_pow(lam.part(i) as i64)));
                }
                expect_eq(s.apply_k(i, 1, x)?, rhs)
            }));
        }
        for lam in &lams {
            let route: Vec<OperatorExpr> =
                (1..=n).map(|i| OperatorExpr::k_binom(i, lam.part(i) as u32)).collect();
            let route = OperatorExpr::compose(route);
            out.push(check_vectors(
                format!("two-route[{lam:?}]"),
                "1_lambda = [k_1;0 over lambda_1] ... [k_n;0 over lambda_n]",
                &xs,
                |x| expect_eq(s.project_weight(lam, x)?, s.apply_expr(&route, x)?),
            ));
        }
        Ok(report(self.name(), cfg, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_small_cases() {
        for (n, r) in [(1, 2), (2, 2), (3, 3)] {
            let rep = WeightsSuite.run(&SuiteConfig::new(n, r).with_trials(20)).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures().next());
        }
        let rep = WeightsSuite.run(&SuiteConfig::new(2, 3).with_trials(20).with_lprime(Some(2))).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
    }
}
