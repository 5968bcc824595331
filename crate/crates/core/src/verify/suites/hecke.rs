use super::{report, session_for};
use crate::verify::harness::{check_vectors, expect_eq, standard_inputs};
use crate::verify::{IdentityResult, Suite, SuiteConfig, VerificationReport, VerifyError};
use crate::tensor::TensorVector;

/// Defining relations of the extended affine Hecke algebra, checked on the
/// right action.
pub struct HeckeSuite;

impl Suite for HeckeSuite {
    fn name(&self) -> &'static str {
        "hecke"
    }

    fn summary(&self) -> &'static str {
        "quadratic, braid and Bernstein relations of T_k and X_t"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let s = session_for(cfg)?;
        let r = s.r();
        let xs = standard_inputs(&s, cfg, 1);
        let mut out = Vec::new();

        let t = |k: usize, x: &TensorVector| s.apply_t(k, x);
        let x_ = |j: usize, p: i64, x: &TensorVector| s.apply_x(j, p, x);
        let v2 = s.v_pow(2);

        if r < 2 {
            out.push(IdentityResult::skipped("quadratic", "(T_k + 1)(T_k - v^2) = 0", "no T_k when r = 1"));
        }
        for k in 1..r {
            out.push(check_vectors(format!("quadratic[T_{k}]"), "(T_k + 1)(T_k - v^2) = 0", &xs, |x| {
                let y = t(k, x)?.add(x);
                let lhs = t(k, &y)?.sub(&y.scale(&v2));
                expect_eq(lhs, TensorVector::zero(r))
            }));
            out.push(check_vectors(format!("inverse[T_{k}]"), "T_k T_k^-1 = T_k^-1 T_k = 1", &xs, |x| {
                expect_eq(s.apply_t_inv(k, &t(k, x)?)?, x.clone())?;
                expect_eq(t(k, &s.apply_t_inv(k, x)?)?, x.clone())
            }));
        }
        if r < 3 {
            out.push(IdentityResult::skipped(
                "braid",
                "T_k T_(k+1) T_k = T_(k+1) T_k T_(k+1)",
                format!("no adjacent pair of T generators when r = {r}"),
            ));
        }
        for k in 1..r.saturating_sub(1) {
            out.push(check_vectors(
                format!("braid[T_{k},T_{}]", k + 1),
                "T_k T_(k+1) T_k = T_(k+1) T_k T_(k+1)",
                &xs,
                |x| {
                    let lhs = t(k, &t(k + 1, &t(k, x)?)?)?;
                    let rhs = t(k + 1, &t(k, &t(k + 1, x)?)?)?;
                    expect_eq(lhs, rhs)
                },
            ));
        }
        let far: Vec<(usize, usize)> =
            (1..r).flat_map(|k| (k + 2..r).map(move |j| (k, j))).collect();
        if far.is_empty() {
            out.push(IdentityResult::skipped(
                "far-commute",
                "T_k T_j = T_j T_k for |k - j| > 1",
                format!("no pair with |k - j| > 1 when r = {r}"),
            ));
        }
        for (k, j) in far {
            out.push(check_vectors(format!("far-commute[T_{k},T_{j}]"), "T_k T_j = T_j T_k for |k - j| > 1", &xs, |x| {
                expect_eq(t(j, &t(k, x)?)?, t(k, &t(j, x)?)?)
            }));
        }
        for a in 1..=r {
            for b in a + 1..=r {
                out.push(check_vectors(format!("x-commute[X_{a},X_{b}]"), "X_t X_u = X_u X_t", &xs, |x| {
                    expect_eq(x_(b, 1, &x_(a, 1, x)?)?, x_(a, 1, &x_(b, 1, x)?)?)
                }));
            }
            out.push(check_vectors(format!("x-inverse[X_{a}]"), "X_t X_t^-1 = X_t^-1 X_t = 1", &xs, |x| {
                expect_eq(x_(a, -1, &x_(a, 1, x)?)?, x.clone())?;
                expect_eq(x_(a, 1, &x_(a, -1, x)?)?, x.clone())
            }));
        }
        for k in 1..r {
            out.push(check_vectors(format!("txt[T_{k}]"), "T_k X_k T_k = v^2 X_(k+1)", &xs, |x| {
                let lhs = t(k, &x_(k, 1, &t(k, x)?)?)?;
                expect_eq(lhs, x_(k + 1, 1, x)?.scale(&v2))
            }));
        }
        let xt: Vec<(usize, usize)> =
            (1..r).flat_map(|k| (1..=r).filter(move |&j| j != k && j != k + 1).map(move |j| (j, k))).collect();
        if xt.is_empty() {
            out.push(IdentityResult::skipped(
                "x-t-commute",
                "X_j T_k = T_k X_j for j not in {k, k+1}",
                format!("no such pair when r = {r}"),
            ));
        }
        for (j, k) in xt {
            for p in [1, -1] {
                out.push(check_vectors(
                    format!("x-t-commute[X_{j}^{p},T_{k}]"),
                    "X_j T_k = T_k X_j for j not in {k, k+1}",
                    &xs,
                    |x| expect_eq(t(k, &x_(j, p, x)?)?, x_(j, p, &t(k, x)?)?),
                ));
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
        for (n, r) in [(2, 2), (1, 3)] {
            let rep = HeckeSuite.run(&SuiteConfig::new(n, r).with_trials(30)).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures().next());
        }
    }

    #[test]
    fn sabotage_is_caught() {
        let mut cfg = SuiteConfig::new(2, 2).with_trials(30);
        cfg.sabotage = Some(HeckePerturbation::AscentCoefficient);
        let rep = HeckeSuite.run(&cfg).unwrap();
        let fail = rep.failures().next().expect("perturbed T must break a relation");
        assert_eq!(fail.status, Status::Fail);
        assert!(fail.counterexample.is_some());
    }
}
