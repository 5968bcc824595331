use std::collections::BTreeSet;

use super::{e_gens, f_gens, report};
use crate::schur::{idempotent_e, retract, section, transport_endomorphism, TruncationPair};
use crate::tensor::{ActionError, IndexTuple, OperatorExpr, TensorVector};
use crate::verify::harness::{check_cases, check_vectors, exhaustive_window, expect_eq, window_tuples, Mismatch, Sampler};
use crate::verify::{IdentityResult, Suite, SuiteConfig, VerificationReport, VerifyError};

/// The truncation idempotent `e` and the retraction `rho` identifying
/// `e Omega_N^(x)r` with `Omega_n^(x)r`. Needs `N` in the configuration.
pub struct SchurSuite;

pub const MORITA_LABEL: &str = "Morita range";
pub const OUTSIDE_MORITA_LABEL: &str = "outside Morita range";

const SPECIALIZATIONS: [u32; 5] = [1, 2, 3, 4, 6];

fn hecke_ops(r: usize) -> Vec<(String, OperatorExpr)> {
    let mut ops: Vec<(String, OperatorExpr)> = (1..r).map(|k| (format!("T_{k}"), OperatorExpr::t(k))).collect();
    for t in 1..=r {
        ops.push((format!("X_{t}"), OperatorExpr::x(t, 1)));
        ops.push((format!("X_{t}^-1"), OperatorExpr::x(t, -1)));
    }
    ops
}

impl Suite for SchurSuite {
    fn name(&self) -> &'static str {
        "schur"
    }

    fn summary(&self) -> &'static str {
        "idempotent e, retraction rho and transport of operators from N to n rows"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let big_n = cfg.big_n.ok_or_else(|| VerifyError::InvalidConfig("the schur suite needs N".into()))?;
        let pair = TruncationPair::new(cfg.n, big_n, cfg.r)?;
        let (n, r) = (cfg.n, cfg.r);
        let large = pair.large_session(cfg.lprime)?.with_perturbation(cfg.sabotage);
        let small = pair.small_session(cfg.lprime)?.with_perturbation(cfg.sabotage);
        let mut out = Vec::new();

        // Inputs: random vectors of both sessions, the full large window and
        // the part of it inside the image of e.
        let (lo, hi) = exhaustive_window(big_n);
        let mut big_xs = Sampler::new(cfg, 5).with_window((lo, hi)).pool(&large, cfg.trials);
        if let Some(ts) = window_tuples(r, lo, hi, |_| true) {
            big_xs.extend(ts.into_iter().map(|t| large.basis(t)));
        }
        let image_tuples = window_tuples(r, lo, hi, |e| pair.in_image(&IndexTuple::new(e.to_vec())));
        let mut image_xs: Vec<TensorVector> = big_xs
            .iter()
            .take(cfg.trials)
            .map(|x| idempotent_e(&pair, x))
            .collect::<Result<_, _>>()?;
        image_xs.retain(|x| !x.is_zero());
        if let Some(ts) = &image_tuples {
            image_xs.extend(ts.iter().map(|t| large.basis(t.clone())));
        }
        let mut small_xs = Sampler::new(cfg, 6).pool(&small, cfg.trials);
        let (slo, shi) = exhaustive_window(n);
        if let Some(ts) = window_tuples(r, slo, shi, |_| true) {
            small_xs.extend(ts.into_iter().map(|t| small.basis(t)));
        }

        let e = |x: &TensorVector| idempotent_e(&pair, x);
        let rho = |x: &TensorVector| retract(&pair, x);
        let sigma = |x: &TensorVector| section(&pair, x);

        out.push(check_vectors("e-idempotent", "e^2 = e", &big_xs, |x| {
            let once = e(x)?;
            expect_eq(e(&once)?, once)
        }));
        for (name, h) in hecke_ops(r) {
            out.push(check_vectors(format!("e-hecke-equivariant[{name}]"), "e (x h) = (e x) h", &big_xs, |x| {
                expect_eq(e(&large.apply_expr(&h, x)?)?, large.apply_expr(&h, &e(x)?)?)
            }));
        }

        match &image_tuples {
            Some(ts) => {
                out.push(check_cases("rho-bijection", "sigma rho = 1 on the window basis of e Omega_N", ts, |t| {
                    let b = large.basis(t.clone());
                    let image = rho(&b)?;
                    if image.support_len() != 1 {
                        return Err(Mismatch::new(&image, "a single basis vector"));
                    }
                    expect_eq(sigma(&image)?, b)
                }));
                let images: Vec<IndexTuple> = ts
                    .iter()
                    .map(|t| rho(&large.basis(t.clone())).map(|v| v.terms().next().expect("nonzero").0.clone()))
                    .collect::<Result<_, _>>()?;
                let distinct: BTreeSet<&IndexTuple> = images.iter().collect();
                out.push(check_cases("rho-injective", "rho is injective on the window basis", &[ts.len()], |&count| {
                    expect_eq(distinct.len(), count)
                }));
            }
            None => out.push(IdentityResult::skipped(
                "rho-bijection",
                "sigma rho = 1 on the window basis of e Omega_N",
                "window basis too large to enumerate",
            )),
        }
        out.push(check_vectors("rho-surjective", "rho sigma = 1 on Omega_n", &small_xs, |y| {
            expect_eq(rho(&sigma(y)?)?, y.clone())
        }));
        for (name, h) in hecke_ops(r) {
            out.push(check_vectors(format!("rho-intertwines[{name}]"), "rho(x h) = rho(x) h on the image of e", &image_xs, |x| {
                expect_eq(rho(&large.apply_expr(&h, x)?)?, small.apply_expr(&h, &rho(x)?)?)
            }));
        }

        let tr = |op: &OperatorExpr| transport_endomorphism(op, &pair, cfg.lprime);
        let id = tr(&OperatorExpr::Identity)?;
        out.push(check_vectors("transport-identity", "rho e 1 e sigma = 1", &small_xs, |y| expect_eq(id.apply(y)?, y.clone())));
        for mu in small.compositions() {
            let t = tr(&OperatorExpr::weight_proj(&pair.pad(&mu)))?;
            out.push(check_vectors(format!("transport-weight[{mu:?}]"), "rho e 1_mu~ e sigma = 1_mu", &small_xs, |y| {
                expect_eq(t.apply(y)?, small.project_weight(&mu, y)?)
            }));
        }
        for i in 1..=n {
            for p in [1, -1] {
                let t = tr(&OperatorExpr::k(i, p))?;
                out.push(check_vectors(format!("transport-k[k_{i}^{p}]"), "rho e k_i e sigma = k_i", &small_xs, |y| {
                    expect_eq(t.apply(y)?, small.apply_k(i, p, y)?)
                }));
            }
        }

        // Multiplicativity on operators that preserve the image of e.
        let mut factors: Vec<(String, OperatorExpr)> =
            (1..=n).map(|i| (format!("k_{i}"), OperatorExpr::k(i, 1))).collect();
        factors.extend(small.compositions().into_iter().map(|mu| (format!("1_{mu:?}~"), OperatorExpr::weight_proj(&pair.pad(&mu)))));
        factors.extend(e_gens(n));
        factors.extend(f_gens(n));
        for (a, op1) in &factors {
            let t1 = tr(op1)?;
            let products: Vec<_> = factors
                .iter()
                .map(|(b, op2)| {
                    let both = OperatorExpr::compose(vec![op1.clone(), op2.clone()]);
                    Ok((b.clone(), tr(&both)?, tr(op2)?))
                })
                .collect::<Result<_, ActionError>>()?;
            out.push(check_vectors(
                format!("transport-multiplicative[{a}]"),
                "rho e (a b) e sigma = (rho e a e sigma)(rho e b e sigma)",
                &small_xs,
                |y| {
                    for (b, both, t2) in &products {
                        let lhs = both.apply(y)?;
                        let rhs = t1.apply(&t2.apply(y)?)?;
                        if lhs != rhs {
                            return Err(Mismatch::new(lhs, rhs).detail(format!("second factor {b}")));
                        }
                    }
                    Ok(())
                },
            ));
        }

        // Whether transport reproduces E_i, F_i of the small session is an
        // open expectation; it is recorded, not asserted.
        for (name, op) in e_gens(n).into_iter().chain(f_gens(n)) {
            let t = tr(&op)?;
            out.push(
                check_vectors(format!("transport-generator[{name}]"), "rho e u e sigma = u for u = E_i, F_i", &small_xs, |y| {
                    expect_eq(t.apply(y)?, small.apply_expr(&op, y)?)
                })
                .into_experiment(),
            );
        }

        // Module level at eps: specializing commutes with rho e and with T_k.
        let lprimes: Vec<u32> = match cfg.lprime {
            Some(l) => vec![l],
            None => SPECIALIZATIONS.to_vec(),
        };
        let mut sampler = Sampler::new(cfg, 7).with_window((lo, hi));
        let generic_xs: Vec<TensorVector> = (0..cfg.trials).map(|_| sampler.laurent_vector(r)).collect();
        for lp in lprimes {
            out.push(module_at_eps(&pair, lp, cfg, &generic_xs)?);
        }

        let mut rep = report(self.name(), cfg, out);
        rep.labels.push(if pair.is_morita_range() { MORITA_LABEL } else { OUTSIDE_MORITA_LABEL }.to_string());
        Ok(rep)
    }
}

fn module_at_eps(
    pair: &TruncationPair,
    lp: u32,
    cfg: &SuiteConfig,
    xs: &[TensorVector],
) -> Result<IdentityResult, VerifyError> {
    let small_eps = pair.small_session(Some(lp))?.with_perturbation(cfg.sabotage);
    let large_eps = pair.large_session(Some(lp))?.with_perturbation(cfg.sabotage);
    let hs = hecke_ops(pair.r());
    Ok(check_vectors(
        format!("module-at-eps[l'={lp}]"),
        "e (Omega_N at eps) = Omega_n at eps via rho, compatibly with H",
        xs,
        |x| {
            let via_generic = retract(pair, &idempotent_e(pair, x)?)?.specialize(lp)?;
            let x_eps = x.specialize(lp)?;
            let via_eps = retract(pair, &idempotent_e(pair, &x_eps)?)?;
            expect_eq(via_generic.clone(), via_eps.clone())?;
            let image = idempotent_e(pair, &x_eps)?;
            for (name, h) in &hs {
                let lhs = retract(pair, &large_eps.apply_expr(h, &image)?)?;
                let rhs = small_eps.apply_expr(h, &via_eps)?;
                if lhs != rhs {
                    return Err(Mismatch::new(lhs, rhs).detail(format!("h = {name}")));
                }
            }
            Ok(())
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn morita_labels() {
        let rep = SchurSuite.run(&SuiteConfig::new(2, 2).with_big_n(Some(3)).with_trials(10)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
        assert_eq!(rep.labels, vec![MORITA_LABEL]);
        let rep = SchurSuite.run(&SuiteConfig::new(2, 3).with_big_n(Some(4)).with_trials(10)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
        assert_eq!(rep.labels, vec![OUTSIDE_MORITA_LABEL]);
    }

    #[test]
    fn needs_big_n() {
        assert!(matches!(SchurSuite.run(&SuiteConfig::new(2, 2)), Err(VerifyError::InvalidConfig(_))));
    }

    #[test]
    fn generator_transport_is_an_experiment() {
        let rep = SchurSuite.run(&SuiteConfig::new(2, 2).with_big_n(Some(3)).with_trials(10)).unwrap();
        let exp: Vec<_> = rep.results.iter().filter(|r| r.id.starts_with("transport-generator")).collect();
        assert_eq!(exp.len(), 2);
        assert!(exp.iter().all(|r| r.status == Status::Skipped));
    }
}
