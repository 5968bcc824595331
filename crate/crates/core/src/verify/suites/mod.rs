mod bimodule;
mod hecke;
mod qcomb;
mod qla;
mod schur;
mod selftest;
mod specialization;
mod weights;

pub use bimodule::BimoduleSuite;
pub use hecke::HeckeSuite;
pub use qcomb::QCombSuite;
pub use qla::QlaSuite;
pub use schur::{SchurSuite, MORITA_LABEL, OUTSIDE_MORITA_LABEL};
pub use selftest::{SelfTestSuite, PERTURBATIONS};
pub use specialization::{SpecializationSuite, DEFAULT_LPRIMES};
pub use weights::WeightsSuite;

use super::{IdentityResult, SuiteConfig, VerificationReport, VerifyError};
use crate::tensor::{OperatorExpr, Session, ZSign};

/// A named generator.
pub(crate) type Gen = (String, OperatorExpr);

fn session_for(cfg: &SuiteConfig) -> Result<Session, VerifyError> {
    Ok(Session::new(cfg.n, cfg.r, cfg.lprime)?.with_perturbation(cfg.sabotage))
}

fn report(suite: &str, cfg: &SuiteConfig, results: Vec<IdentityResult>) -> VerificationReport {
    VerificationReport { suite: suite.to_string(), config: cfg.clone(), results, labels: Vec::new() }
}

fn e_gens(n: usize) -> Vec<Gen> {
    (1..n).map(|i| (format!("E_{i}"), OperatorExpr::e(i))).collect()
}

fn f_gens(n: usize) -> Vec<Gen> {
    (1..n).map(|i| (format!("F_{i}"), OperatorExpr::f(i))).collect()
}

fn k_gens(n: usize) -> Vec<Gen> {
    (1..=n)
        .flat_map(|i| [(format!("k_{i}"), OperatorExpr::k(i, 1)), (format!("k_{i}^-1"), OperatorExpr::k(i, -1))])
        .collect()
}

fn k_binom_gens(n: usize, r: usize) -> Vec<Gen> {
    (1..=n)
        .flat_map(|i| (1..=r as u32).map(move |t| (format!("[k_{i};0 over {t}]"), OperatorExpr::k_binom(i, t))))
        .collect()
}

fn z_gens() -> Vec<Gen> {
    (1..=2u32)
        .flat_map(|s| {
            [(format!("z_{s}^+"), OperatorExpr::z(s, ZSign::Plus)), (format!("z_{s}^-"), OperatorExpr::z(s, ZSign::Minus))]
        })
        .collect()
}

/// `E_i, F_i, k_i^{+-1}, [k_i;0 over t], z_s^{+-}`.
fn quantum_gens(n: usize, r: usize) -> Vec<Gen> {
    let mut g = e_gens(n);
    g.extend(f_gens(n));
    g.extend(k_gens(n));
    g.extend(k_binom_gens(n, r));
    g.extend(z_gens());
    g
}

/// The candidate operators `E_n, F_n` for the affine node.
fn affine_node_gens(n: usize) -> Vec<Gen> {
    vec![(format!("E_{n}"), OperatorExpr::e(n)), (format!("F_{n}"), OperatorExpr::f(n))]
}

/// `T_k, X_t^{+-1}`.
fn hecke_gens(r: usize) -> Vec<Gen> {
    let mut g: Vec<Gen> = (1..r).map(|k| (format!("T_{k}"), OperatorExpr::t(k))).collect();
    for t in 1..=r {
        g.push((format!("X_{t}"), OperatorExpr::x(t, 1)));
        g.push((format!("X_{t}^-1"), OperatorExpr::x(t, -1)));
    }
    g
}
