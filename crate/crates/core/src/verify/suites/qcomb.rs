use super::report;
use crate::qcomb::{binomial, cor_ml_value, gauss_expand, lemma_mt_rhs, qbinom, qbinom_at_eps};
use crate::scalar::{l_of, CyclotomicNumber, Rational};
use crate::verify::harness::{check_cases, expect_eq, Mismatch};
use crate::verify::{Suite, SuiteConfig, VerificationReport, VerifyError};

/// Gaussian binomials at roots of unity. Sweeps `l'` in `2..=12`, or only
/// the configured `l'`.
pub struct QCombSuite;

pub(crate) const LEMMA_MAX_M: i64 = 40;
pub(crate) const COR_RANGE: i64 = 40;
pub(crate) const INJECTIVITY_RANGE: i64 = 200;
pub(crate) const FORMULA_X_MAX_M: u32 = 30;

/// `(eps^m, [m over l]_eps)` for every `m` in a range, so that the pairwise
/// injectivity sweep evaluates each value once.
pub(crate) struct InjectivityTable {
    lprime: u32,
    lo: i64,
    values: Vec<(CyclotomicNumber, CyclotomicNumber)>,
}

impl InjectivityTable {
    pub(crate) fn new(lprime: u32, lo: i64, hi: i64) -> Self {
        let l = l_of(lprime);
        let values =
            (lo..=hi).map(|m| (CyclotomicNumber::epsilon_pow(lprime, m), qbinom_at_eps(m, l, lprime))).collect();
        InjectivityTable { lprime, lo, values }
    }

    fn get(&self, m: i64) -> &(CyclotomicNumber, CyclotomicNumber) {
        &self.values[(m - self.lo) as usize]
    }

    /// Same predicate as [`crate::qcomb::check_m_injectivity`].
    pub(crate) fn holds(&self, m: i64, mprime: i64) -> bool {
        m == mprime || self.get(m) != self.get(mprime)
    }

    pub(crate) fn lprime(&self) -> u32 {
        self.lprime
    }
}

impl Suite for QCombSuite {
    fn name(&self) -> &'static str {
        "qcomb"
    }

    fn summary(&self) -> &'static str {
        "factorization of [m over t] at eps, [m over l]_eps, injectivity, generating function"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
        let lprimes: Vec<u32> = match cfg.lprime {
            Some(l) => vec![l],
            None => (2..=12).collect(),
        };
        let mut out = Vec::new();

        let ct: Vec<(i64, u32)> = (-20..=20).flat_map(|c| (0..=10).map(move |t| (c, t))).collect();
        out.push(check_cases("integrality", "[c over t] lies in Z[v, v^-1]", &ct, |&(c, t)| {
            expect_eq(qbinom(c, t).is_integral(), true)
        }));
        let pascal: Vec<(i64, u32)> = ct.iter().copied().filter(|&(_, t)| t >= 1).collect();
        out.push(check_cases(
            "q-pascal",
            "[c over t] = v^(c-t) [c-1 over t-1] + v^-t [c-1 over t]",
            &pascal,
            |&(c, t)| {
                let rhs = &qbinom(c - 1, t - 1).shift(c - t as i64) + &qbinom(c - 1, t).shift(-(t as i64));
                expect_eq(qbinom(c, t), rhs)
            },
        ));
        out.push(check_cases("reflection", "[m over t] = (-1)^t [t - m - 1 over t]", &ct, |&(m, t)| {
            let refl = qbinom(t as i64 - m - 1, t);
            expect_eq(qbinom(m, t), if t % 2 == 1 { -refl } else { refl })
        }));
        let ms: Vec<u32> = (0..=FORMULA_X_MAX_M).collect();
        out.push(check_cases(
            "formula-x",
            "prod_(j<m) (1 + v^2j X) = sum_t v^(t(m-1)) [m over t] X^t",
            &ms,
            |&m| {
                let coeffs = gauss_expand(m);
                for t in 0..=m {
                    let rhs = qbinom(m as i64, t).shift(t as i64 * (m as i64 - 1));
                    if coeffs[t as usize] != rhs {
                        return Err(Mismatch::new(&coeffs[t as usize], rhs).detail(format!("t = {t}")));
                    }
                }
                Ok(())
            },
        ));

        let lemma_cases: Vec<(i64, i64)> = (0..=LEMMA_MAX_M).flat_map(|m| (0..=m).map(move |t| (m, t))).collect();
        let cor_cases: Vec<i64> = (-COR_RANGE..=COR_RANGE).collect();
        let inj_cases: Vec<(i64, i64)> = (-INJECTIVITY_RANGE..=INJECTIVITY_RANGE)
            .flat_map(|m| (-INJECTIVITY_RANGE..=INJECTIVITY_RANGE).map(move |mp| (m, mp)))
            .collect();
        for &lp in &lprimes {
            let l = l_of(lp);
            out.push(check_cases(
                format!("lemma-m-t[l'={lp}]"),
                "[m over t]_eps = eps^(l(t1 l - t1 m0 - t1 l m1 - t0 m1)) [m0 over t0]_eps C(m1, t1)",
                &lemma_cases,
                |&(m, t)| {
                    let rhs = lemma_mt_rhs(m, t, lp).map_err(|e| Mismatch::new(e.to_string(), ()))?;
                    expect_eq(qbinom_at_eps(m, t as u32, lp), rhs)
                },
            ));
            out.push(check_cases(
                format!("cor-m-l[l'={lp}]"),
                "[m over l]_eps = m1 (l' odd), (-1)^(l+m) m1 (l' even)",
                &cor_cases,
                |&m| expect_eq(qbinom_at_eps(m, l, lp), CyclotomicNumber::from_rational(lp, cor_ml_value(m, lp))),
            ));
            let table = InjectivityTable::new(lp, -INJECTIVITY_RANGE, INJECTIVITY_RANGE);
            out.push(check_cases(
                format!("cor-m-injectivity[l'={lp}]"),
                "eps^m = eps^m' and [m over l]_eps = [m' over l]_eps imply m = m'",
                &inj_cases,
                |&(m, mp)| {
                    if table.holds(m, mp) {
                        Ok(())
                    } else {
                        Err(Mismatch::new(table.get(m), table.get(mp)).detail(format!("l' = {}", table.lprime())))
                    }
                },
            ));
        }
        // The ordinary binomial factor of the lemma at eps = 1.
        out.push(check_cases("classical-limit", "[m over t] at v = 1 is C(m, t)", &ct, |&(c, t)| {
            let at_one = qbinom_at_eps(c, t, 1).as_rational().expect("l' = 1 is rational");
            expect_eq(at_one, Rational::from_bigint(binomial(c, t)))
        }));
        Ok(report(self.name(), cfg, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcomb::check_m_injectivity;

    #[test]
    fn table_agrees_with_pointwise_check() {
        for lp in [2, 3, 4, 6] {
            let table = InjectivityTable::new(lp, -30, 30);
            for m in -30..=30 {
                for mp in -30..=30 {
                    assert_eq!(table.holds(m, mp), check_m_injectivity(m, mp, lp), "{m} {mp} l'={lp}");
                }
            }
        }
    }

    #[test]
    fn passes_for_one_root() {
        let rep = QCombSuite.run(&SuiteConfig::new(1, 1).with_lprime(Some(6))).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
        assert!(rep.results.iter().any(|r| r.id == "lemma-m-t[l'=6]" && r.trials == 861));
    }
}
