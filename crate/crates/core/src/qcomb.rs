//! Balanced quantum integers, factorials and Gaussian binomials over
//! `Z[v, v^-1]`, their values at roots of unity, and the root-of-unity
//! factorization of `[m over t]_eps`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{l_of, specialize, CyclotomicNumber, LaurentPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QCombError {
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// `[c]_v = (v^c - v^-c) / (v - v^-1)`.
pub fn qint(c: i64) -> LaurentPoly {
    if c < 0 {
        return -qint(-c);
    }
    LaurentPoly::from_terms((0..c).map(|j| (c - 1 - 2 * j, Rational::one())))
}

/// `[t]_v! = [1]_v [2]_v ... [t]_v`.
pub fn qfact(t: u32) -> LaurentPoly {
    (1..=t as i64).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i))
}

fn v_diff(a: i64) -> LaurentPoly {
    // v^a - v^-a
    LaurentPoly::from_terms([(a, Rational::one()), (-a, Rational::from_int(-1))])
}

/// The balanced Gaussian binomial `[c over t]_v` for any integer `c`.
///
/// Evaluates `prod_{s=1..t} (v^(c-s+1) - v^(-c+s-1)) / (v^s - v^-s)` one
/// factor at a time. Every partial product is `[c over s]_v`, which lies in
/// `Z[v, v^-1]`, so each division is exact.
pub fn qbinom(c: i64, t: u32) -> LaurentPoly {
    let acc = match qbinom_int(c, t) {
        Some(p) => p.to_laurent(),
        None => qbinom_rational(c, t),
    };
    assert!(acc.is_integral(), "qbinom({c}, {t}) left Z[v, v^-1]: {acc}");
    acc
}

fn qbinom_rational(c: i64, t: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for s in 1..=t as i64 {
        let top = c - s + 1;
        if top == 0 {
            return LaurentPoly::zero();
        }
        acc = (&acc * &v_diff(top))
            .exact_div(&v_diff(s))
            .unwrap_or_else(|e| panic!("qbinom({c}, {s}): {e}"));
    }
    acc
}

/// Integer Laurent polynomial `v^low * sum coeffs[i] v^i` used by the
/// overflow-checked fast path of [`qbinom`].
struct IntLaurent {
    low: i64,
    coeffs: Vec<i128>,
}

impl IntLaurent {
    fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (self.low + i as i64, Rational::from_bigint(BigInt::from(*c)))),
        )
    }

    /// Exponents folded modulo `lprime`, then reduced modulo `Phi_lprime`.
    fn specialize(&self, lprime: u32) -> Option<CyclotomicNumber> {
        let mut folded = vec![0i128; lprime as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let slot = &mut folded[(self.low + i as i64).rem_euclid(lprime as i64) as usize];
            *slot = slot.checked_add(*c)?;
        }
        let poly = folded.into_iter().map(|c| Rational::from_bigint(BigInt::from(c))).collect();
        Some(CyclotomicNumber::from_poly(lprime, poly))
    }
}

fn qbinom_int(c: i64, t: u32) -> Option<IntLaurent> {
    let mut p = IntLaurent { low: 0, coeffs: vec![1] };
    for s in 1..=t as i64 {
        let top = c - s + 1;
        if top == 0 {
            return Some(IntLaurent { low: 0, coeffs: Vec::new() });
        }
        // times (v^top - v^-top)
        let a = top.unsigned_abs() as usize;
        let sign: i128 = top.signum() as i128;
        let mut prod = vec![0i128; p.coeffs.len() + 2 * a];
        for (i, &x) in p.coeffs.iter().enumerate() {
            let x = x.checked_mul(sign)?;
            prod[i + 2 * a] = prod[i + 2 * a].checked_add(x)?;
            prod[i] = prod[i].checked_sub(x)?;
        }
        // divided by (v^s - v^-s) = v^-s (v^2s - 1)
        let d = 2 * s as usize;
        if prod.len() < d {
            return None;
        }
        let mut quot = vec![0i128; prod.len() - d];
        for i in (d..prod.len()).rev() {
            let top_coeff = prod[i];
            quot[i - d] = top_coeff;
            prod[i - d] = prod[i - d].checked_add(top_coeff)?;
        }
        assert!(prod[..d].iter().all(|&r| r == 0), "qbinom({c}, {s}): inexact division");
        p = IntLaurent { low: p.low - a as i64 + s, coeffs: quot };
    }
    Some(p)
}

/// `[c over t]_eps` for a primitive `lprime`-th root of unity.
pub fn qbinom_at_eps(c: i64, t: u32, lprime: u32) -> CyclotomicNumber {
    assert!(lprime >= 1, "l' must be at least 1");
    qbinom_int(c, t)
        .and_then(|p| p.specialize(lprime))
        .unwrap_or_else(|| specialize(&qbinom(c, t), lprime))
}

/// Coefficients of `X^0 .. X^m` in `prod_{j=0}^{m-1} (1 + v^(2j) X)`.
pub fn gauss_expand(m: u32) -> Vec<LaurentPoly> {
    let mut coeffs = vec![LaurentPoly::one()];
    for j in 0..m as i64 {
        let step = LaurentPoly::v_pow(2 * j);
        let mut next = coeffs.clone();
        next.push(LaurentPoly::zero());
        for (t, c) in coeffs.iter().enumerate() {
            next[t + 1] = &next[t + 1] + &(&step * c);
        }
        coeffs = next;
    }
    coeffs
}

/// Ordinary binomial coefficient with the falling-factorial convention, so
/// negative `m` is allowed: `m (m-1) ... (m-t+1) / t!`.
pub fn binomial(m: i64, t: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..t as i64 {
        num *= BigInt::from(m - i);
        den *= BigInt::from(i + 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Right-hand side of the root-of-unity factorization of `[m over t]_eps`:
/// with `m = m0 + l m1`, `t = t0 + l t1` (`0 <= m0, t0 < l`),
/// `eps^(l (t1 l - t1 m0 - t1 l m1 - t0 m1)) [m0 over t0]_eps C(m1, t1)`.
pub fn lemma_mt_rhs(m: i64, t: i64, lprime: u32) -> Result<CyclotomicNumber, QCombError> {
    if m < 0 || t < 0 || t > m {
        return Err(QCombError::Precondition(format!("need 0 <= t <= m, got m = {m}, t = {t}")));
    }
    if lprime == 0 {
        return Err(QCombError::Precondition("l' must be at least 1".into()));
    }
    let l = l_of(lprime) as i64;
    let (m0, m1) = (m % l, m / l);
    let (t0, t1) = (t % l, t / l);
    let exp = l * (t1 * l - t1 * m0 - t1 * l * m1 - t0 * m1);
    let eps_part = CyclotomicNumber::epsilon_pow(lprime, exp);
    let small = qbinom_at_eps(m0, t0 as u32, lprime);
    let ordinary = Rational::from_bigint(binomial(m1, t1 as u32));
    Ok((&eps_part * &small).scale(&ordinary))
}

/// Closed form of `[m over l]_eps`: `m1` for odd `l'`, `(-1)^(l+m) m1` for
/// even `l'`, where `m = m0 + l m1` with `0 <= m0 < l`.
pub fn cor_ml_value(m: i64, lprime: u32) -> Rational {
    let l = l_of(lprime) as i64;
    let m1 = m.div_euclid(l);
    if lprime % 2 == 1 || (l + m).rem_euclid(2) == 0 {
        Rational::from_int(m1)
    } else {
        Rational::from_int(-m1)
    }
}

/// Checks one instance of the injectivity statement: equal `eps^m` and equal
/// `[m over l]_eps` force `m = m'`.
pub fn check_m_injectivity(m: i64, mprime: i64, lprime: u32) -> bool {
    if m == mprime {
        return true;
    }
    let l = l_of(lprime);
    let same_power = CyclotomicNumber::epsilon_pow(lprime, m) == CyclotomicNumber::epsilon_pow(lprime, mprime);
    if !same_power {
        return true;
    }
    qbinom_at_eps(m, l, lprime) != qbinom_at_eps(mprime, l, lprime)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_int(c))))
    }

    #[test]
    fn qint_examples() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(3), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(qint(-2), lp(&[(1, -1), (-1, -1)]));
    }

    #[test]
    fn qint_matches_defining_quotient() {
        let denom = v_diff(1);
        for c in -15..=15 {
            assert_eq!(v_diff(c).exact_div(&denom).unwrap(), qint(c), "c = {c}");
        }
    }

    #[test]
    fn qfact_examples() {
        assert_eq!(qfact(0), LaurentPoly::one());
        assert_eq!(qfact(2), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(qfact(3), &lp(&[(1, 1), (-1, 1)]) * &lp(&[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(4, 2), lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        // [4]! / ([2]! [2]!) by division, independently of the product loop.
        assert_eq!(qfact(4).exact_div(&(&qfact(2) * &qfact(2))).unwrap(), qbinom(4, 2));
        for c in -5..=5 {
            assert_eq!(qbinom(c, 0), LaurentPoly::one());
        }
        assert!(qbinom(1, 2).is_zero());
        assert!(qbinom(0, 3).is_zero());
    }

    #[test]
    fn fast_path_matches_rational_route() {
        for c in -25..=25 {
            for t in 0..=12 {
                let slow = qbinom_rational(c, t);
                assert_eq!(qbinom(c, t), slow, "c = {c}, t = {t}");
                for l in [1, 2, 3, 4, 6, 7] {
                    assert_eq!(qbinom_at_eps(c, t, l), specialize(&slow, l), "c = {c}, t = {t}, l' = {l}");
                }
            }
        }
    }

    #[test]
    fn qbinom_is_integral_in_range() {
        for c in -20..=20 {
            for t in 0..=10 {
                assert!(qbinom(c, t).is_integral(), "c = {c}, t = {t}");
            }
        }
    }

    #[test]
    fn q_pascal_rule() {
        for c in 1..=20i64 {
            for t in 1..=c as u32 {
                let lhs = qbinom(c, t);
                let rhs = &qbinom(c - 1, t - 1).shift(c - t as i64) + &qbinom(c - 1, t).shift(-(t as i64));
                assert_eq!(lhs, rhs, "c = {c}, t = {t}");
            }
        }
    }

    #[test]
    fn reflection_for_negative_tops() {
        // [m over t] = (-1)^t [-m + t - 1 over t]
        for m in -20..=20i64 {
            for t in 0..=8u32 {
                let refl = qbinom(-m + t as i64 - 1, t);
                let refl = if t % 2 == 1 { -refl } else { refl };
                assert_eq!(qbinom(m, t), refl, "m = {m}, t = {t}");
            }
        }
    }

    #[test]
    fn qbinom_at_eps_examples() {
        assert!(qbinom_at_eps(4, 2, 3).is_zero());
        assert_eq!(qbinom_at_eps(5, 2, 4), CyclotomicNumber::from_int(4, -2));
        for l in 1..=8 {
            assert!(qbinom_at_eps(17, 0, l).is_one());
        }
    }

    #[test]
    fn gauss_expand_examples() {
        assert_eq!(gauss_expand(0), vec![LaurentPoly::one()]);
        assert_eq!(gauss_expand(2), vec![LaurentPoly::one(), lp(&[(0, 1), (2, 1)]), LaurentPoly::v_pow(2)]);
        assert_eq!(gauss_expand(3)[1], qbinom(3, 1).shift(2));
    }

    #[test]
    fn lemma_rhs_examples() {
        assert!(lemma_mt_rhs(4, 2, 3).unwrap().is_zero());
        for m in 0..10 {
            assert!(lemma_mt_rhs(m, 0, 5).unwrap().is_one());
        }
        let v = lemma_mt_rhs(7, 3, 3).unwrap();
        assert_eq!(v, CyclotomicNumber::from_int(3, 2));
        assert_eq!(v, qbinom_at_eps(7, 3, 3));
        assert!(lemma_mt_rhs(3, 4, 3).is_err());
        assert!(lemma_mt_rhs(-1, 0, 3).is_err());
    }

    #[test]
    fn cor_ml_examples() {
        assert_eq!(cor_ml_value(7, 3), Rational::from_int(2));
        assert_eq!(cor_ml_value(5, 4), Rational::from_int(-2));
        for l in 1..=12 {
            assert!(cor_ml_value(0, l).is_zero());
        }
        assert_eq!(CyclotomicNumber::from_rational(4, cor_ml_value(5, 4)), qbinom_at_eps(5, 2, 4));
    }

    #[test]
    fn injectivity_examples() {
        assert!(check_m_injectivity(5, 5, 4));
        assert!(check_m_injectivity(3, 9, 6));
        assert!(check_m_injectivity(1, 2, 3));
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
    }
}
