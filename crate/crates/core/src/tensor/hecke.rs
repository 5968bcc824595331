//! Right action of the extended affine Hecke algebra on the tensor space.

use serde::{Deserialize, Serialize};

use super::{ActionError, IndexTuple, Session, TensorVector};
use crate::scalar::Scalar;

/// Which base-case coefficient of `T_k` the self-test perturbs (by adding 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeckePerturbation {
    /// `v^2` on `i_k = i_{k+1}`.
    EqualEigenvalue,
    /// `v` on `i_k < i_{k+1}`.
    AscentCoefficient,
    /// `v` on the swapped tuple when `i_k > i_{k+1}`.
    DescentSwapCoefficient,
    /// `v^2 - 1` on the fixed tuple when `i_k > i_{k+1}`.
    DescentDiagonalCoefficient,
}

type PairTerms = Vec<((i64, i64), Scalar)>;

impl Session {
    fn bump(&self, s: Scalar, which: HeckePerturbation) -> Scalar {
        if self.perturbation == Some(which) {
            &s + &self.one()
        } else {
            s
        }
    }

    fn v2_minus_one(&self) -> Scalar {
        &self.v_pow(2) - &self.one()
    }

    /// `T_k` on `omega_(a,b)` for `a, b` in `1..=n`.
    fn t_base(&self, a: i64, b: i64) -> PairTerms {
        use HeckePerturbation::*;
        if a == b {
            vec![((a, b), self.bump(self.v_pow(2), EqualEigenvalue))]
        } else if a < b {
            vec![((b, a), self.bump(self.v_pow(1), AscentCoefficient))]
        } else {
            vec![
                ((b, a), self.bump(self.v_pow(1), DescentSwapCoefficient)),
                ((a, b), self.bump(self.v2_minus_one(), DescentDiagonalCoefficient)),
            ]
        }
    }

    /// `T_k` on `omega_(a,b)` (slots `k`, `k+1`) for arbitrary integers.
    ///
    /// Writes `omega_(a,b)` as a base tuple times one `X^{+-1}` factor and moves
    /// `T_k` across it with
    ///   `X_{k+1} T = T X_k + (v^2-1) X_{k+1}`,
    ///   `X_k T = T X_{k+1} - (v^2-1) X_{k+1}`,
    ///   `X_k^-1 T = T X_{k+1}^-1 + (v^2-1) X_k^-1`,
    ///   `X_{k+1}^-1 T = T X_k^-1 - (v^2-1) X_k^-1`,
    /// recursing until both entries lie in `1..=n`. `X_t^-1` adds `n` to slot `t`.
    fn t_pair(&self, a: i64, b: i64) -> PairTerms {
        let n = self.n as i64;
        let c = self.v2_minus_one();
        let (mut terms, extra) = if a > n {
            let inner = self.t_pair(a - n, b);
            (shift(inner, 0, n), ((a, b), c))
        } else if a < 1 {
            let inner = self.t_pair(a + n, b);
            (shift(inner, 0, -n), ((a + n, b - n), -&c))
        } else if b > n {
            let inner = self.t_pair(a, b - n);
            (shift(inner, n, 0), ((a + n, b - n), -&c))
        } else if b < 1 {
            let inner = self.t_pair(a, b + n);
            (shift(inner, -n, 0), ((a, b), c))
        } else {
            return self.t_base(a, b);
        };
        terms.push(extra);
        terms
    }

    fn check_hecke_index(&self, k: usize) -> Result<(), ActionError> {
        self.check_range("Hecke generator", k as i64, 1, self.r as i64 - 1)
    }

    /// `vec . T_k`.
    pub fn apply_t(&self, k: usize, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_hecke_index(k)?;
        self.check_vector(vec)?;
        Ok(vec.linear_map(|idx, emit| {
            let (a, b) = (idx.slot(k), idx.slot(k + 1));
            for ((a2, b2), coeff) in self.t_pair(a, b) {
                emit(idx.with_slot(k, a2).with_slot(k + 1, b2), coeff);
            }
        }))
    }

    /// `vec . T_k^-1`, using `T^-1 = v^-2 (T - (v^2 - 1))`.
    pub fn apply_t_inv(&self, k: usize, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        let t = self.apply_t(k, vec)?;
        let shifted = t.sub(&vec.scale(&self.v2_minus_one()));
        Ok(shifted.scale(&self.v_pow(-2)))
    }

    /// `vec . X_t^power`: slot `t` moves by `-power * n`.
    pub fn apply_x(&self, t: usize, power: i64, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_range("X slot", t as i64, 1, self.r as i64)?;
        self.check_vector(vec)?;
        let delta = -power * self.n as i64;
        Ok(vec.relabel(|idx: &IndexTuple| idx.with_slot(t, idx.slot(t) + delta)))
    }
}

fn shift(terms: PairTerms, da: i64, db: i64) -> PairTerms {
    terms.into_iter().map(|((a, b), c)| ((a + da, b + db), c)).collect()
}
