//! Truncation from `N` to `n` rows: the idempotent `e`, the functor
//! `V -> eV` on tensor space, and the entry-wise retraction identifying
//! `e Omega_N^{(x) r}` with `Omega_n^{(x) r}`.

use crate::tensor::{residue, ActionError, Composition, IndexTuple, OperatorExpr, Session, TensorVector};

/// Sizes `N >= n >= 1` and `r >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationPair {
    n: usize,
    big_n: usize,
    r: usize,
}

impl TruncationPair {
    pub fn new(n: usize, big_n: usize, r: usize) -> Result<Self, ActionError> {
        if n == 0 || r == 0 || big_n < n {
            return Err(ActionError::InvalidSession(format!(
                "truncation needs N >= n >= 1 and r >= 1, got n = {n}, N = {big_n}, r = {r}"
            )));
        }
        Ok(TruncationPair { n, big_n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `N >= n >= r`, where `e` induces a Morita equivalence.
    pub fn is_morita_range(&self) -> bool {
        self.big_n >= self.n && self.n >= self.r
    }

    pub fn large_session(&self, lprime: Option<u32>) -> Result<Session, ActionError> {
        Session::new(self.big_n, self.r, lprime)
    }

    pub fn small_session(&self, lprime: Option<u32>) -> Result<Session, ActionError> {
        Session::new(self.n, self.r, lprime)
    }

    /// `mu~ = (mu_1, ..., mu_n, 0, ..., 0)`.
    pub fn pad(&self, mu: &Composition) -> Composition {
        mu.extend_to(self.big_n)
    }

    /// `e` as an operator expression in the `N`-session.
    pub fn idempotent_expr(&self) -> OperatorExpr {
        OperatorExpr::IdempotentE { n: self.n, big_n: self.big_n }
    }

    fn retract_entry(&self, j: i64) -> Option<i64> {
        let a = residue(j, self.big_n);
        if a > self.n {
            return None;
        }
        let b = (j - a as i64) / self.big_n as i64;
        Some(a as i64 + self.n as i64 * b)
    }

    fn section_entry(&self, j: i64) -> i64 {
        let a = residue(j, self.n);
        let b = (j - a as i64) / self.n as i64;
        a as i64 + self.big_n as i64 * b
    }

    /// Whether every entry of `idx` has residue mod `N` in `1..=n`.
    pub fn in_image(&self, idx: &IndexTuple) -> bool {
        idx.entries().iter().all(|&j| residue(j, self.big_n) <= self.n)
    }
}

/// Applies `e = sum over mu in Lambda(n, r) of 1_mu~` to a vector of the `N`-session.
pub fn idempotent_e(pair: &TruncationPair, vec: &TensorVector) -> Result<TensorVector, ActionError> {
    check_r(pair, vec)?;
    Ok(vec.filter(|idx| pair.in_image(idx)))
}

fn check_r(pair: &TruncationPair, vec: &TensorVector) -> Result<(), ActionError> {
    if vec.r() != pair.r {
        return Err(ActionError::LengthMismatch { expected: pair.r, found: vec.r() });
    }
    Ok(())
}

/// The retraction `rho`: `a + N b -> a + n b` entry-wise for `a` in `1..=n`.
pub fn retract(pair: &TruncationPair, vec: &TensorVector) -> Result<TensorVector, ActionError> {
    check_r(pair, vec)?;
    for (idx, _) in vec.terms() {
        if !pair.in_image(idx) {
            return Err(ActionError::Precondition(format!(
                "tuple {idx:?} has an entry with residue mod {} outside 1..={}",
                pair.big_n, pair.n
            )));
        }
    }
    Ok(vec.relabel(|idx| idx.map_entries(|j| pair.retract_entry(j).expect("checked above"))))
}

/// The inverse of [`retract`]: `a + n b -> a + N b`.
pub fn section(pair: &TruncationPair, vec: &TensorVector) -> Result<TensorVector, ActionError> {
    check_r(pair, vec)?;
    Ok(vec.relabel(|idx| idx.map_entries(|j| pair.section_entry(j))))
}

/// `x -> retract(e (op (section x)))`: the image of `e op e` acting on the
/// `n`-row tensor space.
#[derive(Debug, Clone)]
pub struct TransportedOperator {
    pair: TruncationPair,
    large: Session,
    op: OperatorExpr,
}

impl TransportedOperator {
    pub fn apply(&self, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        let lifted = section(&self.pair, vec)?;
        let image = self.large.apply_expr(&self.op, &lifted)?;
        retract(&self.pair, &idempotent_e(&self.pair, &image)?)
    }

    pub fn pair(&self) -> &TruncationPair {
        &self.pair
    }
}

/// Transports a quantum-group-side operator of the `N`-session.
pub fn transport_endomorphism(
    op: &OperatorExpr,
    pair: &TruncationPair,
    lprime: Option<u32>,
) -> Result<TransportedOperator, ActionError> {
    if op.side() == crate::tensor::Side::Hecke || op.side() == crate::tensor::Side::Mixed {
        return Err(ActionError::Precondition("transport expects a quantum-group-side operator".into()));
    }
    Ok(TransportedOperator { pair: *pair, large: pair.large_session(lprime)?, op: op.clone() })
}
