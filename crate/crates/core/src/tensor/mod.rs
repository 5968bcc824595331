//! The tensor space `Omega^{(x) r}` with its right affine Hecke action and
//! left quantum-group action, weights and weight idempotents.
//!
//! Every action is a method on [`Session`], which fixes `n`, `r` and the
//! scalar ring (generic, or specialized at a primitive `l'`-th root of unity).

mod expr;
mod hecke;
mod index;
mod quantum;
mod vector;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{LaurentPoly, Scalar, ScalarError, ScalarKind};

pub use expr::{LinTerm, OperatorExpr, Side, ZSign};
pub use hecke::HeckePerturbation;
pub use index::{compositions, residue, weight_of, Composition, IndexTuple};
pub use vector::TensorVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("{what} index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { what: &'static str, index: i64, lo: i64, hi: i64 },
    #[error("tuple length {found} does not match r = {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("scalar of kind {found} where {expected} was expected")]
    KindMismatch { expected: ScalarKind, found: ScalarKind },
    #[error("composition {parts:?} is not in Lambda({n}, {r})")]
    BadComposition { parts: Vec<usize>, n: usize, r: usize },
    #[error("a composed factor mixes quantum-group and Hecke operators")]
    MixedSides,
    #[error("invalid session: {0}")]
    InvalidSession(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `{"n": int, "r": int, "lprime": int | null}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionConfig {
    pub n: usize,
    pub r: usize,
    #[serde(default)]
    pub lprime: Option<u32>,
}

/// Fixed ambient data for tensor-space computations.
#[derive(Debug, Clone)]
pub struct Session {
    n: usize,
    r: usize,
    kind: ScalarKind,
    affine_node: bool,
    perturbation: Option<HeckePerturbation>,
}

impl Session {
    pub fn new(n: usize, r: usize, lprime: Option<u32>) -> Result<Self, ActionError> {
        if n == 0 {
            return Err(ActionError::InvalidSession("n must be at least 1".into()));
        }
        if r == 0 {
            return Err(ActionError::InvalidSession("r must be at least 1".into()));
        }
        if lprime == Some(0) {
            return Err(ActionError::InvalidSession("l' must be at least 1".into()));
        }
        Ok(Session { n, r, kind: ScalarKind::from_lprime(lprime), affine_node: false, perturbation: None })
    }

    pub fn from_config(cfg: SessionConfig) -> Result<Self, ActionError> {
        Session::new(cfg.n, cfg.r, cfg.lprime)
    }

    pub fn config(&self) -> SessionConfig {
        SessionConfig { n: self.n, r: self.r, lprime: self.lprime() }
    }

    /// Enables the candidate `E_n`, `F_n` operators for the affine node.
    pub fn with_affine_node(mut self, enabled: bool) -> Self {
        self.affine_node = enabled;
        self
    }

    /// Harness self-test only: perturbs one coefficient of the `T_k` action.
    #[doc(hidden)]
    pub fn with_perturbation(mut self, p: Option<HeckePerturbation>) -> Self {
        self.perturbation = p;
        self
    }

    /// Same `n`, `r` and flags over a different scalar ring.
    pub fn with_lprime(&self, lprime: Option<u32>) -> Result<Self, ActionError> {
        let mut s = Session::new(self.n, self.r, lprime)?;
        s.affine_node = self.affine_node;
        s.perturbation = self.perturbation;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn lprime(&self) -> Option<u32> {
        self.kind.lprime()
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn affine_node(&self) -> bool {
        self.affine_node
    }

    pub fn one(&self) -> Scalar {
        self.kind.one()
    }

    pub fn v_pow(&self, k: i64) -> Scalar {
        self.kind.v_pow(k)
    }

    pub fn scalar(&self, p: &LaurentPoly) -> Scalar {
        self.kind.from_laurent(p)
    }

    pub fn basis(&self, idx: impl Into<IndexTuple>) -> TensorVector {
        TensorVector::basis(idx, self.kind)
    }

    /// Checks that a vector belongs to this session.
    pub fn check_vector(&self, vec: &TensorVector) -> Result<(), ActionError> {
        if vec.r() != self.r {
            return Err(ActionError::LengthMismatch { expected: self.r, found: vec.r() });
        }
        match vec.kind() {
            Some(k) if k != self.kind => Err(ActionError::KindMismatch { expected: self.kind, found: k }),
            _ => Ok(()),
        }
    }

    pub fn check_scalar(&self, s: &Scalar) -> Result<(), ActionError> {
        if s.kind() == self.kind {
            Ok(())
        } else {
            Err(ActionError::KindMismatch { expected: self.kind, found: s.kind() })
        }
    }

    fn check_range(&self, what: &'static str, index: i64, lo: i64, hi: i64) -> Result<(), ActionError> {
        if index < lo || index > hi {
            Err(ActionError::IndexOutOfRange { what, index, lo, hi })
        } else {
            Ok(())
        }
    }

    fn residue(&self, j: i64) -> usize {
        residue(j, self.n)
    }

    pub fn weight_of(&self, idx: &IndexTuple) -> Composition {
        weight_of(idx, self.n)
    }

    /// `Lambda(n, r)` for this session.
    pub fn compositions(&self) -> Vec<Composition> {
        compositions(self.n, self.r)
    }

    pub fn check_composition(&self, lam: &Composition) -> Result<(), ActionError> {
        if lam.n() != self.n || lam.r() != self.r {
            return Err(ActionError::BadComposition { parts: lam.parts().to_vec(), n: self.n, r: self.r });
        }
        Ok(())
    }
}
