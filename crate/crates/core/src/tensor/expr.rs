//! Symbolic operator expressions and their evaluator.

use serde::{Deserialize, Serialize};

use super::{ActionError, Composition, Session, TensorVector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinTerm {
    pub coeff: Scalar,
    pub op: OperatorExpr,
}

/// A linear operator on the tensor space, JSON-tagged by `"kind"`.
///
/// Hecke leaves act on the right, everything else on the left. In a
/// `Compose`, Hecke factors are applied left to right and quantum-group
/// factors right to left (ordinary composition); the two actions commute, so
/// the words are evaluated independently, Hecke word first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum OperatorExpr {
    HeckeT { k: usize },
    HeckeTinv { k: usize },
    XShift { t: usize, power: i64 },
    Egen { i: usize },
    Fgen { i: usize },
    Kgen { i: usize, exponent: i64 },
    KBinom { i: usize, t: u32 },
    Zgen { s: u32, sign: ZSign },
    WeightProj { lambda: Vec<usize> },
    IdempotentE {
        n: usize,
        #[serde(rename = "N")]
        big_n: usize,
    },
    Identity,
    Compose { factors: Vec<OperatorExpr> },
    LinComb { terms: Vec<LinTerm> },
}

/// Which action an expression belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Only scalars and the identity.
    Neutral,
    Quantum,
    Hecke,
    Mixed,
}

impl Side {
    fn join(self, other: Side) -> Side {
        match (self, other) {
            (Side::Neutral, s) | (s, Side::Neutral) => s,
            (a, b) if a == b => a,
            _ => Side::Mixed,
        }
    }
}

impl OperatorExpr {
    pub fn t(k: usize) -> Self {
        OperatorExpr::HeckeT { k }
    }

    pub fn t_inv(k: usize) -> Self {
        OperatorExpr::HeckeTinv { k }
    }

    pub fn x(t: usize, power: i64) -> Self {
        OperatorExpr::XShift { t, power }
    }

    pub fn e(i: usize) -> Self {
        OperatorExpr::Egen { i }
    }

    pub fn f(i: usize) -> Self {
        OperatorExpr::Fgen { i }
    }

    pub fn k(i: usize, exponent: i64) -> Self {
        OperatorExpr::Kgen { i, exponent }
    }

    pub fn k_binom(i: usize, t: u32) -> Self {
        OperatorExpr::KBinom { i, t }
    }

    pub fn z(s: u32, sign: ZSign) -> Self {
        OperatorExpr::Zgen { s, sign }
    }

    pub fn weight_proj(lam: &Composition) -> Self {
        OperatorExpr::WeightProj { lambda: lam.parts().to_vec() }
    }

    pub fn compose(factors: Vec<OperatorExpr>) -> Self {
        OperatorExpr::Compose { factors }
    }

    pub fn lin_comb(terms: Vec<(Scalar, OperatorExpr)>) -> Self {
        OperatorExpr::LinComb { terms: terms.into_iter().map(|(coeff, op)| LinTerm { coeff, op }).collect() }
    }

    /// The zero operator.
    pub fn zero() -> Self {
        OperatorExpr::LinComb { terms: Vec::new() }
    }

    pub fn side(&self) -> Side {
        use OperatorExpr::*;
        match self {
            HeckeT { .. } | HeckeTinv { .. } | XShift { .. } => Side::Hecke,
            Identity => Side::Neutral,
            Compose { factors } => factors.iter().fold(Side::Neutral, |s, f| s.join(f.side())),
            LinComb { terms } => terms.iter().fold(Side::Neutral, |s, t| s.join(t.op.side())),
            _ => Side::Quantum,
        }
    }
}

impl Session {
    /// Truncation idempotent `e = sum over mu in Lambda(small_n, r) of 1_mu~`:
    /// keeps tuples whose residues (mod this session's `n`) lie in `1..=small_n`.
    pub fn apply_idempotent_e(&self, small_n: usize, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_range("idempotent rank", small_n as i64, 1, self.n as i64)?;
        self.check_vector(vec)?;
        Ok(vec.filter(|idx| idx.entries().iter().all(|&j| self.residue(j) <= small_n)))
    }

    /// Evaluates `op` on `vec`.
    pub fn apply_expr(&self, op: &OperatorExpr, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_vector(vec)?;
        self.eval(op, vec)
    }

    fn eval(&self, op: &OperatorExpr, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        use OperatorExpr::*;
        match op {
            HeckeT { k } => self.apply_t(*k, vec),
            HeckeTinv { k } => self.apply_t_inv(*k, vec),
            XShift { t, power } => self.apply_x(*t, *power, vec),
            Egen { i } => self.apply_e_gen(*i, vec),
            Fgen { i } => self.apply_f_gen(*i, vec),
            Kgen { i, exponent } => self.apply_k(*i, *exponent, vec),
            KBinom { i, t } => self.apply_k_binom(*i, *t, vec),
            Zgen { s, sign } => self.apply_z(*s, *sign == ZSign::Plus, vec),
            WeightProj { lambda } => self.project_weight(&Composition::new(lambda.clone()), vec),
            IdempotentE { n, big_n } => {
                if *big_n != self.n {
                    return Err(ActionError::Precondition(format!(
                        "idempotent e with N = {big_n} evaluated in a session with n = {}",
                        self.n
                    )));
                }
                self.apply_idempotent_e(*n, vec)
            }
            Identity => Ok(vec.clone()),
            Compose { factors } => {
                let mut hecke = Vec::new();
                let mut quantum = Vec::new();
                for f in factors {
                    match f.side() {
                        Side::Hecke => hecke.push(f),
                        Side::Quantum | Side::Neutral => quantum.push(f),
                        Side::Mixed => return Err(ActionError::MixedSides),
                    }
                }
                let mut cur = vec.clone();
                for f in hecke {
                    cur = self.eval(f, &cur)?;
                }
                for f in quantum.into_iter().rev() {
                    cur = self.eval(f, &cur)?;
                }
                Ok(cur)
            }
            LinComb { terms } => {
                let mut acc = TensorVector::zero(self.r);
                for term in terms {
                    self.check_scalar(&term.coeff)?;
                    acc = acc.add(&self.eval(&term.op, vec)?.scale(&term.coeff));
                }
                Ok(acc)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarKind;

    #[test]
    fn identity_and_scalar_multiple() {
        let s = Session::new(2, 2, None).unwrap();
        let x = s.basis([3, -1]).add(&s.basis([1, 2]).scale(&s.v_pow(1)));
        assert_eq!(s.apply_expr(&OperatorExpr::Identity, &x).unwrap(), x);
        let op = OperatorExpr::lin_comb(vec![(s.v_pow(2), OperatorExpr::Identity)]);
        assert_eq!(s.apply_expr(&op, &x).unwrap(), x.scale(&s.v_pow(2)));
    }

    #[test]
    fn commutator_of_e_and_f_on_a_single_slot() {
        let s = Session::new(2, 1, None).unwrap();
        let minus_one = s.one().scale_int(-1);
        let op = OperatorExpr::lin_comb(vec![
            (s.one(), OperatorExpr::compose(vec![OperatorExpr::e(1), OperatorExpr::f(1)])),
            (minus_one, OperatorExpr::compose(vec![OperatorExpr::f(1), OperatorExpr::e(1)])),
        ]);
        let x = s.basis([1]);
        assert_eq!(s.apply_expr(&op, &x).unwrap(), x);
    }

    #[test]
    fn compose_orders_each_side() {
        let s = Session::new(3, 2, None).unwrap();
        let x = s.basis([1, 1]);
        // Quantum factors compose right to left; F_1 (F_2 x) would vanish here.
        let op = OperatorExpr::compose(vec![OperatorExpr::f(2), OperatorExpr::f(1)]);
        let direct = s.apply_f_gen(2, &s.apply_f_gen(1, &x).unwrap()).unwrap();
        assert_eq!(s.apply_expr(&op, &x).unwrap(), direct);
        // Hecke factors compose left to right.
        let y = s.basis([2, 1]);
        let op = OperatorExpr::compose(vec![OperatorExpr::t(1), OperatorExpr::x(1, -1)]);
        let direct = s.apply_x(1, -1, &s.apply_t(1, &y).unwrap()).unwrap();
        assert_eq!(s.apply_expr(&op, &y).unwrap(), direct);
    }

    #[test]
    fn rejects_mixed_and_foreign_scalars() {
        let s = Session::new(2, 2, Some(3)).unwrap();
        let x = s.basis([1, 2]);
        let mixed = OperatorExpr::compose(vec![OperatorExpr::lin_comb(vec![
            (s.one(), OperatorExpr::t(1)),
            (s.one(), OperatorExpr::e(1)),
        ])]);
        assert_eq!(s.apply_expr(&mixed, &x), Err(ActionError::MixedSides));
        let foreign = OperatorExpr::lin_comb(vec![(ScalarKind::Generic.one(), OperatorExpr::Identity)]);
        assert!(matches!(s.apply_expr(&foreign, &x), Err(ActionError::KindMismatch { .. })));
        let generic_vec = TensorVector::basis([1, 2], ScalarKind::Generic);
        assert!(s.apply_expr(&OperatorExpr::Identity, &generic_vec).is_err());
    }

    #[test]
    fn json_is_tagged_by_kind() {
        let op = OperatorExpr::compose(vec![
            OperatorExpr::t(1),
            OperatorExpr::z(2, ZSign::Minus),
            OperatorExpr::IdempotentE { n: 2, big_n: 3 },
        ]);
        let js = serde_json::to_string(&op).unwrap();
        assert_eq!(
            js,
            r#"{"kind":"Compose","factors":[{"kind":"HeckeT","k":1},{"kind":"Zgen","s":2,"sign":"minus"},{"kind":"IdempotentE","n":2,"N":3}]}"#
        );
        assert_eq!(serde_json::from_str::<OperatorExpr>(&js).unwrap(), op);
    }
}
