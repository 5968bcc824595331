//! Left action of the quantum loop algebra generators on the tensor space,
//! through the iterated coproduct.

use super::{ActionError, Composition, IndexTuple, Session, TensorVector};
use crate::qcomb::qbinom;

impl Session {
    fn check_ef_index(&self, i: usize) -> Result<(), ActionError> {
        let hi = if self.affine_node { self.n } else { self.n - 1 };
        self.check_range("E/F generator", i as i64, 1, hi as i64)
    }

    fn check_k_index(&self, i: usize) -> Result<(), ActionError> {
        self.check_range("k generator", i as i64, 1, self.n as i64)
    }

    /// Exponent of `k~_i = k_i k_{i+1}^-1` on the given slots.
    fn k_tilde_exponent(&self, i: usize, entries: &[i64]) -> i64 {
        let (lo, hi) = (self.residue(i as i64), self.residue(i as i64 + 1));
        entries
            .iter()
            .map(|&j| {
                let res = self.residue(j);
                (res == lo) as i64 - (res == hi) as i64
            })
            .sum()
    }

    /// `E_i . vec` with `Delta(E_i) = E_i (x) k~_i + 1 (x) E_i`: a slot with
    /// residue `i+1` is lowered by one, weighted by `k~_i` on the later slots.
    pub fn apply_e_gen(&self, i: usize, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_ef_index(i)?;
        self.check_vector(vec)?;
        let target = self.residue(i as i64 + 1);
        Ok(vec.linear_map(|idx, emit| {
            let e = idx.entries();
            for t in 1..=e.len() {
                if self.residue(e[t - 1]) == target {
                    let c = self.k_tilde_exponent(i, &e[t..]);
                    emit(idx.with_slot(t, e[t - 1] - 1), self.v_pow(c));
                }
            }
        }))
    }

    /// `F_i . vec` with `Delta(F_i) = F_i (x) 1 + k~_i^-1 (x) F_i`: a slot with
    /// residue `i` is raised by one, weighted by `k~_i^-1` on the earlier slots.
    pub fn apply_f_gen(&self, i: usize, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_ef_index(i)?;
        self.check_vector(vec)?;
        let target = self.residue(i as i64);
        Ok(vec.linear_map(|idx, emit| {
            let e = idx.entries();
            for t in 1..=e.len() {
                if self.residue(e[t - 1]) == target {
                    let c = self.k_tilde_exponent(i, &e[..t - 1]);
                    emit(idx.with_slot(t, e[t - 1] + 1), self.v_pow(-c));
                }
            }
        }))
    }

    /// `k_i^exponent . vec`: diagonal with eigenvalue `v^(exponent * lambda_i)`.
    pub fn apply_k(&self, i: usize, exponent: i64, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_k_index(i)?;
        self.check_vector(vec)?;
        Ok(vec.diagonal_map(|idx| self.v_pow(exponent * self.weight_of(idx).part(i) as i64)))
    }

    /// `[k_i; 0 over t] . vec`: diagonal with eigenvalue `[lambda_i over t]`.
    pub fn apply_k_binom(&self, i: usize, t: u32, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_k_index(i)?;
        self.check_vector(vec)?;
        Ok(vec.diagonal_map(|idx| self.scalar(&qbinom(self.weight_of(idx).part(i) as i64, t))))
    }

    /// `z_s^+` (`positive`) or `z_s^-`: the sum over slots of a shift by `-s n`
    /// (resp. `+s n`).
    pub fn apply_z(&self, s: u32, positive: bool, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_range("z degree", s as i64, 1, i64::MAX)?;
        self.check_vector(vec)?;
        let step = s as i64 * self.n as i64;
        let delta = if positive { -step } else { step };
        Ok(vec.linear_map(|idx, emit| {
            for t in 1..=idx.len() {
                emit(idx.with_slot(t, idx.slot(t) + delta), self.one());
            }
        }))
    }

    /// The weight idempotent `1_lambda`: keeps the terms of weight `lambda`.
    pub fn project_weight(&self, lam: &Composition, vec: &TensorVector) -> Result<TensorVector, ActionError> {
        self.check_composition(lam)?;
        self.check_vector(vec)?;
        Ok(vec.filter(|idx: &IndexTuple| &self.weight_of(idx) == lam))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn generic(n: usize, r: usize) -> Session {
        Session::new(n, r, None).unwrap()
    }

    fn lin(s: &Session, parts: &[(&[i64], Scalar)]) -> TensorVector {
        TensorVector::from_terms(s.r(), parts.iter().map(|(i, c)| (IndexTuple::new(i.to_vec()), c.clone())))
            .unwrap()
    }

    #[test]
    fn e_examples() {
        let s = generic(2, 2);
        assert_eq!(
            s.apply_e_gen(1, &s.basis([2, 2])).unwrap(),
            lin(&s, &[(&[1, 2], s.v_pow(-1)), (&[2, 1], s.one())])
        );
        assert!(s.apply_e_gen(1, &s.basis([1, 1])).unwrap().is_zero());
        let s1 = generic(2, 1);
        assert_eq!(s1.apply_e_gen(1, &s1.basis([2])).unwrap(), s1.basis([1]));
        assert!(s.apply_e_gen(2, &s.basis([1, 1])).is_err());
    }

    #[test]
    fn f_examples() {
        let s1 = generic(2, 1);
        assert_eq!(s1.apply_f_gen(1, &s1.basis([1])).unwrap(), s1.basis([2]));
        let s = generic(2, 2);
        assert!(s.apply_f_gen(1, &s.basis([2, 2])).unwrap().is_zero());
        assert_eq!(
            s.apply_f_gen(1, &s.basis([1, 1])).unwrap(),
            lin(&s, &[(&[2, 1], s.one()), (&[1, 2], s.v_pow(-1))])
        );
    }

    #[test]
    fn no_ef_generators_when_n_is_one() {
        let s = generic(1, 2);
        assert!(s.apply_e_gen(1, &s.basis([1, 1])).is_err());
        let affine = generic(1, 2).with_affine_node(true);
        assert!(affine.apply_e_gen(1, &affine.basis([1, 1])).is_ok());
    }

    #[test]
    fn k_examples() {
        let s = generic(2, 2);
        assert_eq!(s.apply_k(1, 1, &s.basis([1, 1])).unwrap(), s.basis([1, 1]).scale(&s.v_pow(2)));
        assert_eq!(s.apply_k(2, 1, &s.basis([1, 1])).unwrap(), s.basis([1, 1]));
        assert_eq!(s.apply_k(1, -1, &s.basis([1, 2])).unwrap(), s.basis([1, 2]).scale(&s.v_pow(-1)));
        assert!(s.apply_k(3, 1, &s.basis([1, 2])).is_err());
    }

    #[test]
    fn k_binom_examples() {
        let s = generic(2, 2);
        let x = s.basis([1, 1]);
        assert_eq!(s.apply_k_binom(1, 0, &x).unwrap(), x);
        assert_eq!(s.apply_k_binom(1, 2, &x).unwrap(), x);
        assert!(s.apply_k_binom(1, 3, &x).unwrap().is_zero());
    }

    #[test]
    fn z_examples() {
        let s1 = generic(2, 1);
        assert_eq!(s1.apply_z(1, true, &s1.basis([1])).unwrap(), s1.basis([-1]));
        assert_eq!(s1.apply_z(2, true, &s1.basis([5])).unwrap(), s1.basis([1]));
        let s = generic(2, 2);
        assert_eq!(
            s.apply_z(1, false, &s.basis([1, 2])).unwrap(),
            lin(&s, &[(&[3, 2], s.one()), (&[1, 4], s.one())])
        );
        assert!(s.apply_z(0, true, &s.basis([1, 2])).is_err());
    }

    #[test]
    fn projection_examples() {
        let s = generic(2, 2);
        let lam = Composition::new(vec![2, 0]);
        assert_eq!(s.project_weight(&lam, &s.basis([1, 1])).unwrap(), s.basis([1, 1]));
        assert!(s.project_weight(&lam, &s.basis([1, 2])).unwrap().is_zero());
        assert!(s.project_weight(&Composition::new(vec![1, 0]), &s.basis([1, 2])).is_err());
    }
}
