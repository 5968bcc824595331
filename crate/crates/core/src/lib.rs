//! Exact tensor-space machinery for affine quantum Schur algebras at roots
//! of unity.
//!
//! * [`scalar`]: rationals, Laurent polynomials in `v`, cyclotomic fields and
//!   the specialization `v -> eps`.
//! * [`qcomb`]: quantum integers and Gaussian binomials, generic and at `eps`.
//! * [`tensor`]: the bimodule `Omega^{(x) r}` with Hecke and quantum-group actions.
//! * [`schur`]: the truncation idempotent `e` and the retraction identifying
//!   `e S(N, r) e` with `S(n, r)` on tensor space.
//! * [`verify`]: seeded verification suites and their JSON reports.

pub mod qcomb;
pub mod scalar;
pub mod schur;
pub mod tensor;
pub mod verify;
