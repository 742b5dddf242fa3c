//! Differential forms over `k = F_p(t_1..t_m)` in the dlog basis.
//!
//! `Omega^n_k` has the k-basis `omega_s = dlog t_{s(1)} ^ ... ^ dlog t_{s(n)}`
//! and, over `k^p`, the basis `b_theta omega_s`. On the theta component the
//! exterior derivative is `lambda_theta ^ -`, which is exact for
//! `theta != 0`; the contracting homotopy gives a canonical representative
//! of each class modulo exact forms.

mod bounded;
mod endo;
mod field;
mod form;
mod graded;
pub(crate) mod linalg;
mod tuple;

pub use bounded::{nu_basis_bounded, solve_artin_schreier_bounded, TruncationSpec};
pub use endo::apply_endomorphism;
pub use field::PBaseField;
pub use form::{dlog, DiffForm};
pub use graded::{
    artin_schreier_class, contracting_homotopy, lambda_theta, lt_s_membership, normal_form_mod_exact,
    normal_form_with_witness, nu_membership, theta_split, ThetaComponent,
};
pub use tuple::IndexTuple;
