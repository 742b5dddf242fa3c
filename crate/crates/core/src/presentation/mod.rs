//! Finitely presented abelian groups and the module of differentials of
//! finite local rings.
//!
//! `Omega^1_A` is computed twice: from the symbol presentation by `a (x) b`
//! (`a` in `A`, `b` a unit) modulo the subgroup generated by
//! `sum [a_i, a_i] - sum [b_i, b_i]` with equal sums, and from the standard
//! Kähler presentation by `x db`. The two must agree.

mod group;
mod omega;
mod ring;
mod snf;

pub use group::{group_from_presentation, FinAbGroup, GroupPresentation};
pub use omega::{
    omega1_standard, omega1_standard_presentation, omega1_symbolic, omega_n_symbolic,
    omega_n_symbolic_presentation, DEFAULT_K_MAX,
};
pub use ring::{FiniteLocalRing, RingFamily};
pub use snf::{invariant_diagonal, smith_normal_form, IntMatrix, SmithForm};
