//! Witt vectors of finite length over `F_p` and `F_{p^2}`, and the symbol
//! groups `H^n(F_q, Z/p^i(n-1))` computed from their finite presentation.

mod gfq;
mod hsym;
mod poly;
mod vector;

pub use gfq::FiniteField;
pub use hsym::{artin_schreier_witt_cokernel, hsym_group, hsym_presentation};
pub use poly::WittPolynomials;
pub use vector::{WittRing, WittVector};
