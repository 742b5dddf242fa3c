//! Exact computational algebra for differential forms in characteristic `p`.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`arith`]: prime fields, sparse multivariate polynomials, rational
//!   functions over `F_p(t_1..t_m)` and univariate factorization.
//! * [`presentation`]: integer Smith normal form, finitely presented abelian
//!   groups, and the symbolic/standard presentations of `Omega^n` of finite
//!   local rings.
//! * [`forms`]: differential forms in the `dlog` basis, the exterior
//!   derivative, the theta grading, normal forms modulo exact forms, the
//!   inverse Cartier operator and the Artin-Schreier class map.
//! * [`witt`]: truncated Witt vectors over `F_q` and the presented symbol
//!   groups over finite fields.
//! * [`milnor`]: the differential symbol, the constructive inverse of `dlog`
//!   in degree one and the surjectivity decomposition at `p = 2`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod error;
pub mod forms;
pub mod milnor;
pub mod presentation;
pub mod witt;

pub use error::{Error, Result};
