//! Exact arithmetic over `F_p` and the function field `F_p(t_1..t_m)`.

mod factor;
mod fp;
mod monomial;
mod parse;
mod poly;
mod ratfunc;
mod theta;
mod unipoly;

pub use factor::{factor_univariate, monic_irreducibles};
pub use fp::PrimeField;
pub use monomial::{Monomial, MAX_VARS};
pub use parse::{default_names, format_poly, parse_ratfunc};
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
pub use theta::{pth_root, theta_components, theta_decompose, theta_recombine, ThetaIndex};
pub use unipoly::UniPoly;

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 17;

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
