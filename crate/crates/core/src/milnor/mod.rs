//! Milnor symbols mod `p` and the differential symbol
//! `d_k: K_n(k)/p -> nu_n(k)`, with constructive inverses: partial fractions
//! for `n = 1`, and for `p = 2` the inductive decomposition of a form in
//! `nu_n` into `dlog` wedges.

mod cartier;
mod kato;
mod symbol;

pub use cartier::dlog_inverse_n1;
pub use kato::{
    kato_decompose, lemma_c_pick, proposition_step, CPick, DecompositionResult, DecompositionStep,
    PropositionOutput, StepTrace,
};
pub use symbol::{d_k, verify_in_nu, MilnorSymbolSum};
