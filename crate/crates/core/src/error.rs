use alloc::string::String;
use core::fmt;

/// Errors reported by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    ZeroPolynomial,
    /// `dlog` of zero, or a zero entry in a symbol.
    ZeroArgument,
    ZeroEntry,
    DegreeOverflow { degree: usize, max: usize },
    UnsupportedPrime(u32),
    UnsupportedVariables(usize),
    MismatchedParameters(&'static str),
    NotLocal(String),
    ZeroTheta,
    NotAutomorphism(String),
    OutOfSupportedRange(String),
    NotInNu,
    UnsupportedInstance(String),
    PreconditionFailed(String),
    /// A step that cannot fail for valid inputs did fail.
    InternalAssertionFailed(String),
    Parse { position: usize, message: String },
    Overflow,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::ZeroArgument => write!(f, "argument must be nonzero"),
            Error::ZeroEntry => write!(f, "symbol entry must be nonzero"),
            Error::DegreeOverflow { degree, max } => {
                write!(f, "form degree {degree} exceeds {max}")
            }
            Error::UnsupportedPrime(p) => write!(f, "unsupported prime {p} (need prime p <= 17)"),
            Error::UnsupportedVariables(m) => write!(f, "unsupported variable count {m} (need 1..=4)"),
            Error::MismatchedParameters(what) => write!(f, "mismatched parameters: {what}"),
            Error::NotLocal(why) => write!(f, "ring is not local: {why}"),
            Error::ZeroTheta => write!(f, "contracting homotopy needs theta != 0"),
            Error::NotAutomorphism(why) => write!(f, "not a supported automorphism: {why}"),
            Error::OutOfSupportedRange(why) => write!(f, "out of supported range: {why}"),
            Error::NotInNu => write!(f, "form is not in nu_n (Artin-Schreier class is nonzero)"),
            Error::UnsupportedInstance(why) => write!(f, "unsupported instance: {why}"),
            Error::PreconditionFailed(why) => write!(f, "precondition failed: {why}"),
            Error::InternalAssertionFailed(why) => write!(f, "internal assertion failed: {why}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::Overflow => write!(f, "integer overflow"),
        }
    }
}
