//! Error type shared by every fallible operation in the crate.

use core::fmt;

/// Errors reported by mean evaluation, bound checks and the verification
/// scans. All operations are total on their stated domains; these variants
/// mark domain violations and internal consistency failures, never rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A pair component was non-positive, NaN or infinite.
    InvalidPair { a: f64, b: f64 },
    /// The operation requires two distinct arguments.
    DegeneratePair,
    /// An argument fell outside the operation's domain (e.g. Ky Fan ratios
    /// need both arguments in (0, 1/2)).
    OutOfDomain { name: &'static str, value: f64 },
    /// A scalar parameter fell outside its stated range.
    ParamOutOfRange { name: &'static str, value: f64 },
    /// A cross-check between two independent routes to the same constant
    /// exceeded its tolerance. Indicates a broken build, not bad input.
    InternalInconsistency { what: &'static str, residual: f64 },
    /// A sampled value contradicted the claimed uniform sign.
    SignViolation { t: f64, value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPair { a, b } => {
                write!(f, "pair ({a}, {b}) must have positive finite components")
            }
            Error::DegeneratePair => write!(f, "arguments must be distinct"),
            Error::OutOfDomain { name, value } => {
                write!(f, "{name} = {value} is outside the operation's domain")
            }
            Error::ParamOutOfRange { name, value } => {
                write!(f, "parameter {name} = {value} is out of range")
            }
            Error::InternalInconsistency { what, residual } => {
                write!(f, "internal cross-check failed for {what}: residual {residual:e}")
            }
            Error::SignViolation { t, value } => {
                write!(f, "sign violation at t = {t}: value {value:e}")
            }
        }
    }
}

impl core::error::Error for Error {}
