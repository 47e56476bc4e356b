use alloc::string::String;
use core::fmt;

/// Failures surfaced by the algebra routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Inputs live in different rings or free modules.
    MixedAmbient,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    EmptyInput,
    BadParams(String),
    /// The bracket of generators `i` and `j` (0-based) leaves the module.
    NotInvolutive {
        i: usize,
        j: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    WrongLength {
        expected: usize,
        found: usize,
    },
    NotInjective,
    LiftFailed,
    NotVanishingAtOrigin {
        generator: usize,
    },
    InternalDivisionFailure,
    TruncatedResolution,
    BadPhi,
    ArityUnavailable {
        requested: usize,
        available: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixedAmbient => f.write_str("inputs disagree on variables or module rank"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {}, found {}", expected, found)
            }
            Error::EmptyInput => f.write_str("empty generator list"),
            Error::BadParams(msg) => write!(f, "bad parameters: {}", msg),
            Error::NotInvolutive { i, j } => {
                write!(f, "bracket of generators {} and {} is not in the module", i + 1, j + 1)
            }
            Error::IndexOutOfRange { index, len } => write!(f, "index {} out of range (length {})", index, len),
            Error::WrongLength { expected, found } => {
                write!(f, "resolution has length {}, expected {}", found, expected)
            }
            Error::NotInjective => f.write_str("second differential has nonzero syzygies"),
            Error::LiftFailed => f.write_str("section does not lift through the differential"),
            Error::NotVanishingAtOrigin { generator } => {
                write!(f, "generator {} does not vanish at the origin", generator + 1)
            }
            Error::InternalDivisionFailure => f.write_str("internal error: inexact division"),
            Error::TruncatedResolution => f.write_str("resolution was truncated"),
            Error::BadPhi => f.write_str("phi must be a nonconstant polynomial"),
            Error::ArityUnavailable { requested, available } => {
                write!(f, "bracket arity {} unavailable (maximum {})", requested, available)
            }
        }
    }
}

impl core::error::Error for Error {}
