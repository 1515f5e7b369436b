//! Error type shared by every module of the crate.

use alloc::string::String;
use core::fmt;

/// All failure modes of the library.
///
/// Operations are pure; an error always means the *input* was outside the
/// documented domain, except for [`Error::NegativeCoefficient`] and
/// [`Error::NonIntegralCoefficient`], which signal that an internal
/// cross-check contradicted the underlying combinatorics and the result
/// cannot be trusted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A flag shape was not a strictly increasing sequence inside (0, n).
    InvalidFlagShape(String),
    /// `lambda_k` was called with k outside the valid range for the family.
    InvalidIsotropicShape(String),
    /// A one-line sequence was not a permutation, or had a descent outside
    /// the allowed positions.
    InvalidPermutation(String),
    /// A code vector violated the descent-set characterisation.
    CodeNotInClass(String),
    /// A word did not use letter i exactly r_i times.
    InvalidWord(String),
    /// A signed one-line sequence was not in the expected normal form,
    /// or violated the evenness/type constraints of its family.
    InvalidSignedPermutation(String),
    /// An exhaustive enumeration was requested beyond the configured bound.
    EnumerationBound { requested: usize, bound: usize },
    /// A diagram failed validation (not a tuple of contained partitions, or
    /// the hook/support conditions reject it).
    InvalidDiagram(String),
    /// A skew labelling handed to the rectification engine was not a linear
    /// extension of its shape.
    InvalidSkewLabelling(String),
    /// Peeling a polynomial produced a negative leading coefficient: the
    /// input was not a nonnegative combination of basis elements.
    NegativeCoefficient(String),
    /// A Pieri degree p lay outside the valid range for the space.
    PieriDegreeOutOfRange { p: u32, max: u32 },
    /// The primed Pieri class only exists in degree n−2.
    PrimedPieriDegree { p: u32, expected: u32 },
    /// Arrow-relation bookkeeping was requested for a pair that is not
    /// related.
    NotArrowRelated(String),
    /// A strict-partition constraint failed during an index translation.
    StrictnessViolation(String),
    /// A coefficient that must be an integer came out as a half-integer;
    /// an internal half-integer survived to a public boundary.
    NonIntegralCoefficient(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidFlagShape(s) => write!(f, "invalid flag shape: {s}"),
            Error::InvalidIsotropicShape(s) => write!(f, "invalid isotropic shape: {s}"),
            Error::InvalidPermutation(s) => write!(f, "invalid permutation: {s}"),
            Error::CodeNotInClass(s) => write!(f, "code outside its class: {s}"),
            Error::InvalidWord(s) => write!(f, "invalid word: {s}"),
            Error::InvalidSignedPermutation(s) => {
                write!(f, "invalid signed permutation: {s}")
            }
            Error::EnumerationBound { requested, bound } => write!(
                f,
                "enumeration bound exceeded: n={requested} > bound {bound} (raise the bound explicitly to proceed)"
            ),
            Error::InvalidDiagram(s) => write!(f, "invalid diagram: {s}"),
            Error::InvalidSkewLabelling(s) => write!(f, "invalid skew labelling: {s}"),
            Error::NegativeCoefficient(s) => write!(f, "negative coefficient while peeling: {s}"),
            Error::PieriDegreeOutOfRange { p, max } => {
                write!(f, "Pieri degree p={p} out of range [1,{max}]")
            }
            Error::PrimedPieriDegree { p, expected } => write!(
                f,
                "primed Pieri class requested in degree {p}, but only degree {expected} exists"
            ),
            Error::NotArrowRelated(s) => write!(f, "shapes are not arrow-related: {s}"),
            Error::StrictnessViolation(s) => write!(f, "strictness violation: {s}"),
            Error::NonIntegralCoefficient(s) => {
                write!(f, "internal half-integer surviving to output: {s}")
            }
        }
    }
}

impl core::error::Error for Error {}
