//! Error type shared by all modules.

use core::fmt;

/// Errors surfaced by series arithmetic, class predicates and verifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inversion requires the constant term (all exponents zero) to be +1 or -1.
    NonUnitConstantTerm,
    /// An operation that produces infinitely many terms was called without the
    /// cap that would make it finite.
    MissingCap,
    /// A coefficient was requested outside the region the truncation policy
    /// guarantees to be exact.
    OutsideTruncation,
    /// The partition is not a member of the class the operation expects.
    NotInClass,
    /// Constructive basal decomposition broke down; on valid class members
    /// this signals an implementation or theorem-hypothesis breach.
    DecompositionFailed,
    /// Sequence lengths or matrix dimensions do not line up.
    ShapeMismatch,
    /// The Lucas-recursion theorem requires every nonzero gap threshold to be 1.
    HypothesisViolated,
    /// No single monomial factor reconciles the quiver quotient with the
    /// Schroder series.
    InconsistentFactor,
    /// Partition parts must be positive and the sequence nonempty.
    InvalidPartition,
    /// Class data violates its invariants (residues, lengths, symmetry).
    InvalidClass,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitConstantTerm => write!(f, "constant term is not +1 or -1"),
            Error::MissingCap => write!(f, "operation needs a truncation cap to stay finite"),
            Error::OutsideTruncation => write!(f, "monomial lies outside the truncation caps"),
            Error::NotInClass => write!(f, "partition is not a member of the class"),
            Error::DecompositionFailed => write!(f, "basal decomposition failed"),
            Error::ShapeMismatch => write!(f, "sequence or matrix shapes do not match"),
            Error::HypothesisViolated => write!(f, "all nonzero gap thresholds must equal 1"),
            Error::InconsistentFactor => {
                write!(f, "no single monomial factor reconciles the two series")
            }
            Error::InvalidPartition => write!(f, "partition parts must be positive and nonempty"),
            Error::InvalidClass => write!(f, "class specification violates its invariants"),
        }
    }
}

impl core::error::Error for Error {}

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
