//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

/// Everything that can go wrong in this crate.
///
/// Variants split into input problems (bad dimensions, out-of-range
/// generator indices, missing data) and internal consistency failures
/// that indicate the computed invariants contradict each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A determinant was requested for a non-square matrix.
    NonSquare { rows: usize, cols: usize },
    /// Two exterior elements live over different ambient ranks.
    AmbientMismatch { left: usize, right: usize },
    /// Degrees do not add up to the ambient rank, so no top-form
    /// coefficient exists.
    DegreeMismatch {
        left: usize,
        right: usize,
        ambient: usize,
    },
    /// Two class-2 elements have different generator counts.
    GeneratorArity { left: usize, right: usize },
    /// A word letter references a generator outside `1..=generators`.
    WordIndex { index: i64, generators: usize },
    /// `mu_from_cup` was asked for a space that carries `mu` directly.
    CupMatrixAbsent,
    /// Space data violates a dimension constraint; the message names
    /// the violated constraint.
    SpaceDimensions(String),
    /// Cross-validation refused: with torsion in first homology the
    /// homological formula only bounds the quotient up to a finite
    /// kernel, so an exact comparison would be meaningless.
    TorsionNotComparable,
    /// The Fano determinant came out different from the value the rest
    /// of the derivation is pinned to.
    InconsistentDiscriminant { found: BigInt },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare { rows, cols } => {
                write!(
                    f,
                    "matrix is {rows}x{cols}, determinant needs a square matrix"
                )
            }
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient rank mismatch: {left} vs {right}")
            }
            Error::DegreeMismatch {
                left,
                right,
                ambient,
            } => write!(
                f,
                "degrees {left} + {right} do not sum to the ambient rank {ambient}"
            ),
            Error::GeneratorArity { left, right } => {
                write!(f, "generator count mismatch: {left} vs {right}")
            }
            Error::WordIndex { index, generators } => write!(
                f,
                "word letter {index} is outside the generator range 1..={generators}"
            ),
            Error::CupMatrixAbsent => {
                write!(f, "space carries mu directly, no cup matrix to transpose")
            }
            Error::SpaceDimensions(msg) => write!(f, "inconsistent space data: {msg}"),
            Error::TorsionNotComparable => write!(
                f,
                "first homology has torsion: the cokernel formula only determines \
                 the quotient up to a finite kernel, refusing exact comparison"
            ),
            Error::InconsistentDiscriminant { found } => write!(
                f,
                "Fano discriminant check failed: |det f| = {found}, expected 4"
            ),
        }
    }
}

impl core::error::Error for Error {}
