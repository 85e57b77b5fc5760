//! The homological route to `D/(D,G)`.
//!
//! For a connected space with finitely generated homology, the second
//! lower-central quotient of the fundamental group is computed by the
//! cokernel of the map `mu` from second homology into the alternating
//! square of first cohomology. `mu` is, rationally, the transpose of
//! the cup-product map, so spaces may carry either matrix; rows and
//! columns of both are indexed by [`alt2_basis`](crate::exterior::alt2_basis)
//! on the `Lambda^2` side.
//!
//! The identification with `D/(D,G)` is exact when first homology is
//! torsion-free; with torsion the formula computes the target of a
//! surjection with finite kernel, and results carry that caveat as an
//! explicit flag.

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::error::Error;
use crate::lattice::{AbelianGroup, IntMatrix};

/// Homological description of a space, as far as this computation
/// needs one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpaceData {
    pub name: String,
    /// Rank of the free part of first homology.
    pub h1_rank: usize,
    pub h1_torsion_free: bool,
    pub h2_rank: usize,
    pub pairing: PairingData,
}

/// The one matrix a space carries: either `mu` itself, mapping
/// `Z^h2_rank` into alternating-square coordinates (so it has
/// `C(h1_rank, 2)` rows), or the cup-product matrix going the other
/// way (its transpose).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairingData {
    Mu(IntMatrix),
    Cup(IntMatrix),
}

/// Whether the computed group is exactly `D/(D,G)` or only the target
/// of a finite-kernel surjection from it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Exactness {
    Exact,
    UpToFiniteKernel,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => write!(f, "exact"),
            Exactness::UpToFiniteKernel => write!(f, "up to finite kernel"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecondQuotientResult {
    pub group: AbelianGroup,
    pub exactness: Exactness,
}

impl SpaceData {
    pub fn with_mu(
        name: impl Into<String>,
        h1_rank: usize,
        h1_torsion_free: bool,
        h2_rank: usize,
        mu: IntMatrix,
    ) -> Self {
        SpaceData {
            name: name.into(),
            h1_rank,
            h1_torsion_free,
            h2_rank,
            pairing: PairingData::Mu(mu),
        }
    }

    pub fn with_cup(
        name: impl Into<String>,
        h1_rank: usize,
        h1_torsion_free: bool,
        h2_rank: usize,
        cup: IntMatrix,
    ) -> Self {
        SpaceData {
            name: name.into(),
            h1_rank,
            h1_torsion_free,
            h2_rank,
            pairing: PairingData::Cup(cup),
        }
    }

    /// Checks the stored matrix against the declared ranks.
    pub fn validate(&self) -> Result<(), Error> {
        let alt2 = self.h1_rank * self.h1_rank.saturating_sub(1) / 2;
        match &self.pairing {
            PairingData::Mu(m) => {
                if m.rows() != alt2 || m.cols() != self.h2_rank {
                    return Err(Error::SpaceDimensions(format!(
                        "mu must be C(h1_rank, 2) x h2_rank = {alt2} x {}, found {} x {}",
                        self.h2_rank,
                        m.rows(),
                        m.cols()
                    )));
                }
            }
            PairingData::Cup(c) => {
                if c.rows() != self.h2_rank || c.cols() != alt2 {
                    return Err(Error::SpaceDimensions(format!(
                        "cup must be h2_rank x C(h1_rank, 2) = {} x {alt2}, found {} x {}",
                        self.h2_rank,
                        c.rows(),
                        c.cols()
                    )));
                }
            }
        }
        Ok(())
    }

    /// The `mu` matrix, transposing the cup matrix when that is what
    /// the space carries.
    pub fn mu_matrix(&self) -> IntMatrix {
        match &self.pairing {
            PairingData::Mu(m) => m.clone(),
            PairingData::Cup(c) => c.transpose(),
        }
    }

    /// The cup matrix, transposing `mu` when needed.
    pub fn cup_matrix(&self) -> IntMatrix {
        match &self.pairing {
            PairingData::Mu(m) => m.transpose(),
            PairingData::Cup(c) => c.clone(),
        }
    }
}

/// `mu` obtained from a stored cup matrix by transposition. Errors if
/// the space carries `mu` directly; use
/// [`SpaceData::mu_matrix`] when either source is acceptable.
pub fn mu_from_cup(space: &SpaceData) -> Result<IntMatrix, Error> {
    match &space.pairing {
        PairingData::Cup(c) => Ok(c.transpose()),
        PairingData::Mu(_) => Err(Error::CupMatrixAbsent),
    }
}

/// The second lower-central quotient, as the cokernel of `mu`.
pub fn second_lcs_quotient(space: &SpaceData) -> Result<SecondQuotientResult, Error> {
    space.validate()?;
    let group = space.mu_matrix().cokernel();
    let exactness = if space.h1_torsion_free {
        Exactness::Exact
    } else {
        Exactness::UpToFiniteKernel
    };
    Ok(SecondQuotientResult { group, exactness })
}

/// Rank of the rational quotient: `C(h1_rank, 2) - rank(mu)`.
pub fn rational_rank(space: &SpaceData) -> usize {
    let alt2 = space.h1_rank * space.h1_rank.saturating_sub(1) / 2;
    alt2 - space.mu_matrix().rank()
}

/// Dimension of the kernel of the cup map; equals [`rational_rank`]
/// because the two matrices are transposes of each other.
pub fn ker_cup_dim(space: &SpaceData) -> usize {
    let cup = space.cup_matrix();
    cup.cols() - cup.rank()
}
