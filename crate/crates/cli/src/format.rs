//! On-disk JSON schemas and their conversions into library types.
//!
//! One document per file. A space file carries exactly one of `mu`
//! (rows in the lexicographic pair order, one column per H_2
//! generator) or `cup` (its transpose); the other key is null. A
//! presentation file lists relators as words in signed 1-based
//! generator indices.

use lcq_core::lattice::{AbelianGroup, IntMatrix};
use lcq_core::nilpotent::GroupPresentation;
use lcq_core::second_quotient::SpaceData;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug)]
pub enum FormatError {
    /// serde_json failure, positioned.
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// Structurally valid JSON that violates the schema contract.
    Schema(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // serde_json already appends "at line L column C"
            FormatError::Syntax { message, .. } => write!(f, "{message}"),
            FormatError::Schema(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDataFile {
    pub name: String,
    pub h1_rank: usize,
    pub h1_torsion_free: bool,
    pub h2_rank: usize,
    #[serde(default)]
    pub mu: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub cup: Option<Vec<Vec<i64>>>,
}

/// Shape-checks a row-major integer array and builds the matrix.
/// `cols_if_empty` settles the width of a zero-row array, which the
/// nesting alone cannot express.
fn matrix_from_rows(
    rows: &[Vec<i64>],
    cols_if_empty: usize,
    what: &str,
) -> Result<IntMatrix, FormatError> {
    let cols = rows.first().map_or(cols_if_empty, Vec::len);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return Err(FormatError::Schema(format!(
                "{what}: row {i} has {} entries, expected {cols}",
                r.len()
            )));
        }
    }
    Ok(IntMatrix::from_fn(rows.len(), cols, |i, j| {
        BigInt::from(rows[i][j])
    }))
}

fn rows_from_matrix(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| i64::try_from(m.at(i, j)).expect("entry exceeds i64"))
                .collect()
        })
        .collect()
}

impl SpaceDataFile {
    pub fn into_space(self) -> Result<SpaceData, FormatError> {
        let alt2 = self.h1_rank * self.h1_rank.saturating_sub(1) / 2;
        let space = match (self.mu, self.cup) {
            (Some(mu), None) => {
                let m = matrix_from_rows(&mu, self.h2_rank, "mu")?;
                if m.rows() != alt2 {
                    return Err(FormatError::Schema(format!(
                        "mu: {} rows, but h1_rank {} demands {alt2}",
                        m.rows(),
                        self.h1_rank
                    )));
                }
                SpaceData::with_mu(
                    self.name,
                    self.h1_rank,
                    self.h1_torsion_free,
                    self.h2_rank,
                    m,
                )
            }
            (None, Some(cup)) => {
                let m = matrix_from_rows(&cup, alt2, "cup")?;
                if m.rows() != self.h2_rank {
                    return Err(FormatError::Schema(format!(
                        "cup: {} rows, but h2_rank is {}",
                        m.rows(),
                        self.h2_rank
                    )));
                }
                SpaceData::with_cup(
                    self.name,
                    self.h1_rank,
                    self.h1_torsion_free,
                    self.h2_rank,
                    m,
                )
            }
            (Some(_), Some(_)) => {
                return Err(FormatError::Schema(
                    "exactly one of mu/cup must be non-null, found both".into(),
                ))
            }
            (None, None) => {
                return Err(FormatError::Schema(
                    "exactly one of mu/cup must be non-null, found neither".into(),
                ))
            }
        };
        space
            .validate()
            .map_err(|e| FormatError::Schema(e.to_string()))?;
        Ok(space)
    }

    pub fn from_space(space: &SpaceData) -> Self {
        let (mu, cup) = match &space.pairing {
            lcq_core::second_quotient::PairingData::Mu(m) => (Some(rows_from_matrix(m)), None),
            lcq_core::second_quotient::PairingData::Cup(c) => (None, Some(rows_from_matrix(c))),
        };
        SpaceDataFile {
            name: space.name.clone(),
            h1_rank: space.h1_rank,
            h1_torsion_free: space.h1_torsion_free,
            h2_rank: space.h2_rank,
            mu,
            cup,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupPresentationFile {
    pub generators: usize,
    pub relators: Vec<Vec<i64>>,
}

impl GroupPresentationFile {
    pub fn into_presentation(self) -> Result<GroupPresentation, FormatError> {
        GroupPresentation::new(self.generators, self.relators)
            .map_err(|e| FormatError::Schema(e.to_string()))
    }

    pub fn from_presentation(p: &GroupPresentation) -> Self {
        GroupPresentationFile {
            generators: p.generators(),
            relators: p.relators().to_vec(),
        }
    }
}

/// Golden value as stored in catalog files. `provenance` records how
/// the value was obtained before being frozen; it is display-only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianGroupFile {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    pub provenance: String,
}

impl AbelianGroupFile {
    pub fn into_group(self) -> Result<AbelianGroup, FormatError> {
        if self.torsion.iter().any(|&d| d < 2) {
            return Err(FormatError::Schema(
                "torsion coefficients must be at least 2".into(),
            ));
        }
        Ok(AbelianGroup::new(
            self.free_rank,
            self.torsion.into_iter().map(BigInt::from).collect(),
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntryFile {
    pub name: String,
    pub space: SpaceDataFile,
    #[serde(default)]
    pub presentation: Option<GroupPresentationFile>,
    #[serde(default)]
    pub expected: Option<AbelianGroupFile>,
}

pub fn parse_space(text: &str) -> Result<SpaceData, FormatError> {
    let file: SpaceDataFile = serde_json::from_str(text)?;
    file.into_space()
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation, FormatError> {
    let file: GroupPresentationFile = serde_json::from_str(text)?;
    file.into_presentation()
}

pub fn parse_catalog_entry(text: &str) -> Result<CatalogEntryFile, FormatError> {
    Ok(serde_json::from_str(text)?)
}
