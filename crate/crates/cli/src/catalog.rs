//! The built-in example catalog: a handful of spaces whose second
//! lower-central quotients are known independently, used to pin the
//! formula against the presentation oracle and against frozen golden
//! values.

use crate::format::{parse_catalog_entry, CatalogEntryFile, FormatError};
use lcq_core::fano;
use lcq_core::lattice::AbelianGroup;
use lcq_core::nilpotent::{cross_validate, GroupPresentation};
use lcq_core::second_quotient::{second_lcs_quotient, SpaceData};
use rayon::prelude::*;
use std::fmt::Write as _;

pub struct CatalogEntry {
    pub name: String,
    pub space: SpaceData,
    pub presentation: Option<GroupPresentation>,
    pub expected: Option<AbelianGroup>,
}

impl CatalogEntry {
    fn from_file(file: CatalogEntryFile) -> Result<Self, FormatError> {
        let space = file.space.into_space()?;
        let presentation = file
            .presentation
            .map(|p| p.into_presentation())
            .transpose()?;
        let expected = file.expected.map(|g| g.into_group()).transpose()?;
        Ok(CatalogEntry {
            name: file.name,
            space,
            presentation,
            expected,
        })
    }
}

const ENTRY_SOURCES: [&str; 8] = [
    include_str!("../catalog/torus.json"),
    include_str!("../catalog/wedge_2.json"),
    include_str!("../catalog/wedge_3.json"),
    include_str!("../catalog/wedge_4.json"),
    include_str!("../catalog/surface_genus_1.json"),
    include_str!("../catalog/surface_genus_2.json"),
    include_str!("../catalog/surface_genus_3.json"),
    include_str!("../catalog/heisenberg.json"),
];

/// The data-driven entries, sorted by name. The Fano surface is not
/// among them: its input is a 45x45 derived matrix, so it runs off
/// the fano module's constants instead (see `run_catalog`).
pub fn builtin() -> Result<Vec<CatalogEntry>, FormatError> {
    let mut entries = ENTRY_SOURCES
        .iter()
        .map(|src| CatalogEntry::from_file(parse_catalog_entry(src)?))
        .collect::<Result<Vec<_>, _>>()?;
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(entries)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryOutcome {
    pub name: String,
    pub line: String,
    pub ok: bool,
}

pub fn run_entry(entry: &CatalogEntry) -> EntryOutcome {
    let mut ok = true;
    let mut line = String::new();
    match second_lcs_quotient(&entry.space) {
        Ok(result) => {
            let rendered = if result.group.is_trivial() {
                "trivial group".to_string()
            } else {
                result.group.to_string()
            };
            write!(line, "D/(D,G) = {rendered}, {}", result.exactness).unwrap();
            if let Some(p) = &entry.presentation {
                match cross_validate(&entry.space, p) {
                    Ok(true) => line.push_str("; presentation agrees"),
                    Ok(false) => {
                        ok = false;
                        line.push_str("; PRESENTATION DISAGREES");
                    }
                    Err(e) => {
                        ok = false;
                        write!(line, "; cross-validation impossible: {e}").unwrap();
                    }
                }
            }
            if let Some(expected) = &entry.expected {
                if &result.group == expected {
                    line.push_str("; matches golden value");
                } else {
                    ok = false;
                    write!(line, "; GOLDEN MISMATCH (expected {expected})").unwrap();
                }
            }
        }
        Err(e) => {
            ok = false;
            write!(line, "FAILED: {e}").unwrap();
        }
    }
    EntryOutcome {
        name: entry.name.clone(),
        line,
        ok,
    }
}

/// Constants-only entry for the Fano surface of a cubic threefold:
/// the 45x45 pairing matrix is built internally, never stored.
pub fn run_fano_entry() -> EntryOutcome {
    let name = "fano_surface".to_string();
    match fano::fano_second_quotient() {
        Ok(result) => {
            let ok = result.group == AbelianGroup::cyclic(2);
            let line = if ok {
                format!(
                    "D/(D,G) = {}, {}; det_f = {}",
                    result.group,
                    result.exactness,
                    fano::det_f()
                )
            } else {
                format!("GOLDEN MISMATCH: {}", result.group)
            };
            EntryOutcome { name, line, ok }
        }
        Err(e) => EntryOutcome {
            name,
            line: format!("FAILED: {e}"),
            ok: false,
        },
    }
}

/// Runs everything and returns outcomes sorted by name, so output is
/// identical whether or not the entries were processed in parallel.
pub fn run_catalog(parallel: bool) -> Result<Vec<EntryOutcome>, FormatError> {
    let entries = builtin()?;
    let mut outcomes: Vec<EntryOutcome> = if parallel {
        entries.par_iter().map(run_entry).collect()
    } else {
        entries.iter().map(run_entry).collect()
    };
    outcomes.push(run_fano_entry());
    outcomes.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(outcomes)
}
