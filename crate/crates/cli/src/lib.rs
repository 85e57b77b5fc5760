//! Command-line companion to `lcq-core`: JSON input formats, the
//! built-in example catalog, and reduced-count selftest suites. The
//! binary in this package is a thin shell over these modules.

pub mod catalog;
pub mod format;
pub mod selftest;
