//! Exact-integer tools for the second lower central quotient of a
//! fundamental group.
//!
//! For a space with torsion-free first homology, the quotient
//! `D/(D,G)` of the derived subgroup `D` by the next lower-central
//! step is determined by purely homological data: it is the cokernel
//! of the map `mu` from second homology into the alternating square of
//! first cohomology, the transpose of the cup product. This crate
//! computes that cokernel exactly over `Z`, cross-checks it against a
//! direct class-2 nilpotent-quotient computation from a group
//! presentation, and carries out the determinant computation that
//! settles the case of the Fano surface of lines on a smooth cubic
//! threefold, where the quotient is cyclic of order two.
//!
//! Everything is exact: matrices hold arbitrary-precision integers,
//! and all normal forms (Smith form, invariant factors, class-2
//! collection) are computed without floating point. The crate is
//! `no_std` and only needs an allocator.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod exterior;
pub mod fano;
pub mod lattice;
pub mod nilpotent;
pub mod second_quotient;

pub use error::Error;
pub use lattice::{AbelianGroup, IntMatrix, Snf};
pub use second_quotient::{Exactness, PairingData, SecondQuotientResult, SpaceData};
