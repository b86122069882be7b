//! Lattice-geometry and stabilizer-group machinery for studying how
//! entanglement in the toric-code ground state scales with the shape of a
//! bipartition boundary.
//!
//! The crate is split into five areas:
//!
//! * [`region`] — finite cell regions of the square lattice, boundary
//!   extraction and the feature counts (perimeter, inward angles, unit
//!   holes, adjacent squares) that determine the entanglement entropy.
//! * [`lsystem`] — Lindenmayer rewriting, turtle interpretation of words as
//!   lattice paths, and rasterization of closed paths into regions.
//! * [`families`] — the eight region families studied here, each with its
//!   generator and exact closed-form predictors.
//! * [`gf2`] / [`toric`] — exact GF(2) linear algebra and the toric-code
//!   stabilizer oracle: group ranks, dense statevector entropy, and the
//!   weighted group-state entropy formula.
//! * [`scaling`] — entanglement-to-perimeter ratios, leading coefficients,
//!   box-counting dimension estimates and the gamma ≤ 1/D bound check.
//!
//! Everything is `no_std` + `alloc`; IO, file formats and the CLI live in
//! the companion `fractent-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod families;
pub mod gf2;
pub mod lsystem;
pub mod region;
pub mod scaling;
pub mod toric;

pub use region::{Cell, Edge, FeatureCounts, Region};
