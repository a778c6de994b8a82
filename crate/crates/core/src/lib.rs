//! Exact computer algebra for finite-dimensional Hopf algebras and their
//! coactions: Hopf images, inner-faithfulness, Hopf–Galois and quantum
//! principal bundle checks, and the Hopf-image reduction of bundles.
//!
//! Everything is exact (ℚ or 𝔽_p) and deterministic. The crate is `no_std`
//! and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod catalog;
pub mod coaction;
mod error;
pub mod hopf;
pub mod linalg;
pub mod reduction;

pub use error::Error;
