//! Tripartite GHZ entanglement shared between one inertial and two uniformly
//! accelerated observers, degraded by phase damping and phase flip noise.
//!
//! The crate has two independent routes to the same numbers:
//!
//! * a density-matrix pipeline ([`rindler`] → [`channels`] → [`tangles`]) that
//!   builds the traced Rindler state, pushes it through a lifted Kraus channel
//!   and measures negativities from partial-transpose spectra;
//! * literal analytic tangle expressions ([`closedform`]).
//!
//! [`analysis`] sweeps both over `(r, p)` grids, locates entanglement sudden
//! death and rebirth, and reports where the two routes disagree.

pub mod analysis;
pub mod channels;
pub mod closedform;
mod error;
pub mod matcore;
pub mod output;
pub mod rindler;
pub mod tangles;

pub use error::{Error, Result};
