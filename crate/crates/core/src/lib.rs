//! Exact DP-coloring (correspondence coloring) of loopless multigraphs.

pub mod bounds;
pub mod census;
pub mod cli;
pub mod cover;
pub mod discharging;
pub mod error;
pub mod io;
pub mod multigraph;
pub mod potential;
pub mod solver;

pub use error::{Error, Result};
