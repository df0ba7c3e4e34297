//! Positroids from Le-diagrams: planar networks and boundary measurement,
//! a bitmask matroid engine, transversality and paving recognition, and
//! exact enumeration of positroid counts.

pub mod bits;
pub mod cli;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod matroid;
pub mod network;
pub mod paving;
pub mod transversal;

pub use error::{Error, Result};
