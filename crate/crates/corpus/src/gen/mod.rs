//! Generators for the large derived objects.

pub mod misc;
pub mod orbits;
pub mod s4;
