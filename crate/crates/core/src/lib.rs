//! Exact rational arithmetic for rational leaning boxes.
//!
//! The crate builds perfect rational leaning boxes (parallelepipeds with two
//! rectangular faces and one parallelogram face) from a two-parameter
//! family, verifies the identity systems behind the construction exactly,
//! and scans bounded heights for the cuboid configurations where two of the
//! three angles in `tan^2 a1 - tan^2 a = tan^2 psi` are Heron angles.

pub mod angles;
pub mod auxfn;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod leaningbox;
pub mod parallelogram;
pub mod report;
pub mod search;
pub mod suites;

pub use error::{Error, Result};
pub use exactnum::{QuadExt, Rational};
