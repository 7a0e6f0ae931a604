//! Exact computer algebra for the ideals generated by the Pfaffians of a
//! generic alternating matrix `X` together with the entries of `tX` for a
//! generic row vector `t`: exterior-algebra identities, the associated
//! complexes, Gröbner bases, free resolutions and a verification harness.

pub mod betti;
pub mod cancel;
pub mod constructions;
pub mod error;
pub mod exterior;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
