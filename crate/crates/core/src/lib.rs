//! Exact-arithmetic verification toolkit for the mod-2 reduced Burau
//! representation of the 4-strand braid group.
//!
//! The crate evaluates braid words as 3x3 matrices over Z[t, t^-1],
//! F2[t, t^-1] and F2(t), certifies kernel membership linearly and
//! projectively, enumerates the finite stabilizer subgroups of the
//! projective image and checks their presented structure, and verifies the
//! conjugating-matrix identities behind the stable-letter construction.
//! Everything is exact: no floating point, no probabilistic checks.

pub mod burau;
pub mod checks;
pub mod cli;
pub mod conjugation;
pub mod error;
pub mod groups;
pub mod matrix;
pub mod ring;
pub mod words;

pub use error::{Error, Result};
