//! Exact computations in Deligne's interpolation category Rep(S_t) and in the
//! representation theory of the symmetric groups.

pub mod characters;
pub mod combinatorics;
pub mod diagram_cat;
pub mod error;
pub mod exact_arith;
pub mod interp;
pub mod superlinear;

pub use error::{Error, Result};
