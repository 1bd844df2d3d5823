//! Exact symmetric-function algebra over `Z[t]`: Hall–Littlewood vertex
//! operators, k-split polynomials and k-Schur functions.

pub mod arith;
pub mod cli;
pub mod error;
pub mod kspace;
pub mod partition;
pub mod schur;
pub mod verify;
pub mod vertex;

pub use arith::{TPoly, TRat};
pub use error::{Error, Result};
pub use partition::{IntVector, KSplit, Partition};
pub use schur::{Basis, SymFunc};
