//! Exact coefficient arithmetic: `Z[t]`, `Q(t)` and triangular solves.

mod linalg;
mod tpoly;
mod trat;

pub use linalg::{
    invert_unitriangular, mat_mul, mat_vec, rank_at, triangular_solve_rational, unitriangular_solve,
};
pub use tpoly::TPoly;
pub use trat::TRat;
