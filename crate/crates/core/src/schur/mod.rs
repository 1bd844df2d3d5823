//! The ring of symmetric functions over `Z[t]`, worked in the Schur basis.

mod eval;
mod kostka;
mod pieri;
mod straighten;
mod symfunc;

pub use eval::{eval_in_vars, hook, hook_plethysm, scalar_product};
pub use kostka::{
    inverse_kostka, inverse_kostka_entry, inverse_kostka_restricted, kostka, kostka_matrix,
    kostka_matrix_restricted, to_monomial, to_schur, KostkaMatrix,
};
pub use pieri::{
    add_horizontal_strips, add_vertical_strips, h_product, integer_coeffs, jacobi_trudi, mul_e, mul_h,
    multiply, multiply_schur, perp, perp_e, perp_h, perp_s, pieri_e, pieri_h, remove_horizontal_strips,
    remove_vertical_strips, HTerm,
};
pub use straighten::{straighten, straighten_schur, Straightened};
pub use symfunc::{Basis, SymFunc};
