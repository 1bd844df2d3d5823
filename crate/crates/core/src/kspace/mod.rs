//! The subspace spanned by `H_λ` with `λ_1 ≤ k`: k-split polynomials,
//! the projections `T_j^(k)`, k-Schur functions and their reduction to
//! k-irreducible indices.

mod gbasis;
mod kschur;

pub use gbasis::{
    expand_in_g, g_poly, g_table, g_to_schur, lambda_ak_membership, omega_support, project_t, GBasisTable,
    GExpansion,
};
pub use kschur::{
    k_schur, k_schur_table, kschur_to_schur, quotient_normal_form, reconstruct, rectangle_exponent,
    reduce_to_irreducible, reduce_with_order, KSchurTable, Reduction,
};
