//! Executable forms of the product formula, the rectangle identities, the
//! Kostka lemmas and the inverse-Kostka and evaluation formulas, with
//! degree-bounded sweeps.

mod appendix;
mod eset;
mod identities;
mod kchecks;
mod lemmas;
mod opsum;
mod report;
mod sweep;
mod theorem;

pub use appendix::{
    appendix_instances, monomial_by_straightening, verify_kostka_complement, verify_kostka_shift,
    verify_monomial_straightening, verify_reciprocal_eval, AppendixCheck,
};
pub use eset::{distinct_permutations, e_vectors, ESet};
pub use identities::{
    rect_expansion, verify_identity_expansion, verify_identity_rect_commute, verify_identity_structured,
    RectTerm, Variant,
};
pub use kchecks::{
    verify_b_i_invariance, verify_irreducible_count, verify_omega_invariance, verify_omega_lemma,
    verify_preserve, verify_projection_commute, verify_rectangle_action, verify_rectangle_product,
    verify_reduction, verify_split_projection,
};
pub use lemmas::{
    general_lemma_sides, kostka_lemma_sides, verify_lemma_general, verify_lemma_kostka,
    verify_lemma_kostka_operators, KostkaLemma,
};
pub use opsum::{compare_sums, FormalSum, OpSum};
pub use report::{compare_on, test_set, VerifyReport, Witness};
pub use sweep::{
    sweep, theorem1_instances, SweepResult, Tally, EVAL_POINTS, OPERATOR_TEST_DEGREE, PRODUCT_TEST_DEGREE,
    SUITES,
};
pub use theorem::{
    bounded_partitions, complement_of_conjugate, constant_vector, shifted, theorem1_full_sides,
    theorem1_sides, verify_corollary, verify_corollary_full, verify_theorem1, verify_theorem1_full,
};
