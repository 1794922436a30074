//! The quantum walled Brauer-Clifford superalgebra acting on V_q^{⊗r} ⊗ W_q^{⊗s}.

mod aq;
mod checks;
mod generators;
mod matrices;
mod monomial;
#[cfg(test)]
mod tests;

pub use aq::{
    aq_relation_rank_all, aq_relation_span, hecke_clifford_commutant_dim, r_ijkl, wta3_terms,
    wta_relation_check, wta_relations, AqSpan, WtaReport,
};
pub use checks::{
    cap_cup_checks, check_all_relations, classical_limit_check, hecke_checks, is_hecke,
    skein_checks, yang_baxter, ClassicalLimit,
};
pub use generators::{generator_matrix, quantum_relations, QGen, QuantumMatrixModel};
pub use matrices::{
    cap, cap_cup, cup, p_matrix, phi, phi_t, ps_matrix, pt_st_matrix, s_inverse, s_matrix, s_star,
};
pub use monomial::{
    certify_dimension, classical_word, enumerate_normal_monomials, monomial_images,
    monomial_to_matrix, DimensionCertificate, NormalMonomial, WordEvaluator,
};
