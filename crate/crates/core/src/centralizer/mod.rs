//! Supercommutants on tensor space and q-Schur superalgebra dimensions.

mod commutant;
mod uq;

pub use commutant::{
    commutant_at_points, sector_dim, span_closure, supercommutant_dim, supercommutant_dim_over,
    CommutantProblem, CommutantReport, SpanClosure,
};
pub use uq::{
    bc_problem, build_uq_action, classical_bc_problem, commutant_dim, full_action, schur_dim,
    uq_problem, Side, UqBlock,
};
