//! Z2-graded sparse linear algebra on tensor powers of V = C^{n|n}.

mod bareiss;
mod elim;
mod index;
mod json;
mod operator;
mod rank;

pub use bareiss::{bareiss_rank, bareiss_rank_scalar};
pub use elim::{rank_of_vectors, Echelon};
pub use index::{digits, from_digits, label_parity, tensor_parity, IndexSet};
pub use json::SCHEMA;
pub use operator::GradedOperator;
pub use rank::{
    eval_operator, evaluation_points, rank, rank_at_points, rank_exact, seed_from_env, RankMode,
    RankReport, DEFAULT_POINTS, POOL_BOUND, SEED_ENV,
};

use crate::error::Result;
use crate::scalar::Field;

/// The matrix unit E_{ij} on V, given by labels.
pub fn matrix_unit<K: Field>(n: usize, i: i64, j: i64) -> Result<GradedOperator<K>> {
    let idx = IndexSet::new(n);
    let (a, b) = (idx.pos(i)?, idx.pos(j)?);
    Ok(GradedOperator::from_triplets(n, 1, 1, [(a, b, K::fone())]))
}

#[cfg(test)]
mod tests;
