//! Bead diagrams and the walled Brauer-Clifford superalgebra.

mod bead;
mod classical;
mod element;
pub(crate) mod normal;
mod random;
mod stats;

pub use bead::{BeadDiagram, Row, Vertex};
pub use classical::{
    classical_commutant_dim, classical_relations, classical_rep_basis, classical_rep_element,
    classical_rep_generator, classical_rep_word, j_matrix, j_transpose, qn_action, super_flip,
    word_diagram, ClassicalGen, ClassicalMatrixModel, DiagramModel,
};
pub use element::DiagramElement;
pub use normal::{block_word, enumerate_basis, permutation_word, NormalDiagram};
pub use random::random_diagram;
pub use stats::{normalize, statistics, Statistics};

/// The 12-bead (4,3) diagram used as the running example for the statistics.
pub fn worked_example() -> BeadDiagram {
    let (t, b) = (Vertex::top, Vertex::bottom);
    BeadDiagram::from_strands(
        4,
        3,
        &[
            (t(2), b(1)),
            (t(1), b(3)),
            (t(6), b(7)),
            (t(3), t(7)),
            (t(4), t(5)),
            (b(2), b(5)),
            (b(4), b(6)),
        ],
        &[
            (b(2), vec![3, 6, 2]),
            (t(1), vec![1]),
            (t(2), vec![5, 4]),
            (t(3), vec![7, 9]),
            (t(6), vec![12, 8, 10]),
            (t(4), vec![11]),
        ],
    )
    .expect("valid example")
}

#[cfg(test)]
mod tests;
