use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::relations::{all_hold, check_relation_set};
use crate::scalar::rat_int;
use crate::superlinalg::rank_exact;

fn t(k: usize) -> Vertex {
    Vertex::top(k)
}
fn b(k: usize) -> Vertex {
    Vertex::bottom(k)
}

fn gen(g: ClassicalGen, r: usize, s: usize) -> DiagramElement {
    DiagramElement::from_diagram(&g.diagram(r, s).unwrap())
}

#[test]
fn worked_example_statistics() {
    let d = worked_example();
    assert_eq!(d.num_beads(), 12);
    assert_eq!(statistics(&d).as_tuple(), [0, 3, 1, 2, 2, 2, 5, 1, 15, 16]);
    let (sign, nd) = normalize(&d);
    assert_eq!(sign, -1);
    assert_eq!(nd.to_string(), "c2 e2,5 e4,6 s2 s1 s5 s6 c1 c4 c6");
    assert_eq!(nd.p_set, vec![2]);
    assert_eq!(nd.q_set, vec![1, 4, 6]);
}

#[test]
fn normal_form_word_builds_the_normal_diagram() {
    let nd = normalize(&worked_example()).1;
    let d = word_diagram(&nd.word(), 4, 3).unwrap().unwrap();
    let (sign, back) = normalize(&d);
    assert_eq!(back, nd);
    assert_eq!(sign, 1);
    assert_eq!(statistics(&nd.to_bead_diagram()).gamma, 0);
}

#[test]
fn worked_product() {
    let d1 = BeadDiagram::from_strands(
        2,
        1,
        &[(t(1), b(2)), (t(2), t(3)), (b(1), b(3))],
        &[(t(1), vec![1]), (b(1), vec![2]), (t(2), vec![3])],
    )
    .unwrap();
    let d2 = BeadDiagram::from_strands(
        2,
        1,
        &[(t(1), b(2)), (t(2), b(1)), (t(3), b(3))],
        &[(t(2), vec![1]), (t(1), vec![2])],
    )
    .unwrap();
    let want = BeadDiagram::from_strands(
        2,
        1,
        &[(t(1), t(3)), (t(2), b(2)), (b(1), b(3))],
        &[(t(1), vec![5, 3]), (t(2), vec![4, 1]), (b(1), vec![2])],
    )
    .unwrap();
    assert_eq!(d1.multiply_raw(&d2).unwrap(), Some(want));
}

#[test]
fn e_squared_is_a_loop() {
    let e = ClassicalGen::E.diagram(1, 1).unwrap();
    assert_eq!(e.multiply_raw(&e).unwrap(), None);
}

#[test]
fn clifford_squares() {
    for (k, want) in [(1, -1), (2, 1)] {
        let d = word_diagram(&[ClassicalGen::C(k), ClassicalGen::C(k)], 1, 1)
            .unwrap()
            .unwrap();
        let (sign, nd) = normalize(&d);
        assert_eq!(i64::from(sign), want);
        assert_eq!(nd, NormalDiagram::identity(1, 1));
    }
}

#[test]
fn element_products() {
    let (r, s) = (2, 1);
    let one = DiagramElement::one(r, s);
    let s1 = gen(ClassicalGen::S(1), r, s);
    assert_eq!(s1.multiply(&s1).unwrap(), one);
    let (c1, c3) = (gen(ClassicalGen::C(1), r, s), gen(ClassicalGen::C(3), r, s));
    assert!(c1
        .multiply(&c3)
        .unwrap()
        .add(&c3.multiply(&c1).unwrap())
        .unwrap()
        .is_zero());
    let e = gen(ClassicalGen::E, r, s);
    assert_eq!(e.multiply(&s1).unwrap().multiply(&e).unwrap(), e);
}

#[test]
fn basis_counts() {
    for (r, s, want) in [
        (1, 0, 2),
        (0, 1, 2),
        (1, 1, 8),
        (2, 1, 48),
        (1, 2, 48),
        (2, 2, 384),
    ] {
        let basis = enumerate_basis(r, s);
        assert_eq!(basis.len(), want, "({r},{s})");
        let mut sorted = basis.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), want);
        for nd in &basis {
            nd.validate().unwrap();
            assert_eq!(normalize(&nd.to_bead_diagram()), (1, nd.clone()));
        }
    }
}

#[test]
fn words_of_basis_elements_rebuild_them() {
    for nd in enumerate_basis(2, 2) {
        let d = word_diagram(&nd.word(), 2, 2).unwrap().unwrap();
        assert_eq!(normalize(&d), (1, nd.clone()), "{nd}");
    }
}

#[test]
fn presentation_holds_in_diagrams() {
    for (r, s) in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let checks =
            check_relation_set(&DiagramModel { r, s }, &classical_relations(r, s)).unwrap();
        assert!(all_hold(&checks), "({r},{s}): {checks:?}");
    }
}

#[test]
fn presentation_holds_in_matrices() {
    for (n, r, s) in [(2, 1, 1), (2, 2, 1), (2, 2, 2)] {
        let checks = check_relation_set(
            &ClassicalMatrixModel { n, r, s },
            &classical_relations(r, s),
        )
        .unwrap();
        assert!(all_hold(&checks), "({n},{r},{s}): {checks:?}");
    }
}

#[test]
fn representation_is_an_antihomomorphism() {
    let (n, r, s) = (2, 1, 1);
    let basis = enumerate_basis(r, s);
    let reps: Vec<_> = basis
        .iter()
        .map(|x| classical_rep_basis(x, n).unwrap())
        .collect();
    for (x, rx) in basis.iter().zip(&reps) {
        for (y, ry) in basis.iter().zip(&reps) {
            let xy = DiagramElement::basis(x.clone())
                .multiply(&DiagramElement::basis(y.clone()))
                .unwrap();
            assert_eq!(
                ry.mul(rx),
                classical_rep_element(&xy, n).unwrap(),
                "{x} * {y}"
            );
        }
    }
}

#[test]
fn representation_is_faithful_at_2_1_1() {
    let reps: Vec<_> = enumerate_basis(1, 1)
        .iter()
        .map(|x| classical_rep_basis(x, 2).unwrap())
        .collect();
    assert_eq!(rank_exact(&reps), 8);
}

#[test]
fn clifford_operators_square_correctly() {
    let j = j_matrix::<crate::scalar::Rational>(2);
    assert_eq!(
        j.mul(&j),
        GradedOperatorR::identity(2, 1).scale(&rat_int(-1))
    );
    let jt = j_transpose::<crate::scalar::Rational>(2);
    assert!(jt.mul(&jt).is_identity());
    assert_eq!(j.supertranspose().unwrap(), jt);
}

type GradedOperatorR = crate::superlinalg::GradedOperator<crate::scalar::Rational>;

#[test]
fn commutant_of_qn_small() {
    // q(1) on V^{1,0} = C^{1|1}: commutant of {E⁰, E¹} is spanned by 1 and J
    assert_eq!(classical_commutant_dim(1, 1, 0).unwrap(), 2);
    assert_eq!(classical_commutant_dim(2, 1, 1).unwrap(), 8);
}

#[test]
fn qn_action_supercommutes_with_generators() {
    let (n, r, s) = (2, 1, 1);
    let act = qn_action(n, r, s).unwrap();
    for g in [ClassicalGen::C(1), ClassicalGen::C(2), ClassicalGen::E] {
        let rg = classical_rep_generator(g, n, r, s).unwrap();
        for x in &act {
            assert!(x.supercommutator(&rg).unwrap().is_zero(), "{g}");
        }
    }
}

#[test]
fn json_roundtrip() {
    let d = worked_example();
    let v = d.to_json();
    let back = BeadDiagram::from_json(&v).unwrap();
    assert_eq!(back, d);
    assert_eq!(
        serde_json::to_string(&back.to_json()).unwrap(),
        serde_json::to_string(&v).unwrap()
    );
}

fn shape() -> impl Strategy<Value = (usize, usize, u64)> {
    (0usize..=2, 0usize..=2, any::<u64>()).prop_filter("nonempty", |(r, s, _)| r + s > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn raw_product_is_associative((r, s, seed) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d: Vec<_> = (0..3).map(|_| random_diagram(r, s, 4, &mut rng)).collect();
        let left = d[0].multiply_raw(&d[1]).unwrap().and_then(|x| x.multiply_raw(&d[2]).unwrap());
        let right = d[1].multiply_raw(&d[2]).unwrap().and_then(|x| d[0].multiply_raw(&x).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn element_product_is_associative((r, s, seed) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<_> = (0..3).map(|_| DiagramElement::from_diagram(&random_diagram(r, s, 4, &mut rng))).collect();
        let left = x[0].multiply(&x[1]).unwrap().multiply(&x[2]).unwrap();
        let right = x[0].multiply(&x[1].multiply(&x[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normalization_is_idempotent((r, s, seed) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(r, s, 6, &mut rng);
        let (_, nd) = normalize(&d);
        let dt = nd.to_bead_diagram();
        prop_assert_eq!(statistics(&dt).gamma, 0);
        prop_assert_eq!(normalize(&dt), (1, nd));
    }

    #[test]
    fn reading_a_strand_from_either_end_agrees((r, s, seed) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(r, s, 6, &mut rng);
        let edges: Vec<_> = d.strands().iter().map(|(u, v, _)| (*u, *v)).collect();
        let flipped: Vec<_> = d
            .strands()
            .into_iter()
            .filter(|(_, _, l)| !l.is_empty())
            .map(|(_, v, mut l)| {
                l.reverse();
                (v, l)
            })
            .collect();
        let e = BeadDiagram::from_strands(r, s, &edges, &flipped).unwrap();
        prop_assert_eq!(statistics(&e), statistics(&d));
        prop_assert_eq!(normalize(&e), normalize(&d));
    }

    #[test]
    fn gamma_vanishes_only_on_normal_diagrams((r, s, seed) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(r, s, 5, &mut rng);
        let nd = normalize(&d).1;
        prop_assert_eq!(statistics(&d).gamma == 0, d == nd.to_bead_diagram());
    }
}
