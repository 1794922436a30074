use proptest::prelude::*;
use serde_json::Value;

use super::*;
use crate::scalar::{parse_scalar, rat_int, LaurentPoly, Rational, Scalar};

type Op = GradedOperator<Rational>;

fn phi(n: usize) -> Op {
    let idx = IndexSet::new(n);
    GradedOperator::from_triplets(
        n,
        1,
        1,
        (0..2 * n).map(|p| {
            (
                p,
                idx.neg(p),
                rat_int(if idx.parity(p) == 1 { -1 } else { 1 }),
            )
        }),
    )
}

fn unit(n: usize, i: i64, j: i64) -> Op {
    matrix_unit(n, i, j).unwrap()
}

#[test]
fn supertranspose_examples() {
    assert_eq!(unit(2, 1, 1).supertranspose().unwrap(), unit(2, 1, 1));
    assert_eq!(unit(2, 1, -1).supertranspose().unwrap(), unit(2, -1, 1));
    // |i| = 1: E_{-1,1}ᵀ = −E_{1,-1}
    assert_eq!(
        unit(2, -1, 1).supertranspose().unwrap(),
        unit(2, 1, -1).neg()
    );
    let idx = IndexSet::new(2);
    let phi_t = GradedOperator::from_triplets(2, 1, 1, (0..4).map(|p| (p, idx.neg(p), rat_int(1))));
    assert_eq!(phi(2).supertranspose().unwrap(), phi_t);
    let mixed = unit(2, 1, 1).add(&unit(2, 1, -1));
    assert!(mixed.supertranspose().is_err());
}

#[test]
fn supercommutator_examples() {
    let p = phi(2);
    assert_eq!(p.supercommutator(&p).unwrap(), p.mul(&p).scale(&rat_int(2)));
    assert_eq!(
        p.supercommutator(&p).unwrap(),
        Op::identity(2, 1).scale(&rat_int(-2))
    );
    assert!(unit(2, 1, 1)
        .supercommutator(&unit(2, 2, 2))
        .unwrap()
        .is_zero());
    assert!(p.supercommutator(&Op::identity(2, 2)).is_err());
}

/// Applies an operator to a basis vector given by labels, returning (coef, labels).
fn apply(op: &Op, labels: &[i64]) -> Vec<(Rational, Vec<i64>)> {
    let idx = IndexSet::new(op.n());
    let pos: Vec<usize> = labels.iter().map(|l| idx.pos(*l).unwrap()).collect();
    let col = from_digits(&pos, 2 * op.n());
    let mut out = Vec::new();
    for (i, j, v) in op.iter() {
        if j == col {
            let d = digits(i, 2 * op.n(), op.out_factors());
            out.push((v.clone(), d.into_iter().map(|p| idx.label(p)).collect()));
        }
    }
    out
}

#[test]
fn embed_sign_rule() {
    let n = 2;
    let e = phi(n).embed_at(2, 2).unwrap();
    for i in [-2i64, -1, 1, 2] {
        for j in [-2i64, -1, 1, 2] {
            let got = apply(&e, &[i, j]);
            // Φ v_j = (−1)^{|−j|}... read off the single-factor action
            let local = apply(&phi(n), &[j]);
            assert_eq!(local.len(), 1);
            let sign = if i < 0 { -1 } else { 1 };
            let want = vec![(&local[0].0 * rat_int(sign), vec![i, local[0].1[0]])];
            assert_eq!(got, want, "v_{i} ⊗ v_{j}");
        }
    }
    assert_eq!(
        Op::identity(2, 1).embed_at(3, 3).unwrap(),
        Op::identity(2, 3)
    );
    let even = unit(2, 1, 2).add(&unit(2, -1, -2));
    let plain = Op::identity(2, 1).kron(&even);
    assert_eq!(even.embed_at(2, 2).unwrap(), plain);
    assert!(even.embed_at(0, 2).is_err());
    assert!(even.embed_at(3, 2).is_err());
}

#[test]
fn graded_units_super_flip() {
    let n = 2;
    let idx = IndexSet::new(n);
    let terms = (0..4).flat_map(|i| {
        (0..4).map(move |j| {
            let s = if idx.parity(j) == 1 { -1 } else { 1 };
            (rat_int(s), vec![(i, j), (j, i)])
        })
    });
    let p = Op::from_graded_units(n, 2, terms);
    for i in [-2i64, -1, 1, 2] {
        for j in [-2i64, -1, 1, 2] {
            let s = if i < 0 && j < 0 { -1 } else { 1 };
            assert_eq!(apply(&p, &[j, i]), vec![(rat_int(s), vec![i, j])]);
        }
    }
    assert!(p.mul(&p).is_identity());
}

#[test]
fn place_matches_embed_and_flip() {
    let n = 1;
    let a = phi(n).kron(&unit(n, 1, -1));
    for k in 1..=2 {
        assert_eq!(a.place(&[k, k + 1], 3).unwrap(), a.embed_at(k, 3).unwrap());
    }
    // placing at (1,3) equals conjugating the (1,2) placement by the flip of factors 2,3
    let idx = IndexSet::new(n);
    let flip = Op::from_graded_units(
        n,
        2,
        (0..2).flat_map(|i| {
            (0..2).map(move |j| {
                (
                    rat_int(if idx.parity(j) == 1 { -1 } else { 1 }),
                    vec![(i, j), (j, i)],
                )
            })
        }),
    )
    .embed_at(2, 3)
    .unwrap();
    let direct = a.place(&[1, 3], 3).unwrap();
    let via = flip.mul(&a.embed_at(1, 3).unwrap()).mul(&flip);
    assert_eq!(direct, via);
}

#[test]
fn rank_examples() {
    let id = GradedOperator::<Scalar>::identity(2, 1);
    assert_eq!(
        rank(std::slice::from_ref(&id), RankMode::Exact)
            .unwrap()
            .rank,
        1
    );
    assert_eq!(
        rank(&[id.clone(), id.clone()], RankMode::Exact)
            .unwrap()
            .rank,
        1
    );
    assert_eq!(rank(&[], RankMode::Exact).unwrap().rank, 0);
    let r = rank(
        &[id.clone(), id.scale(&Scalar::xi())],
        RankMode::Probabilistic,
    )
    .unwrap();
    assert_eq!(r.rank, 1);
    assert_eq!(r.points.len(), 3);
    let big = GradedOperator::<Scalar>::identity(2, 2);
    assert!(rank(&[id, big], RankMode::Exact).is_err());
}

#[test]
fn points_are_reproducible() {
    let a = evaluation_points(3, 7);
    assert_eq!(a, evaluation_points(3, 7));
    assert_ne!(a, evaluation_points(3, 8));
    for v in &a {
        assert!(v.numer().magnitude() <= &100u32.into() && v.denom() <= &100.into());
    }
}

#[test]
fn json_roundtrip() {
    let s = Scalar::xi();
    let op = GradedOperator::<Scalar>::from_triplets(
        2,
        2,
        2,
        [
            (0, 3, s.clone()),
            (5, 5, parse_scalar("(1)/(1 + q^2)").unwrap()),
        ],
    );
    let j = op.to_json().unwrap();
    let text = serde_json::to_string(&j).unwrap();
    let back = GradedOperator::<Scalar>::from_json(&serde_json::from_str::<Value>(&text).unwrap())
        .unwrap();
    assert_eq!(back, op);
    assert_eq!(
        serde_json::to_string(&back.to_json().unwrap()).unwrap(),
        text
    );
    assert!(text.contains("\"schema\":\"qwalled/v1\""));
}

fn lp(c: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(c.iter().map(|(e, v)| (*e, rat_int(*v))))
}

#[test]
fn bareiss_agrees_on_known_matrix() {
    // rows: (1, q), (q, q^2) dependent; (1, q^-1) independent
    let m = vec![
        vec![lp(&[(0, 1)]), lp(&[(1, 1)])],
        vec![lp(&[(1, 1)]), lp(&[(2, 1)])],
        vec![lp(&[(0, 1)]), lp(&[(-1, 1)])],
    ];
    assert_eq!(bareiss_rank(m), 2);
}

fn homogeneous(n: usize, factors: usize, parity: u8) -> impl Strategy<Value = Op> {
    let dim = (2 * n).pow(factors as u32);
    prop::collection::vec((0..dim, 0..dim, -3i64..=3), 0..12).prop_map(move |v| {
        let trip = v
            .into_iter()
            .filter(|(i, j, _)| {
                tensor_parity(*i, n, factors) ^ tensor_parity(*j, n, factors) == parity
            })
            .map(|(i, j, x)| (i, j, rat_int(x)));
        Op::from_triplets(n, factors, factors, trip)
    })
}

fn any_homogeneous(n: usize, factors: usize) -> impl Strategy<Value = (Op, u8)> {
    (0u8..2).prop_flat_map(move |p| homogeneous(n, factors, p).prop_map(move |a| (a, p)))
}

fn scalar_matrix() -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(
        prop::collection::vec(prop::collection::vec((-2i32..=2, -2i64..=2), 0..3), 3),
        1..4,
    )
    .prop_map(|rows| {
        rows.into_iter()
            .map(|r| r.into_iter().map(|t| Scalar::from_poly(lp(&t))).collect())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_supertranspose((a, p) in any_homogeneous(2, 1)) {
        let tt = a.supertranspose().unwrap().supertranspose().unwrap();
        prop_assert_eq!(tt, if p == 1 { a.neg() } else { a });
    }

    #[test]
    fn embed_composition((a, pa) in any_homogeneous(1, 1), (b, pb) in any_homogeneous(1, 1)) {
        let m = 3;
        prop_assert_eq!(a.embed_at(2, m).unwrap().mul(&b.embed_at(2, m).unwrap()), a.mul(&b).embed_at(2, m).unwrap());
        let ab = a.embed_at(1, m).unwrap().mul(&b.embed_at(3, m).unwrap());
        let ba = b.embed_at(3, m).unwrap().mul(&a.embed_at(1, m).unwrap());
        prop_assert_eq!(ab, if pa & pb == 1 { ba.neg() } else { ba });
    }

    #[test]
    fn super_jacobi((a, pa) in any_homogeneous(1, 2), (b, pb) in any_homogeneous(1, 2), (c, pc) in any_homogeneous(1, 2)) {
        // (−1)^{|a||c|}[a,[b,c]] + (−1)^{|b||a|}[b,[c,a]] + (−1)^{|c||b|}[c,[a,b]] = 0
        let br = |x: &Op, y: &Op| x.supercommutator(y).unwrap();
        let sg = |s: u8, x: Op| if s == 1 { x.neg() } else { x };
        let t1 = sg(pa & pc, br(&a, &br(&b, &c)));
        let t2 = sg(pb & pa, br(&b, &br(&c, &a)));
        let t3 = sg(pc & pb, br(&c, &br(&a, &b)));
        prop_assert!(t1.add(&t2).add(&t3).is_zero());
        // bilinearity in the first slot
        let a2 = a.scale(&rat_int(3));
        prop_assert_eq!(br(&a2, &b), br(&a, &b).scale(&rat_int(3)));
    }

    #[test]
    fn bareiss_matches_field_elimination(m in scalar_matrix()) {
        let vecs = m.iter().map(|r| r.iter().enumerate().map(|(j, x)| (j, x.clone())).collect::<Vec<_>>());
        prop_assert_eq!(bareiss_rank_scalar(&m), rank_of_vectors(vecs));
    }
}
