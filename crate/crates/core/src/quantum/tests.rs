use super::*;
use crate::diagram::classical_rep_word;
use crate::relations::all_hold;
use crate::relations::WordModel;
use crate::superlinalg::{eval_operator, RankMode};
use num_traits::One;
use proptest::prelude::*;

#[test]
fn yang_baxter_small() {
    for n in 1..=2 {
        assert!(yang_baxter(n).unwrap(), "n={n}");
    }
}

#[test]
fn hecke_and_intertwiners() {
    for n in 1..=2 {
        for c in hecke_checks(n)
            .into_iter()
            .chain(cap_cup_checks(n).unwrap())
        {
            assert_eq!(c.pass, Some(true), "{}", c.id);
        }
    }
}

#[test]
fn relations_hold_small() {
    for (n, r, s) in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 1, 2)] {
        let checks = check_all_relations(n, r, s).unwrap();
        assert!(all_hold(&checks), "({n},{r},{s}): {checks:?}");
    }
}

#[test]
fn skein_small() {
    for c in skein_checks(2, 2, 2).unwrap() {
        assert_eq!(c.pass, Some(true), "{}", c.id);
    }
}

#[test]
fn monomial_count_and_rank_2_1_1() {
    let ms = enumerate_normal_monomials(1, 1);
    assert_eq!(ms.len(), 8);
    let cert = certify_dimension(2, 1, 1, RankMode::Exact).unwrap();
    assert_eq!(cert.rank.rank, 8);
    assert!(cert.certified);
}

#[test]
fn monomials_at_one_are_reversed_classical_words() {
    let (n, r, s) = (2, 2, 1);
    let one = crate::scalar::Rational::one();
    for m in enumerate_normal_monomials(r, s) {
        let q = eval_operator(&monomial_to_matrix(&m, n).unwrap(), &one).unwrap();
        let mut w = classical_word(&m.word(), r);
        w.reverse();
        assert_eq!(q, classical_rep_word(&w, n, r, s).unwrap(), "{m}");
    }
}

#[test]
fn classical_limit_2_1_1() {
    let lim = classical_limit_check(2, 1, 1).unwrap();
    assert!(
        lim.checks.iter().all(|c| c.pass == Some(true)),
        "{:?}",
        lim.checks
    );
    assert!(all_hold(&lim.relations));
    assert_eq!(lim.rank_at_one, 8);
}

fn word_strategy(r: usize, s: usize) -> impl Strategy<Value = Vec<QGen>> {
    let mut gens = QGen::all(r, s);
    gens.extend((1..r).map(QGen::TInv));
    gens.extend((1..s).map(QGen::TStarInv));
    proptest::collection::vec(proptest::sample::select(gens), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn words_specialize_to_reversed_classical_words(w in word_strategy(2, 1)) {
        let (n, r, s) = (3, 2, 1);
        let q = eval_operator(&QuantumMatrixModel { n, r, s }.word(&w).unwrap(), &crate::scalar::Rational::one()).unwrap();
        let mut cw = classical_word(&w, r);
        cw.reverse();
        prop_assert_eq!(q, classical_rep_word(&cw, n, r, s).unwrap());
    }

    #[test]
    fn word_entries_are_laurent(w in word_strategy(2, 2)) {
        let m = QuantumMatrixModel { n: 2, r: 2, s: 2 }.word(&w).unwrap();
        prop_assert!(m.iter().all(|(_, _, v)| v.is_laurent()));
    }

    #[test]
    fn inverse_generators_cancel(w in word_strategy(2, 2), i in 0usize..2) {
        let model = QuantumMatrixModel { n: 2, r: 2, s: 2 };
        let (t, ti) = if i == 0 { (QGen::T(1), QGen::TInv(1)) } else { (QGen::TStar(1), QGen::TStarInv(1)) };
        let mut longer = w.clone();
        longer.extend([t, ti]);
        prop_assert_eq!(model.word(&longer).unwrap(), model.word(&w).unwrap());
    }
}
