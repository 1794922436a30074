use proptest::prelude::*;

use super::*;

fn p(s: &str) -> Scalar {
    parse_scalar(s).unwrap()
}

#[test]
fn xi_squared() {
    assert_eq!(Scalar::xi() * Scalar::xi(), p("q^-2 - 2 + q^2"));
}

#[test]
fn identities() {
    let a = p("3*q^-2 - 1 + 2*q^5");
    assert_eq!(&a + &Scalar::zero(), a);
    assert_eq!(
        Scalar::xi().checked_div(&Scalar::xi()).unwrap(),
        Scalar::one()
    );
    assert_eq!(a.checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
}

#[test]
fn normal_form_is_canonical() {
    let a = Scalar::new(
        parse_laurent("q^2 - 1").unwrap(),
        parse_laurent("q - 1").unwrap(),
    )
    .unwrap();
    assert_eq!(a, p("1 + q"));
    // (2q)/(4q^3 + 4q) = (1/2) q^-... reduced: den monic, constant term nonzero
    let b = Scalar::new(
        parse_laurent("2*q").unwrap(),
        parse_laurent("4*q^3 + 4*q").unwrap(),
    )
    .unwrap();
    assert_eq!(b.den(), &parse_laurent("1 + q^2").unwrap());
    assert_eq!(b.num(), &parse_laurent("1/2").unwrap());
    assert_eq!(b.to_string(), "(1/2)/(1 + q^2)");
    assert_eq!(p("(1/2)/(1 + q^2)"), b);
}

#[test]
fn evaluation() {
    let one = rat_int(1);
    assert_eq!(Scalar::xi().eval_at(&one).unwrap(), rat_int(0));
    assert_eq!(Scalar::q_pow(7).eval_at(&one).unwrap(), rat_int(1));
    assert_eq!(p("q^2 + 1").eval_at(&rat_int(2)).unwrap(), rat_int(5));
    assert_eq!(p("q^-1").eval_at(&rat_int(0)), Err(Error::ZeroEvaluation));
    let pole = p("(1)/(-1 + q)");
    assert!(matches!(pole.eval_at(&one), Err(Error::Pole(_))));
    assert_eq!(p("q^-2").eval_at(&rat(1, 3)).unwrap(), rat_int(9));
}

#[test]
fn display_roundtrip() {
    for s in [
        "3*q^-2 - 1 + 2*q^5",
        "0",
        "-q",
        "1/3*q^2",
        "(q^-1 + 2)/(1 + q + q^2)",
        "-7/2",
    ] {
        let v = p(s);
        assert_eq!(p(&v.to_string()), v, "{s}");
    }
    assert_eq!(p("3*q^-2 - 1 + 2*q^5").to_string(), "3*q^-2 - 1 + 2*q^5");
}

#[test]
fn parse_errors() {
    for s in ["", "3q", "q^", "1/0", "2*", "+", "(q"] {
        assert!(parse_scalar(s).is_err(), "{s}");
    }
}

#[test]
fn sumq_examples() {
    for (i, k) in [(1, 2), (-1, 1), (-3, -1)] {
        assert!(sumq_identity_check(i, k).unwrap().is_zero());
    }
    assert!(sumq_identity_check(2, 1).is_err());
    assert!(sumq_identity_check(0, 1).is_err());
}

#[test]
fn sumq_all_small() {
    for i in -5..=5i64 {
        for k in (i + 1)..=5 {
            if i != 0 && k != 0 {
                assert!(sumq_identity_check(i, k).unwrap().is_zero(), "({i},{k})");
            }
        }
    }
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4)
        .prop_map(|v| LaurentPoly::from_terms(v.into_iter().map(|(e, c)| (e, rat_int(c)))))
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (small_poly(), small_poly()).prop_filter_map("zero den", |(n, d)| Scalar::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn eval_is_homomorphism(a in small_scalar(), b in small_scalar(), v in (1i64..=9, 1i64..=9)) {
        let v = rat(v.0, v.1);
        if let (Ok(x), Ok(y)) = (a.eval_at(&v), b.eval_at(&v)) {
            prop_assert_eq!((&a * &b).eval_at(&v).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval_at(&v).unwrap(), &x + &y);
        }
    }

    #[test]
    fn string_roundtrip(a in small_scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }
}
