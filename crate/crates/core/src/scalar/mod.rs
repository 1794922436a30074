//! Exact scalars: rationals, Laurent polynomials in q and the field Q(q).

mod field;
mod laurent;
mod parse;
mod ratfunc;

pub use field::Field;
pub use laurent::LaurentPoly;
pub use parse::{parse_laurent, parse_rational, parse_scalar};
pub use ratfunc::Scalar;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// v^k for any integer k (v ≠ 0 when k < 0).
pub fn rational_pow(v: &Rational, k: i32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= v;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// (−1)^{|j|} with the convention (−1)^{|0|} = 0.
fn signed_parity(j: i64) -> i64 {
    match j {
        0 => 0,
        j if j < 0 => -1,
        _ => 1,
    }
}

fn par(j: i64) -> i32 {
    i32::from(j < 0)
}

/// LHS − RHS of
/// ξ Σ_{i<j<k} (−1)^{|j|} q^{2j(1−2|j|)} = q^{(2k−1)(1−2|k|)} − q^{(2i+1)(1−2|i|)}.
pub fn sumq_identity_check(i: i64, k: i64) -> Result<Scalar> {
    if i == 0 || k == 0 {
        return Err(Error::InvalidArgument("i and k must be nonzero".into()));
    }
    if i >= k {
        return Err(Error::InvalidArgument(format!(
            "need i < k, got {i} >= {k}"
        )));
    }
    let mut sum = LaurentPoly::zero();
    for j in (i + 1)..k {
        let sg = signed_parity(j);
        if sg != 0 {
            let e = 2 * j as i32 * (1 - 2 * par(j));
            sum.add_term(e, rat_int(sg));
        }
    }
    let lhs = Scalar::xi() * Scalar::from_poly(sum);
    let rhs = Scalar::q_pow((2 * k as i32 - 1) * (1 - 2 * par(k)))
        - Scalar::q_pow((2 * i as i32 + 1) * (1 - 2 * par(i)));
    Ok(lhs - rhs)
}

#[cfg(test)]
mod tests;
