use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPoly, Rational, Scalar};
use crate::error::{Error, Result};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses `a` or `a/b` with integer a, b (b ≠ 0).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| perr(format!("bad integer '{t}'")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let d = int(b)?;
            if d.is_zero() {
                return Err(perr("zero denominator"));
            }
            Ok(Rational::new(int(a)?, d))
        }
        None => Ok(Rational::from_integer(int(s)?)),
    }
}

/// Parses a Laurent polynomial such as `3*q^-2 - 1 + 2*q^5` or `1/2*q`.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(perr("empty polynomial"));
    }
    // split into signed terms; a sign directly after '^' belongs to the exponent
    let bytes = compact.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);

    let mut p = LaurentPoly::zero();
    for t in terms {
        let (neg, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        if body.is_empty() {
            return Err(perr(format!("dangling sign in '{s}'")));
        }
        let (coeff, var) = match body.find('q') {
            None => (body, None),
            Some(pos) => {
                let c = &body[..pos];
                let c = if c.is_empty() {
                    ""
                } else {
                    c.strip_suffix('*')
                        .ok_or_else(|| perr(format!("expected '*' before q in '{t}'")))?
                };
                (c, Some(&body[pos + 1..]))
            }
        };
        let mut c = if coeff.is_empty() {
            if var.is_none() {
                return Err(perr(format!("empty term in '{s}'")));
            }
            Rational::one()
        } else {
            parse_rational(coeff)?
        };
        if neg {
            c = -c;
        }
        let exp = match var {
            None => 0,
            Some("") => 1,
            Some(v) => v
                .strip_prefix('^')
                .ok_or_else(|| perr(format!("bad exponent in '{t}'")))?
                .parse::<i32>()
                .map_err(|_| perr(format!("bad exponent in '{t}'")))?,
        };
        p.add_term(exp, c);
    }
    Ok(p)
}

/// Parses a Laurent polynomial or the fraction form `(num)/(den)`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if let Some(inner) = t.strip_prefix('(') {
        if let Some((n, d)) = inner.split_once(")/(") {
            let d = d
                .strip_suffix(')')
                .ok_or_else(|| perr(format!("unbalanced parentheses in '{s}'")))?;
            return Scalar::new(parse_laurent(n)?, parse_laurent(d)?);
        }
        let n = inner
            .strip_suffix(')')
            .ok_or_else(|| perr(format!("unbalanced parentheses in '{s}'")))?;
        return Ok(Scalar::from_poly(parse_laurent(n)?));
    }
    Ok(Scalar::from_poly(parse_laurent(t)?))
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}
