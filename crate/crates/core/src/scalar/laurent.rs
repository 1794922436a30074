use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rational_pow, Rational};
use crate::error::{Error, Result};

/// Laurent polynomial in q with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// q^k
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<i32, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Some((c, k)) when the polynomial is c·q^k.
    pub fn as_monomial(&self) -> Option<(&Rational, i32)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, *e))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exp: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn eval(&self, v: &Rational) -> Result<Rational> {
        if v.is_zero() {
            if self.terms.keys().all(|e| *e >= 0) {
                return Ok(self.terms.get(&0).cloned().unwrap_or_else(Rational::zero));
            }
            return Err(Error::ZeroEvaluation);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(v, *e);
        }
        Ok(acc)
    }

    /// Exact quotient in the Laurent ring, or None if `d` does not divide.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (ka, a) = self.to_dense();
        let (kd, dd) = d.to_dense();
        let (q, r) = poly_divrem(&a, &dd);
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_dense(ka - kd, &q))
    }

    pub fn is_divisible_by(&self, d: &LaurentPoly) -> bool {
        self.exact_div(d).is_some()
    }

    /// Splits into (k, coefficients of P) with self = q^k·P(q), P(0) ≠ 0.
    pub(crate) fn to_dense(&self) -> (i32, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(shift: i32, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i32, c.clone())),
        )
    }
}

// Dense polynomial helpers (index = exponent), trailing zeros trimmed.

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let f = &r[dr] / lb;
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                r[shift + i] -= &f * c;
            }
        }
        quot[shift] = f;
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

/// Monic gcd of two nonzero dense polynomials.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = make_monic(r);
    }
    make_monic(x)
}

pub(crate) fn make_monic(mut v: Vec<Rational>) -> Vec<Rational> {
    trim(&mut v);
    if let Some(lc) = v.last().cloned() {
        if !lc.is_one() {
            for c in v.iter_mut() {
                *c = &*c / &lc;
            }
        }
    }
    v
}

pub(crate) fn exact_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (q, r) = poly_divrem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if *e == 0 {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}
