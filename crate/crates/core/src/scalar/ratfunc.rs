use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{exact_div, make_monic, poly_gcd, LaurentPoly};
use super::Rational;
use crate::error::{Error, Result};

/// Element of Q(q): a reduced fraction num/den of Laurent polynomials.
///
/// `den` is an ordinary polynomial with nonzero constant term and leading
/// coefficient 1; every monomial factor lives in `num`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(Rational::from_integer(c.into()))
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    /// c·q^k
    pub fn monomial(c: i64, k: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(Rational::from_integer(c.into()), k))
    }

    /// ξ = q − q⁻¹
    pub fn xi() -> Self {
        Self::from_poly(LaurentPoly::from_terms([
            (1, Rational::one()),
            (-1, -Rational::one()),
        ]))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((c, k)) = den.as_monomial() {
            let inv = c.recip();
            return Ok(Self::from_poly(num.shift(-k).scale(&inv)));
        }
        let (nk, np) = num.to_dense();
        let (dk, dp) = den.to_dense();
        let g = poly_gcd(&np, &dp);
        let (np, dp) = if g.len() > 1 {
            (exact_div(&np, &g), exact_div(&dp, &g))
        } else {
            (np, dp)
        };
        let lc = dp.last().unwrap().clone();
        let dp = make_monic(dp);
        let np: Vec<Rational> = np.iter().map(|c| c / &lc).collect();
        let num = LaurentPoly::from_dense(nk - dk, &np);
        let den = LaurentPoly::from_dense(0, &dp);
        Ok(Self { num, den })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_laurent() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact substitution q := v.
    pub fn eval_at(&self, v: &Rational) -> Result<Rational> {
        if v.is_zero() {
            return Err(Error::ZeroEvaluation);
        }
        let d = self.den.eval(v)?;
        if d.is_zero() {
            return Err(Error::Pole(v.to_string()));
        }
        Ok(self.num.eval(v)? / d)
    }

    /// Rough size used to prefer simple pivots.
    pub fn weight(&self) -> usize {
        self.num.len() + 4 * (self.den.len() - 1)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Scalar::from_poly(&self.num + &o.num);
            }
            return Scalar::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        Scalar::new(num, &self.den * &o.den).expect("nonzero den")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(&self.num * &o.num);
        }
        Scalar::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use `checked_div` for a fallible form.
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(v: Rational) -> Self {
        Scalar::from_rational(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
