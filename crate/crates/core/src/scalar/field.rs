use std::fmt::Debug;

use num_traits::{One, Signed, Zero};

use super::{Rational, Scalar};

/// Coefficient field for sparse operators and elimination.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn fzero() -> Self;
    fn fone() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_fzero(&self) -> bool;
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
    /// Multiplicative inverse; callers guarantee `self` is nonzero.
    fn finv(&self) -> Self;
    /// Size heuristic for pivot selection.
    fn weight(&self) -> usize;
    fn is_fone(&self) -> bool {
        *self == Self::fone()
    }
}

impl Field for Rational {
    fn fzero() -> Self {
        Zero::zero()
    }
    fn fone() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }
    fn is_fzero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> Self {
        self.recip()
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
            + usize::from(!One::is_one(&self.abs()))
    }
}

impl Field for Scalar {
    fn fzero() -> Self {
        Scalar::zero()
    }
    fn fone() -> Self {
        Scalar::one()
    }
    fn from_i64(v: i64) -> Self {
        Scalar::from_int(v)
    }
    fn is_fzero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
    fn weight(&self) -> usize {
        Scalar::weight(self)
    }
}
