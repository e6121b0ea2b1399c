//! The scalar-ring abstraction shared by polynomials and truncated series.
//!
//! Two rings implement it: exact rationals (`Rat`) and cyclotomic numbers
//! (`Cyclotomic`). Both are exact; `inv` is total on nonzero elements since
//! both rings are fields.

use crate::error::Result;
use crate::rational::Rat;
use std::fmt;

pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; fails only on zero.
    fn inv(&self) -> Result<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_int(n))
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat::zero()
    }

    fn one() -> Self {
        Rat::one()
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self> {
        self.recip()
    }
}
