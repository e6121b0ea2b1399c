//! Dense univariate polynomials over an exact scalar ring.
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical: the vector is empty for the zero polynomial and the last
//! element is nonzero otherwise, so `degree()` of zero is `None` (the
//! "degree −1" convention).

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![S::zero(), S::one()],
        }
    }

    pub fn monomial(c: S, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![S::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// a + b·x
    pub fn linear(a: S, b: S) -> Self {
        Poly::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &S) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Horner evaluation at a scalar point.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// p(a + b·x), expanded exactly. Degree is preserved when b ≠ 0.
    pub fn compose_affine(&self, a: &S, b: &S) -> Self {
        let inner = Poly::linear(a.clone(), b.clone());
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division; requires a divisor with invertible leading
    /// coefficient (always true here: the scalars form a field).
    pub fn divrem(&self, den: &Self) -> Result<(Self, Self)> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = den.degree().expect("nonzero");
        let lead_inv = den.leading().expect("nonzero").inv()?;
        let mut rem = self.clone();
        let mut quot = vec![
            S::zero();
            self.coeffs.len().saturating_sub(den.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().expect("nonzero").mul(&lead_inv);
            let shift = rd - dd;
            quot[shift] = quot[shift].add(&factor);
            rem = rem.sub(&den.mul(&Poly::monomial(factor, shift)));
        }
        Ok((Poly::from_coeffs(quot), rem))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        let (q, r) = self.divrem(den)?;
        if !r.is_zero() {
            return Err(Error::InvalidValue(
                "polynomial division left a nonzero remainder".into(),
            ));
        }
        Ok(q)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rat> {
    /// Extended gcd over Q[x]: returns (g, s, t) with s·a + t·b = g.
    pub fn extended_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        Ok((r0, s0, t0))
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}
