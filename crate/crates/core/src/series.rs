//! Truncated formal power series with plain (non-factorial) coefficients.
//!
//! A `Series` of order Ω retains c_0..c_{Ω−1} and stands for
//! Σ c_n t^n + O(t^Ω). Every operation documents the order of its result;
//! comparing two series uses the smaller of their orders. Factorial
//! normalization happens only at extraction (`coeff_factorial`).

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Series<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Series<S> {
    /// Wrap explicit coefficients; the order is their count.
    pub fn from_coeffs(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyOrder);
        }
        Ok(Series { coeffs })
    }

    pub fn constant(c: S, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut coeffs = vec![S::zero(); order];
        coeffs[0] = c;
        Ok(Series { coeffs })
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::constant(S::zero(), order)
    }

    /// c·t^k + O(t^order).
    pub fn monomial(c: S, k: usize, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut coeffs = vec![S::zero(); order];
        if k < order {
            coeffs[k] = c;
        }
        Ok(Series { coeffs })
    }

    /// The exponential series of a linear exponent: coefficients c^n / n!.
    pub fn exp_linear(c: &S, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut coeffs = Vec::with_capacity(order);
        coeffs.push(S::one());
        for n in 1..order {
            let step = c.mul(&S::from_rat(&Rat::from_int(n as i64).recip()?));
            let next = coeffs[n - 1].mul(&step);
            coeffs.push(next);
        }
        Ok(Series { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> &S {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn leading_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    /// Result order: min of the operand orders.
    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
                .collect(),
        }
    }

    /// Result order: min of the operand orders.
    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].sub(&rhs.coeffs[i]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Cauchy product; result order: min of the operand orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![S::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Series { coeffs }
    }

    /// Quotient with pole cancellation: strips the denominator's leading-zero
    /// prefix from both operands (the numerator must vanish at least as
    /// deeply), then divides. Result order: min of the operand orders minus
    /// the stripped count.
    pub fn div_cancel(num: &Self, den: &Self) -> Result<Self> {
        let zd = den.leading_zeros();
        if zd == den.order() {
            return Err(Error::ZeroSeriesDivisor);
        }
        let zn = num.leading_zeros();
        if zn < zd {
            return Err(Error::NonCancellingPole {
                num_zeros: zn,
                den_zeros: zd,
            });
        }
        let n = num.order().min(den.order()) - zd;
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let lead_inv = den.coeffs[zd].inv()?;
        let mut quot: Vec<S> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num.coeffs[zd + k].clone();
            for (j, q) in quot.iter().enumerate() {
                acc = acc.sub(&q.mul(&den.coeffs[zd + k - j]));
            }
            quot.push(acc.mul(&lead_inv));
        }
        Ok(Series { coeffs: quot })
    }

    /// n! · c_n: converts a plain coefficient into the value a generating
    /// function of the form Σ a_n t^n/n! carries at index n.
    pub fn coeff_factorial(&self, n: usize) -> Result<S> {
        if n >= self.order() {
            return Err(Error::OrderExceeded {
                index: n,
                order: self.order(),
            });
        }
        Ok(self.coeffs[n].mul(&S::from_rat(&Rat::factorial(n))))
    }

    /// Exact coefficient agreement up to the common order.
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        let n = self.order().min(rhs.order());
        (0..n).all(|i| self.coeffs[i] == rhs.coeffs[i])
    }
}

impl<S: Scalar> PartialEq for Series<S> {
    /// Strict equality: same order and same coefficients. Use
    /// [`Series::agrees_with`] for the common-order comparison.
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rat;

    fn rats(values: &[(i64, i64)]) -> Vec<Rat> {
        values.iter().map(|&(n, d)| Rat::ratio(n, d)).collect()
    }

    #[test]
    fn exp_linear_examples() {
        let z = Series::exp_linear(&Rat::zero(), 3).unwrap();
        assert_eq!(z.coeffs(), &rats(&[(1, 1), (0, 1), (0, 1)])[..]);
        let e = Series::exp_linear(&Rat::one(), 4).unwrap();
        assert_eq!(e.coeffs(), &rats(&[(1, 1), (1, 1), (1, 2), (1, 6)])[..]);
        let e2 = Series::exp_linear(&Rat::from_int(2), 3).unwrap();
        assert_eq!(e2.coeffs(), &rats(&[(1, 1), (2, 1), (2, 1)])[..]);
        assert_eq!(
            Series::<Rat>::exp_linear(&Rat::one(), 0),
            Err(Error::EmptyOrder)
        );
    }

    #[test]
    fn div_cancel_simple_pole() {
        // (2t + t^2) / t = 2 + t
        let num = Series::from_coeffs(rats(&[(0, 1), (2, 1), (1, 1)])).unwrap();
        let den = Series::monomial(Rat::one(), 1, 3).unwrap();
        let q = Series::div_cancel(&num, &den).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.coeffs(), &rats(&[(2, 1), (1, 1)])[..]);
    }

    #[test]
    fn div_cancel_exp_quotient() {
        // (e^{2t} - 1) / (e^t - 1) = e^t + 1
        let omega = 8;
        let one = Series::constant(Rat::one(), omega).unwrap();
        let num = Series::exp_linear(&Rat::from_int(2), omega).unwrap().sub(&one);
        let den = Series::exp_linear(&Rat::one(), omega).unwrap().sub(&one);
        let q = Series::div_cancel(&num, &den).unwrap();
        let expected = Series::exp_linear(&Rat::one(), omega)
            .unwrap()
            .add(&Series::constant(Rat::one(), omega).unwrap());
        assert!(q.agrees_with(&expected));
        assert_eq!(q.order(), omega - 1);
    }

    #[test]
    fn div_cancel_errors() {
        let num = Series::monomial(Rat::one(), 1, 4).unwrap();
        let den = Series::monomial(Rat::one(), 2, 4).unwrap();
        assert_eq!(
            Series::div_cancel(&num, &den),
            Err(Error::NonCancellingPole {
                num_zeros: 1,
                den_zeros: 2
            })
        );
        let zero = Series::zero(4).unwrap();
        assert_eq!(
            Series::div_cancel(&num, &zero),
            Err(Error::ZeroSeriesDivisor)
        );
    }

    #[test]
    fn coeff_factorial_extraction() {
        let e = Series::exp_linear(&Rat::from_int(3), 5).unwrap();
        assert_eq!(e.coeff_factorial(4).unwrap(), Rat::from_int(81));
        assert_eq!(
            e.coeff_factorial(5),
            Err(Error::OrderExceeded { index: 5, order: 5 })
        );
    }

    #[test]
    fn products_truncate_to_min_order() {
        let a = Series::exp_linear(&Rat::one(), 6).unwrap();
        let b = Series::exp_linear(&Rat::from_int(-1), 4).unwrap();
        let prod = a.mul(&b);
        assert_eq!(prod.order(), 4);
        assert!(prod.agrees_with(&Series::constant(Rat::one(), 4).unwrap()));
    }
}
