//! Exact arithmetic in cyclotomic fields Q(ζ_m).
//!
//! An element is a coefficient vector over the power basis
//! 1, ζ_m, ..., ζ_m^{φ(m)−1}, always eagerly reduced modulo the m-th
//! cyclotomic polynomial Φ_m, so equality is a coefficient comparison.
//! Rationals embed at order 1; mixed-order arithmetic first embeds both
//! operands into Q(ζ_lcm). Inversion runs the extended gcd of the
//! representative polynomial with Φ_m.

use crate::arith::{divisors, euler_phi, lcm};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::scalar::Scalar;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

static CYCLOTOMIC_CACHE: Mutex<Option<HashMap<u64, Poly<Rat>>>> = Mutex::new(None);

/// The m-th cyclotomic polynomial Φ_m, with integer coefficients and
/// degree φ(m). Computed as (x^m − 1) / Π_{d|m, d<m} Φ_d by exact division
/// and memoized; recomputation is idempotent.
pub fn cyclotomic_polynomial(m: u64) -> Poly<Rat> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = CYCLOTOMIC_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .get(&m)
    {
        return p.clone();
    }
    let result = if m == 1 {
        // x - 1
        Poly::from_coeffs(vec![Rat::from_int(-1), Rat::one()])
    } else {
        let mut num = Poly::monomial(Rat::one(), m as usize)
            .sub(&Poly::one());
        for d in divisors(m) {
            if d < m {
                num = num
                    .div_exact(&cyclotomic_polynomial(d))
                    .expect("x^m - 1 is divisible by every lower-order factor");
            }
        }
        num
    };
    debug_assert_eq!(result.degree(), Some(euler_phi(m) as usize));
    CYCLOTOMIC_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(m, result.clone());
    result
}

/// An element of Q(ζ_m): `coeffs` has length deg Φ_m = φ(m) exactly.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    fn degree_of(order: u64) -> usize {
        euler_phi(order) as usize
    }

    fn from_reduced(order: u64, poly: Poly<Rat>) -> Self {
        let deg = Self::degree_of(order);
        let mut coeffs: Vec<Rat> = poly.coeffs().to_vec();
        debug_assert!(coeffs.len() <= deg);
        coeffs.resize(deg, Rat::zero());
        Cyclotomic { order, coeffs }
    }

    fn reduce(order: u64, poly: Poly<Rat>) -> Self {
        let modulus_deg = Self::degree_of(order);
        let reduced = match poly.degree() {
            Some(d) if d >= modulus_deg => poly
                .divrem(&cyclotomic_polynomial(order))
                .expect("cyclotomic modulus is nonzero")
                .1,
            _ => poly,
        };
        Self::from_reduced(order, reduced)
    }

    /// Embed a rational (order 1).
    pub fn from_rational(r: Rat) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    /// ζ_m itself.
    pub fn zeta(order: u64) -> Self {
        Self::root_of_unity_power(order, 1)
    }

    /// ζ_m^k, reduced.
    pub fn root_of_unity_power(order: u64, k: u64) -> Self {
        assert!(order >= 1);
        let k = k % order;
        Self::reduce(order, Poly::monomial(Rat::one(), k as usize))
    }

    /// Build from an explicit coefficient vector over the power basis;
    /// reduces eagerly so any length is accepted.
    pub fn from_coeffs(order: u64, coeffs: Vec<Rat>) -> Self {
        Self::reduce(order, Poly::from_coeffs(coeffs))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn as_poly(&self) -> Poly<Rat> {
        Poly::from_coeffs(self.coeffs.clone())
    }

    /// Re-embed into Q(ζ_target); `target` must be a multiple of the order.
    pub fn promote(&self, target: u64) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target % self.order == 0,
            "promotion target must be a multiple of the source order"
        );
        let stride = (target / self.order) as usize;
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * stride] = c.clone();
        }
        Self::reduce(target, Poly::from_coeffs(coeffs))
    }

    fn common(&self, rhs: &Self) -> (Self, Self) {
        if self.order == rhs.order {
            (self.clone(), rhs.clone())
        } else {
            let m = lcm(self.order, rhs.order);
            (self.promote(m), rhs.promote(m))
        }
    }

    /// True when every coefficient above the constant one vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    /// The embedded rational, when there is one.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Cyclotomic::from_rational(Rat::one());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Scalar::mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = Scalar::mul(&base, &base);
            }
        }
        acc
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(Rat::zero())
    }

    fn one() -> Self {
        Cyclotomic::from_rational(Rat::one())
    }

    fn from_rat(r: &Rat) -> Self {
        Cyclotomic::from_rational(r.clone())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        let (a, b) = self.common(rhs);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic {
            order: a.order,
            coeffs,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Scalar::add(self, &rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.common(rhs);
        Cyclotomic::reduce(a.order, a.as_poly().mul(&b.as_poly()))
    }

    fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyclotomic {
                order: self.order,
                coeffs: {
                    let mut v = vec![Rat::zero(); self.coeffs.len()];
                    v[0] = r.recip()?;
                    v
                },
            });
        }
        let phi = cyclotomic_polynomial(self.order);
        let (g, s, _) = Poly::extended_gcd(&self.as_poly(), &phi)?;
        // Φ_m is irreducible over Q, so the gcd with a nonzero representative
        // of lower degree is a nonzero constant.
        let g0 = match g.degree() {
            Some(0) => g.coeff(0),
            _ => {
                return Err(Error::InvalidValue(
                    "cyclotomic inverse: gcd with the minimal polynomial is not constant".into(),
                ))
            }
        };
        Ok(Cyclotomic::reduce(
            self.order,
            s.scale(&g0.recip()?),
        ))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
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
                1 => write!(f, "({c})*z{}", self.order)?,
                _ => write!(f, "({c})*z{}^{i}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Wire form: { "order": m, "coeffs": ["num/den", ...] }.
#[derive(Serialize, Deserialize)]
struct CycWire {
    order: u64,
    coeffs: Vec<Rat>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycWire {
            order: self.order,
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = CycWire::deserialize(deserializer)?;
        if wire.order == 0 {
            return Err(serde::de::Error::custom("cyclotomic order must be >= 1"));
        }
        Ok(Cyclotomic::from_coeffs(wire.order, wire.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::ratio(n, d)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        // Frozen expansions; the product identity below is the independent check.
        let phi1 = cyclotomic_polynomial(1);
        assert_eq!(phi1.coeffs(), &[Rat::from_int(-1), Rat::one()]);
        let phi2 = cyclotomic_polynomial(2);
        assert_eq!(phi2.coeffs(), &[Rat::one(), Rat::one()]);
        let phi12 = cyclotomic_polynomial(12);
        assert_eq!(
            phi12.coeffs(),
            &[
                Rat::one(),
                Rat::zero(),
                Rat::from_int(-1),
                Rat::zero(),
                Rat::one()
            ]
        );
    }

    #[test]
    fn product_over_divisors_is_power_minus_one() {
        for m in 1..=24u64 {
            let mut prod = Poly::one();
            for d in divisors(m) {
                prod = prod.mul(&cyclotomic_polynomial(d));
            }
            let target = Poly::monomial(Rat::one(), m as usize).sub(&Poly::one());
            assert_eq!(prod, target, "product of divisors failed at m = {m}");
        }
    }

    #[test]
    fn divides_power_minus_one() {
        for m in 1..=24u64 {
            let target = Poly::monomial(Rat::one(), m as usize).sub(&Poly::one());
            let (_, r) = target.divrem(&cyclotomic_polynomial(m)).unwrap();
            assert!(r.is_zero(), "Phi_{m} does not divide x^{m} - 1");
        }
    }

    #[test]
    fn rational_embedding_inverse() {
        let two = Cyclotomic::from_coeffs(4, vec![rat(2, 1), Rat::zero()]);
        assert_eq!(
            two.inv().unwrap(),
            Cyclotomic::from_coeffs(4, vec![rat(1, 2), Rat::zero()])
        );
    }

    #[test]
    fn zeta4_inverse_is_negated() {
        let i = Cyclotomic::zeta(4);
        let inv = i.inv().unwrap();
        assert_eq!(inv, i.neg());
        assert_eq!(Scalar::mul(&i, &inv), Cyclotomic::one());
    }

    #[test]
    fn inverse_multiplies_back_to_one() {
        // 1 + zeta_3
        let z = Scalar::add(&Cyclotomic::one(), &Cyclotomic::zeta(3));
        let inv = z.inv().unwrap();
        assert_eq!(Scalar::mul(&z, &inv), Cyclotomic::one());
        assert_eq!(Cyclotomic::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn eager_reduction_keeps_length() {
        let z = Cyclotomic::root_of_unity_power(4, 2); // zeta_4^2 = -1
        assert_eq!(z.coeffs().len(), 2);
        assert_eq!(z.as_rational(), Some(Rat::from_int(-1)));
    }

    #[test]
    fn mixed_order_arithmetic_promotes() {
        let half = Cyclotomic::from_rational(rat(1, 2));
        let z6 = Cyclotomic::zeta(6);
        let sum = Scalar::add(&half, &z6);
        assert_eq!(sum.order(), 6);
        // zeta_6 lives in Q(zeta_12) as zeta_12^2
        let z6_in_12 = Cyclotomic::root_of_unity_power(12, 2);
        assert_eq!(z6.promote(12), z6_in_12);
        assert_eq!(z6, z6_in_12);
    }

    #[test]
    fn roots_of_unity_have_finite_order() {
        for m in [1u64, 2, 3, 4, 6, 8, 12] {
            let z = Cyclotomic::zeta(m);
            assert_eq!(z.pow(m), Cyclotomic::one());
        }
    }

    #[test]
    fn serde_round_trip() {
        let z = Cyclotomic::from_coeffs(12, vec![rat(1, 2), rat(-3, 1), Rat::zero(), rat(7, 5)]);
        let json = serde_json::to_string(&z).unwrap();
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        assert_eq!(z, back);
        assert!(json.contains("\"order\":12"));
    }
}
