//! Finite-level alternating partial sums Σ_{j<p^N} (−1)^j f(j) and the
//! checks that tie them to Euler polynomials.
//!
//! No limit is ever taken: each level N is compared against the closed form
//! (E_n(p^N) + E_n)/2, exactly, and the p-adic valuation of the distance to
//! E_n is required to reach N. The Euler denominators are powers of 2 and p
//! is odd, so the valuation statement is well posed.

use crate::certificate::{params_of, CertStatus, IdentityCertificate};
use crate::classical::{alternating_power_sum, euler_number, euler_poly, int_pow};
use crate::cyclotomic::Cyclotomic;
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// What is being summed.
#[derive(Clone, Debug, PartialEq)]
pub enum Integrand {
    /// f(x) = x^n over the range 0 ≤ j < p^N.
    Monomial { degree: usize },
    /// f(x) = χ(x)·x^n over the range 0 ≤ j < d·p^N, χ periodic mod d.
    Twisted {
        character: DirichletCharacter,
        degree: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartialSumSpec {
    pub integrand: Integrand,
    pub p: u64,
    pub level: u32,
}

/// Either scalar kind a partial sum can produce.
#[derive(Clone, Debug, PartialEq)]
pub enum SumValue {
    Rational(Rat),
    Cyclotomic(Cyclotomic),
}

impl fmt::Display for SumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumValue::Rational(r) => write!(f, "{r}"),
            SumValue::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !crate::arith::is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

/// Σ_{0≤j<p^N} (−1)^j j^n, computed exactly (an integer).
pub fn monomial_partial_sum(p: u64, level: u32, degree: usize) -> Result<Rat> {
    require_odd_prime(p)?;
    if level < 1 {
        return Err(Error::InvalidValue("level must be at least 1".into()));
    }
    let bound = p.pow(level);
    let mut acc = BigInt::zero();
    for j in 0..bound {
        let term = int_pow(j, degree);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(Rat::from_bigint(acc))
}

/// Σ_{0≤j<d·p^N} (−1)^j χ(j) j^n, computed exactly. Requires gcd(p, d) = 1.
pub fn twisted_partial_sum(
    p: u64,
    level: u32,
    chi: &DirichletCharacter,
    degree: usize,
) -> Result<Cyclotomic> {
    require_odd_prime(p)?;
    if level < 1 {
        return Err(Error::InvalidValue("level must be at least 1".into()));
    }
    let d = chi.modulus();
    if crate::arith::gcd(p, d) != 1 {
        return Err(Error::PrimeDividesModulus { p, modulus: d });
    }
    let bound = d * p.pow(level);
    let mut acc = Cyclotomic::zero();
    for j in 0..bound {
        let chi_j = chi.eval_u64(j);
        if Scalar::is_zero(&chi_j) {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let term = &Rat::from_int(sign) * &Rat::from_bigint(int_pow(j, degree));
        acc = Scalar::add(&acc, &Scalar::mul(&chi_j, &Cyclotomic::from_rational(term)));
    }
    Ok(acc)
}

pub fn partial_sum(spec: &PartialSumSpec) -> Result<SumValue> {
    match &spec.integrand {
        Integrand::Monomial { degree } => {
            monomial_partial_sum(spec.p, spec.level, *degree).map(SumValue::Rational)
        }
        Integrand::Twisted { character, degree } => {
            twisted_partial_sum(spec.p, spec.level, character, *degree).map(SumValue::Cyclotomic)
        }
    }
}

/// The exponent of p in a rational; +infinity for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, n: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => v >= n,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

fn int_valuation(mut n: BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// v_p(q) = v_p(numerator) − v_p(denominator); +infinity for 0.
pub fn padic_valuation(q: &Rat, p: u64) -> Result<Valuation> {
    if !crate::arith::is_prime(p) {
        return Err(Error::InvalidValue(format!("{p} is not prime")));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(q.numer().clone(), &p) - int_valuation(q.denom().clone(), &p),
    ))
}

/// A row of the valuation table the CLI prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub p: u64,
    pub n: usize,
    pub level: u32,
    pub partial_sum: Rat,
    pub euler_value: Rat,
    pub closed_form: Rat,
    pub valuation: Valuation,
}

/// All levels 1..=level_max for fixed (p, n), computed in one pass over
/// 0 ≤ j < p^level_max with snapshots at each power of p.
pub fn convergence_rows(p: u64, n: usize, level_max: u32) -> Result<Vec<ConvergenceRow>> {
    require_odd_prime(p)?;
    if level_max < 1 {
        return Err(Error::InvalidValue("level must be at least 1".into()));
    }
    let en = euler_number(n);
    let en_poly = euler_poly(n);
    let mut rows = Vec::with_capacity(level_max as usize);
    let mut acc = BigInt::zero();
    let mut j = 0u64;
    for level in 1..=level_max {
        let bound = p.pow(level);
        while j < bound {
            let term = int_pow(j, n);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            j += 1;
        }
        let partial = Rat::from_bigint(acc.clone());
        let shifted = en_poly.eval(&Rat::from_int(bound as i64));
        let closed = &(&shifted + &en) * &Rat::ratio(1, 2);
        let valuation = padic_valuation(&(&partial - &en), p)?;
        rows.push(ConvergenceRow {
            p,
            n,
            level,
            partial_sum: partial,
            euler_value: en.clone(),
            closed_form: closed,
            valuation,
        });
    }
    Ok(rows)
}

/// Certificate: for every N ≤ level_max, the partial sum equals
/// (E_n(p^N) + E_n)/2 exactly and v_p(partial − E_n) ≥ N.
pub fn verify_convergence(p: u64, n: usize, level_max: u32) -> IdentityCertificate {
    let params = params_of(&[
        ("p", p.to_string()),
        ("n", n.to_string()),
        ("level_max", level_max.to_string()),
    ]);
    let rows = match convergence_rows(p, n, level_max) {
        Ok(rows) => rows,
        Err(e) => return IdentityCertificate::error("convergence", params, e.to_string()),
    };
    let lhs: Vec<String> = rows.iter().map(|r| r.partial_sum.to_string()).collect();
    let rhs: Vec<String> = rows.iter().map(|r| r.closed_form.to_string()).collect();
    let mut status = CertStatus::Pass;
    let mut first_mismatch = None;
    for row in &rows {
        if row.partial_sum != row.closed_form {
            status = CertStatus::Fail;
            first_mismatch = Some(format!("closed form differs at level {}", row.level));
            break;
        }
        if !row.valuation.at_least(row.level as i64) {
            status = CertStatus::Fail;
            first_mismatch = Some(format!(
                "valuation {} < level {}",
                row.valuation, row.level
            ));
            break;
        }
    }
    IdentityCertificate {
        theorem: "convergence".into(),
        params,
        lhs: lhs.join(","),
        rhs: rhs.join(","),
        status,
        first_mismatch,
    }
}

/// Certificate for the shift equations with f = x^k:
/// E_k(s) + (−1)^{s−1}·E_k = 2·Σ_{l=0}^{s−1} (−1)^{s−1−l}·l^k.
pub fn verify_shift_equation(n_shift: u64, k: usize) -> IdentityCertificate {
    let params = params_of(&[("n_shift", n_shift.to_string()), ("k", k.to_string())]);
    if n_shift < 1 {
        return IdentityCertificate::error(
            "shift",
            params,
            "shift must be at least 1".into(),
        );
    }
    let ek = euler_number(k);
    let ek_at = euler_poly(k).eval(&Rat::from_int(n_shift as i64));
    let lhs = if n_shift % 2 == 1 {
        &ek_at + &ek
    } else {
        &ek_at - &ek
    };
    // Σ (−1)^{s−1−l} l^k = (−1)^{s−1} Σ (−1)^{−l} l^k; for odd s the weight
    // of l is (−1)^l, for even s it is (−1)^{l−1}.
    let alternating = alternating_power_sum(n_shift, k);
    let signed_sum = if n_shift % 2 == 1 {
        -&alternating
    } else {
        alternating
    };
    let rhs = &Rat::from_int(2) * &signed_sum;
    let status = if lhs == rhs {
        CertStatus::Pass
    } else {
        CertStatus::Fail
    };
    IdentityCertificate {
        theorem: "shift".into(),
        params,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        status,
        first_mismatch: (status == CertStatus::Fail).then(|| "sides differ".to_string()),
    }
}
