//! Bernoulli, Euler and Genocchi numbers and polynomials, each available by
//! two independent routes: the defining recurrences and the generating
//! functions t/(e^t−1), 2/(e^t+1), 2t/(e^t+1).
//!
//! Conventions pinned here:
//! - B_1 = −1/2 (the t/(e^t−1) convention).
//! - The Euler numbers are rational: E_n = E_n(0), so E_1 = −1/2. They are
//!   NOT the integer secant numbers tabulated elsewhere (those are the values
//!   2^n·E_n(1/2)); keep the two apart when cross-checking against other
//!   libraries.
//! - G_n(x) = n·E_{n−1}(x) with G_0 = 0.
//! - 0^0 = 1 in every power sum and polynomial evaluation.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::series::Series;
use num_bigint::BigInt;
use num_traits::One;
use std::sync::Mutex;

static BINOMIAL_ROWS: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());
static BERNOULLI: Mutex<Vec<Rat>> = Mutex::new(Vec::new());
static EULER: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// C(n, k) by the Pascal recurrence, memoized row by row.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut rows = BINOMIAL_ROWS.lock().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let mut row = vec![BigInt::one(); m + 1];
        for j in 1..m {
            row[j] = &rows[m - 1][j - 1] + &rows[m - 1][j];
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

pub fn binomial_rat(n: usize, k: usize) -> Rat {
    Rat::from_bigint(binomial(n, k))
}

/// l^n with the 0^0 = 1 convention.
pub fn int_pow(base: u64, exp: usize) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

/// Exact B_n, t/(e^t−1) convention: B_0 = 1 and
/// Σ_{k=0}^{n} C(n+1,k)·B_k = 0 for n ≥ 1.
pub fn bernoulli_number(n: usize) -> Rat {
    {
        let cache = BERNOULLI.lock().unwrap();
        if let Some(v) = cache.get(n) {
            return v.clone();
        }
    }
    let mut cache = BERNOULLI.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        let mut acc = Rat::zero();
        for (k, b) in cache.iter().enumerate() {
            acc = &acc + &(&binomial_rat(m + 1, k) * b);
        }
        let value = -(acc / Rat::from_int((m + 1) as i64));
        cache.push(value);
    }
    cache[n].clone()
}

/// Exact E_n: E_0 = 1 and E_n = −(1/2)·Σ_{k<n} C(n,k)·E_k.
pub fn euler_number(n: usize) -> Rat {
    {
        let cache = EULER.lock().unwrap();
        if let Some(v) = cache.get(n) {
            return v.clone();
        }
    }
    let mut cache = EULER.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        let mut acc = Rat::zero();
        for (k, e) in cache.iter().enumerate() {
            acc = &acc + &(&binomial_rat(m, k) * e);
        }
        cache.push(&Rat::ratio(-1, 2) * &acc);
    }
    cache[n].clone()
}

/// G_n = n·E_{n−1}; G_0 = 0.
pub fn genocchi_number(n: usize) -> Rat {
    if n == 0 {
        Rat::zero()
    } else {
        &Rat::from_int(n as i64) * &euler_number(n - 1)
    }
}

/// B_n(x) = Σ C(n,k)·B_k·x^{n−k}; degree exactly n.
pub fn bernoulli_poly(n: usize) -> Poly<Rat> {
    let coeffs = (0..=n)
        .map(|deg| &binomial_rat(n, n - deg) * &bernoulli_number(n - deg))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// E_n(x) = Σ C(n,k)·E_k·x^{n−k}; satisfies E_n(x+1) + E_n(x) = 2x^n.
pub fn euler_poly(n: usize) -> Poly<Rat> {
    let coeffs = (0..=n)
        .map(|deg| &binomial_rat(n, n - deg) * &euler_number(n - deg))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// G_0(x) = 0; G_n(x) = n·E_{n−1}(x) for n ≥ 1.
pub fn genocchi_poly(n: usize) -> Poly<Rat> {
    if n == 0 {
        Poly::zero()
    } else {
        euler_poly(n - 1).scale(&Rat::from_int(n as i64))
    }
}

/// The n-th moment of the alternating measure expressed through Bernoulli
/// polynomials: (2d^n/(n+1))·Σ_{l=0}^{d−1} (−1)^{l−1}·B_{n+1}(l/d).
/// Independent of the even modulus d (it equals E_n).
pub fn moment(n: usize, d: u64) -> Result<Rat> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::BadMomentModulus(d));
    }
    let bn1 = bernoulli_poly(n + 1);
    let mut acc = Rat::zero();
    for l in 0..d {
        let v = bn1.eval(&Rat::ratio(l as i64, d as i64));
        acc = if l % 2 == 0 { &acc - &v } else { &acc + &v };
    }
    let scale = &Rat::from_int(2)
        * &(&Rat::from_int(d as i64).pow(n as i64)? / &Rat::from_int((n + 1) as i64));
    Ok(&scale * &acc)
}

/// Σ_{l=0}^{d−1} (−1)^{l−1}·l^n with 0^0 = 1.
pub fn alternating_power_sum(d: u64, n: usize) -> Rat {
    let mut acc = BigInt::from(0);
    for l in 0..d {
        let term = int_pow(l, n);
        if l % 2 == 0 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Rat::from_bigint(acc)
}

/// t/(e^t−1) + O(t^omega): plain coefficients B_n/n!.
pub fn bernoulli_series(omega: usize) -> Series<Rat> {
    let num = Series::monomial(Rat::one(), 1, omega + 1).expect("omega >= 1");
    let one = Series::constant(Rat::one(), omega + 1).expect("omega >= 1");
    let den = Series::exp_linear(&Rat::one(), omega + 1)
        .expect("omega >= 1")
        .sub(&one);
    Series::div_cancel(&num, &den).expect("t/(e^t - 1) has a cancelling pole")
}

/// 2/(e^t+1) + O(t^omega): plain coefficients E_n/n!.
pub fn euler_series(omega: usize) -> Series<Rat> {
    let num = Series::constant(Rat::from_int(2), omega).expect("omega >= 1");
    let one = Series::constant(Rat::one(), omega).expect("omega >= 1");
    let den = Series::exp_linear(&Rat::one(), omega)
        .expect("omega >= 1")
        .add(&one);
    Series::div_cancel(&num, &den).expect("denominator has unit constant term")
}

/// 2t/(e^t+1) + O(t^omega): plain coefficients G_n/n!.
pub fn genocchi_series(omega: usize) -> Series<Rat> {
    let num = Series::monomial(Rat::from_int(2), 1, omega).expect("omega >= 1");
    let one = Series::constant(Rat::one(), omega).expect("omega >= 1");
    let den = Series::exp_linear(&Rat::one(), omega)
        .expect("omega >= 1")
        .add(&one);
    Series::div_cancel(&num, &den).expect("denominator has unit constant term")
}

/// The alternating exponential-sum quotient
/// 2·Σ_{l<d}(−1)^{l−1}e^{lt} / (e^{dt}−1) + O(t^omega), for even d. It equals
/// 2/(e^t+1) identically; the verifiers check that coefficient-wise.
pub fn euler_alternating_series(d: u64, omega: usize) -> Result<Series<Rat>> {
    if d % 2 != 0 || d == 0 {
        return Err(Error::OddModulus(d));
    }
    let mut num = Series::zero(omega + 1)?;
    for l in 0..d {
        let e = Series::exp_linear(&Rat::from_int(l as i64), omega + 1)?;
        num = if l % 2 == 0 { num.sub(&e) } else { num.add(&e) };
    }
    num = num.scale(&Rat::from_int(2));
    let one = Series::constant(Rat::one(), omega + 1)?;
    let den = Series::exp_linear(&Rat::from_int(d as i64), omega + 1)?.sub(&one);
    Series::div_cancel(&num, &den)
}

/// Which classical sequence a table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    Bernoulli,
    Euler,
    Genocchi,
}

impl SequenceKind {
    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Bernoulli => "bernoulli",
            SequenceKind::Euler => "euler",
            SequenceKind::Genocchi => "genocchi",
        }
    }
}

/// A prefix of one of the three sequences, indexed by n.
#[derive(Clone, Debug)]
pub struct SequenceTable {
    pub kind: SequenceKind,
    pub values: Vec<Rat>,
}

impl SequenceTable {
    pub fn new(kind: SequenceKind, max_degree: usize) -> Self {
        let f: fn(usize) -> Rat = match kind {
            SequenceKind::Bernoulli => bernoulli_number,
            SequenceKind::Euler => euler_number,
            SequenceKind::Genocchi => genocchi_number,
        };
        SequenceTable {
            kind,
            values: (0..=max_degree).map(f).collect(),
        }
    }

    /// The same prefix extracted from the sequence's generating function,
    /// the independent route used by the oracle-equivalence suite.
    pub fn from_series(kind: SequenceKind, max_degree: usize) -> Self {
        let series = match kind {
            SequenceKind::Bernoulli => bernoulli_series(max_degree + 1),
            SequenceKind::Euler => euler_series(max_degree + 1),
            SequenceKind::Genocchi => genocchi_series(max_degree + 1),
        };
        let values = (0..=max_degree)
            .map(|n| series.coeff_factorial(n).expect("order covers max_degree"))
            .collect();
        SequenceTable { kind, values }
    }
}
