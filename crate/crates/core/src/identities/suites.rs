//! Parameter grids and suite execution.
//!
//! Default grids match the project's acceptance ranges. A `SuiteOptions`
//! value narrows them (single modulus, lower degree cap, one character, one
//! (w1, w2, x) tuple); invalid narrowing values are rejected before anything
//! runs. Certificates are emitted in canonical nested-loop order, so a
//! report is byte-identical across runs.

use super::*;
use crate::certificate::{FullReport, VerificationReport};
use crate::classical::SequenceKind;
use crate::dirichlet::enumerate_characters;
use crate::fermionic::{verify_convergence, verify_shift_equation};

pub const SUITE_NAMES: [&str; 9] = [
    "sequences",
    "theorem1",
    "theorem2",
    "theorem3",
    "theorem4",
    "theorem5",
    "twisted-shift",
    "fermionic",
    "shift",
];

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub modulus: Option<u64>,
    pub max_degree: Option<usize>,
    pub char_index: Option<usize>,
    pub w1: Option<u64>,
    pub w2: Option<u64>,
    pub x: Option<Rat>,
    pub p: Option<u64>,
    pub level: Option<u32>,
    /// Widen the theorem5 grid to the principal character, whose
    /// certificates fail by design (the identity does not hold there).
    pub include_principal: bool,
}

impl SuiteOptions {
    fn moduli(&self, default: &[u64]) -> Result<Vec<u64>> {
        match self.modulus {
            None => Ok(default.to_vec()),
            Some(d) if d % 2 == 0 && d > 0 => Ok(vec![d]),
            Some(d) => Err(Error::OddModulus(d)),
        }
    }

    fn degrees(&self, default_max: usize) -> Vec<usize> {
        (0..=self.max_degree.unwrap_or(default_max)).collect()
    }

    fn primes(&self) -> Result<Vec<u64>> {
        match self.p {
            None => Ok(vec![3, 5, 7]),
            Some(p) if p != 2 && crate::arith::is_prime(p) => Ok(vec![p]),
            Some(p) => Err(Error::NotOddPrime(p)),
        }
    }

    fn weights(&self, which: &Option<u64>) -> Result<Vec<u64>> {
        match which {
            None => Ok(vec![1, 2, 3]),
            Some(0) => Err(Error::InvalidValue("w1 and w2 must be at least 1".into())),
            Some(w) => Ok(vec![*w]),
        }
    }

    fn sample_points(&self) -> Vec<Rat> {
        match &self.x {
            Some(x) => vec![x.clone()],
            None => vec![Rat::zero(), Rat::ratio(1, 2)],
        }
    }

    fn characters_of(&self, d: u64) -> Result<Vec<DirichletCharacter>> {
        let all = enumerate_characters(d);
        match self.char_index {
            None => Ok(all),
            Some(i) if i < all.len() => Ok(vec![all.into_iter().nth(i).expect("bounds checked")]),
            Some(i) => Err(Error::CharacterIndex {
                modulus: d,
                index: i,
                phi: all.len() as u64,
            }),
        }
    }
}

fn grid_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn join_u64(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn run_sequences(opts: &SuiteOptions) -> VerificationReport {
    let max = opts.max_degree.unwrap_or(40);
    let certs = [
        SequenceKind::Bernoulli,
        SequenceKind::Euler,
        SequenceKind::Genocchi,
    ]
    .into_iter()
    .map(|kind| verify_sequence_oracle(kind, max))
    .collect();
    VerificationReport::new(
        "sequences",
        grid_of(&[
            ("kind", "bernoulli,euler,genocchi".into()),
            ("n", format!("0..={max}")),
        ]),
        certs,
    )
}

pub fn run_theorem1(opts: &SuiteOptions) -> Result<VerificationReport> {
    let moduli = opts.moduli(&[2, 4, 6, 8, 10])?;
    let degrees = opts.degrees(20);
    let mut certs = Vec::new();
    for &d in &moduli {
        for &n in &degrees {
            certs.push(verify_theorem1(d, n));
        }
    }
    if moduli.len() > 1 {
        for &n in &degrees {
            certs.push(verify_theorem1_d_independence(&moduli, n));
        }
    }
    Ok(VerificationReport::new(
        "theorem1",
        grid_of(&[
            ("d", join_u64(&moduli)),
            ("n", format!("0..={}", degrees.len() - 1)),
        ]),
        certs,
    ))
}

pub fn run_theorem2(opts: &SuiteOptions) -> Result<VerificationReport> {
    let moduli = opts.moduli(&[2, 4, 6, 8, 10])?;
    let degrees = opts.degrees(20);
    let mut certs = Vec::new();
    for &d in &moduli {
        for &n in &degrees {
            certs.push(verify_theorem2(d, n));
        }
    }
    Ok(VerificationReport::new(
        "theorem2",
        grid_of(&[
            ("d", join_u64(&moduli)),
            ("n", format!("0..={}", degrees.len() - 1)),
        ]),
        certs,
    ))
}

pub fn run_theorem3(opts: &SuiteOptions) -> Result<VerificationReport> {
    let moduli = opts.moduli(&[2, 4, 6, 8])?;
    let degrees = opts.degrees(15);
    let mut certs = Vec::new();
    for &d in &moduli {
        for &n in &degrees {
            certs.push(verify_theorem3(d, n));
        }
    }
    Ok(VerificationReport::new(
        "theorem3",
        grid_of(&[
            ("d", join_u64(&moduli)),
            ("n", format!("0..={}", degrees.len() - 1)),
        ]),
        certs,
    ))
}

pub fn run_theorem4(opts: &SuiteOptions) -> Result<VerificationReport> {
    let moduli = opts.moduli(&[4, 8, 12])?;
    let degrees = opts.degrees(10);
    let mut certs = Vec::new();
    for &d in &moduli {
        for chi in opts.characters_of(d)? {
            for &n in &degrees {
                certs.push(verify_theorem4(&chi, n));
            }
        }
    }
    Ok(VerificationReport::new(
        "theorem4",
        grid_of(&[
            ("modulus", join_u64(&moduli)),
            ("characters", "all".into()),
            ("n", format!("0..={}", degrees.len() - 1)),
        ]),
        certs,
    ))
}

pub fn run_theorem5(opts: &SuiteOptions) -> Result<VerificationReport> {
    let moduli = opts.moduli(&[4, 8])?;
    let degrees = opts.degrees(8);
    let w1s = opts.weights(&opts.w1)?;
    let w2s = opts.weights(&opts.w2)?;
    let xs = opts.sample_points();
    let max_n = *degrees.last().expect("degree range is never empty");
    let mut certs = Vec::new();
    for &d in &moduli {
        for chi in opts.characters_of(d)? {
            if chi.is_principal() && !opts.include_principal {
                continue;
            }
            for &w1 in &w1s {
                for &w2 in &w2s {
                    for x in &xs {
                        certs.push(verify_kernel_symmetry(&chi, w1, w2, x, max_n + 2));
                        for &n in &degrees {
                            certs.push(verify_theorem5(&chi, w1, w2, n, x));
                        }
                    }
                }
            }
        }
    }
    Ok(VerificationReport::new(
        "theorem5",
        grid_of(&[
            ("modulus", join_u64(&moduli)),
            (
                "characters",
                if opts.include_principal {
                    "all (principal certificates fail by design)".into()
                } else {
                    "non-principal".into()
                },
            ),
            ("w1", join_u64(&w1s)),
            ("w2", join_u64(&w2s)),
            ("N", format!("0..={max_n}")),
            (
                "x",
                xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            ),
        ]),
        certs,
    ))
}

pub fn run_twisted_shift(opts: &SuiteOptions) -> Result<VerificationReport> {
    let moduli = opts.moduli(&[4, 8])?;
    let ks = opts.degrees(8);
    let mut certs = Vec::new();
    for &d in &moduli {
        for chi in opts.characters_of(d)? {
            for n in 1..=3u64 {
                for &k in &ks {
                    certs.push(verify_twisted_shift(&chi, n, k));
                }
            }
        }
    }
    Ok(VerificationReport::new(
        "twisted-shift",
        grid_of(&[
            ("modulus", join_u64(&moduli)),
            ("characters", "all".into()),
            ("n", "1..=3".into()),
            ("k", format!("0..={}", ks.len() - 1)),
        ]),
        certs,
    ))
}

pub fn run_fermionic(opts: &SuiteOptions) -> Result<VerificationReport> {
    let primes = opts.primes()?;
    let degrees = opts.degrees(8);
    let level = opts.level.unwrap_or(5);
    if level < 1 {
        return Err(Error::InvalidValue("level must be at least 1".into()));
    }
    let mut certs = Vec::new();
    for &p in &primes {
        for &n in &degrees {
            certs.push(verify_convergence(p, n, level));
        }
    }
    Ok(VerificationReport::new(
        "fermionic",
        grid_of(&[
            ("p", join_u64(&primes)),
            ("n", format!("0..={}", degrees.len() - 1)),
            ("level", format!("1..={level}")),
        ]),
        certs,
    ))
}

pub fn run_shift(opts: &SuiteOptions) -> Result<VerificationReport> {
    let ks = opts.degrees(8);
    let max_shift = opts.level.map(u64::from).unwrap_or(10).max(1);
    let mut certs = Vec::new();
    for n_shift in 1..=max_shift {
        for &k in &ks {
            certs.push(verify_shift_equation(n_shift, k));
        }
    }
    Ok(VerificationReport::new(
        "shift",
        grid_of(&[
            ("n_shift", format!("1..={max_shift}")),
            ("k", format!("0..={}", ks.len() - 1)),
        ]),
        certs,
    ))
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    match name {
        "sequences" => Ok(run_sequences(opts)),
        "theorem1" => run_theorem1(opts),
        "theorem2" => run_theorem2(opts),
        "theorem3" => run_theorem3(opts),
        "theorem4" => run_theorem4(opts),
        "theorem5" => run_theorem5(opts),
        "twisted-shift" => run_twisted_shift(opts),
        "fermionic" => run_fermionic(opts),
        "shift" => run_shift(opts),
        other => Err(Error::InvalidValue(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

/// Every suite with the given options, in canonical order.
pub fn run_all(opts: &SuiteOptions) -> Result<FullReport> {
    let mut suites = Vec::with_capacity(SUITE_NAMES.len());
    for name in SUITE_NAMES {
        suites.push(run_suite(name, opts)?);
    }
    Ok(FullReport::new(suites))
}
