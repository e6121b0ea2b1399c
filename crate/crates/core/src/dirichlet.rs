//! Dirichlet characters: unit-group bases, enumeration, evaluation, and
//! conductors.
//!
//! Enumeration order is stable across runs: the unit group (Z/dZ)^* is
//! decomposed over the ascending prime-power factors of d (smallest
//! primitive root for odd prime powers; the fixed generators −1 and 5 for
//! 2^a with a ≥ 3), and characters are indexed by their exponent vectors on
//! that basis in mixed-radix order, so index 0 is always the principal
//! character. Character values live in Q(ζ_m) with m = lcm of the basis
//! orders, one ring per modulus.

use crate::arith::{divisors, euler_phi, factorize, gcd, lcm, mod_pow};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// A direct-product decomposition of (Z/dZ)^*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroupBasis {
    pub modulus: u64,
    pub generators: Vec<u64>,
    pub orders: Vec<u64>,
}

impl UnitGroupBasis {
    /// lcm of the generator orders (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| lcm(acc, o))
    }
}

fn multiplicative_order(a: u64, modulus: u64) -> u64 {
    let phi = euler_phi(modulus);
    divisors(phi)
        .into_iter()
        .find(|&k| mod_pow(a, k, modulus) == 1)
        .expect("a is a unit, so its order divides phi")
}

fn smallest_primitive_root(q: u64) -> u64 {
    let phi = euler_phi(q);
    (2..q)
        .filter(|&g| gcd(g, q) == 1)
        .find(|&g| multiplicative_order(g, q) == phi)
        .expect("odd prime powers have primitive roots")
}

/// Generators of the prime-power component (Z/qZ)^* for q = p^e.
fn prime_power_generators(p: u64, e: u32) -> Vec<(u64, u64)> {
    let q = p.pow(e);
    if p == 2 {
        match e {
            1 => Vec::new(),
            2 => vec![(3, 2)],
            _ => vec![(q - 1, 2), (5, q / 4)],
        }
    } else {
        vec![(smallest_primitive_root(q), euler_phi(q))]
    }
}

/// The classical decomposition of (Z/dZ)^*, deterministic across runs.
pub fn unit_group_basis(d: u64) -> UnitGroupBasis {
    assert!(d >= 1);
    let mut components: Vec<(u64, Vec<(u64, u64)>)> = factorize(d)
        .into_iter()
        .map(|(p, e)| (p.pow(e), prime_power_generators(p, e)))
        .collect();
    components.sort_by_key(|(q, _)| *q);

    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (q, gens) in &components {
        let cofactor = d / q;
        for &(g, order) in gens {
            // CRT lift: ≡ g (mod q), ≡ 1 (mod d/q).
            let lifted = (0..)
                .map(|k| g + q * k)
                .find(|&x| cofactor == 1 || x % cofactor == 1)
                .expect("CRT lift exists");
            generators.push(lifted % d);
            orders.push(order);
        }
    }
    UnitGroupBasis {
        modulus: d,
        generators,
        orders,
    }
}

/// A Dirichlet character mod d, stored as its full value table.
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter {
    modulus: u64,
    index: usize,
    conductor: u64,
    exponents: Vec<u64>,
    zeta_order: u64,
    values: Vec<Cyclotomic>,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Position in the stable enumeration order of this modulus.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Exponents on the unit-group basis.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Order of the cyclotomic ring the values live in.
    pub fn zeta_order(&self) -> u64 {
        self.zeta_order
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// χ(n) for any integer, via periodicity; zero off the units.
    pub fn eval(&self, n: i64) -> Cyclotomic {
        let d = self.modulus as i64;
        let r = n.rem_euclid(d) as usize;
        self.values[r].clone()
    }

    pub fn eval_u64(&self, n: u64) -> Cyclotomic {
        self.values[(n % self.modulus) as usize].clone()
    }

    /// χ(−1) = ±1 classifies the character as even or odd.
    pub fn parity(&self) -> Parity {
        let v = self.eval(-1);
        if v == Cyclotomic::one() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// The smallest f | d such that χ(a) = 1 whenever a ≡ 1 (mod f) and
/// gcd(a, d) = 1.
pub fn conductor_of(modulus: u64, values: &[Cyclotomic]) -> u64 {
    let one = Cyclotomic::one();
    divisors(modulus)
        .into_iter()
        .find(|&f| {
            (0..modulus)
                .filter(|&a| a % f == 1 % f && gcd(a, modulus) == 1)
                .all(|a| values[a as usize] == one)
        })
        .expect("f = d always satisfies the kernel condition")
}

/// All φ(d) characters mod d, in stable index order.
pub fn enumerate_characters(d: u64) -> Vec<DirichletCharacter> {
    let basis = unit_group_basis(d);
    let zeta_order = basis.exponent();
    let phi = euler_phi(d) as usize;

    // Discrete logarithms: enumerate every exponent combination once.
    let r = basis.generators.len();
    let mut dlog: Vec<Option<Vec<u64>>> = vec![None; d as usize];
    let mut exps = vec![0u64; r];
    loop {
        let mut u = 1u64;
        for (g, e) in basis.generators.iter().zip(&exps) {
            u = u * mod_pow(*g, *e, d) % d;
        }
        let u = if d == 1 { 0 } else { u };
        debug_assert!(dlog[u as usize].is_none(), "unit hit twice: basis not direct");
        dlog[u as usize] = Some(exps.clone());
        // mixed-radix increment, last generator fastest
        let mut pos = r;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            exps[pos] += 1;
            if exps[pos] < basis.orders[pos] {
                break;
            }
            exps[pos] = 0;
        }
        if exps.iter().all(|&e| e == 0) {
            break;
        }
    }

    let ring_zero = Cyclotomic::zero().promote(zeta_order);
    let mut characters = Vec::with_capacity(phi);
    let mut char_exps = vec![0u64; r];
    for index in 0..phi {
        let mut values = Vec::with_capacity(d as usize);
        for n in 0..d.max(1) {
            let value = match &dlog[n as usize] {
                None => ring_zero.clone(),
                Some(xs) => {
                    let mut total = 0u64;
                    for ((x, e), order) in xs.iter().zip(&char_exps).zip(&basis.orders) {
                        total = (total + x * e % zeta_order * (zeta_order / order)) % zeta_order;
                    }
                    Cyclotomic::root_of_unity_power(zeta_order, total)
                }
            };
            values.push(value);
        }
        let conductor = conductor_of(d, &values);
        characters.push(DirichletCharacter {
            modulus: d,
            index,
            conductor,
            exponents: char_exps.clone(),
            zeta_order,
            values,
        });
        // next exponent vector, same mixed-radix order as the dlog pass
        let mut pos = r;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            char_exps[pos] += 1;
            if char_exps[pos] < basis.orders[pos] {
                break;
            }
            char_exps[pos] = 0;
        }
    }
    characters
}

/// The character at a given enumeration index.
pub fn character_by_index(d: u64, index: usize) -> Result<DirichletCharacter> {
    let phi = euler_phi(d);
    if index as u64 >= phi {
        return Err(Error::CharacterIndex {
            modulus: d,
            index,
            phi,
        });
    }
    Ok(enumerate_characters(d).swap_remove(index))
}
