//! Generalized Euler and Genocchi polynomials attached to a Dirichlet
//! character of even modulus, and alternating twisted power sums.
//!
//! Sign convention: every alternating weight here is (−1)^{l−1}, i.e. the
//! l = 0 term enters with a minus sign. Under that convention the twisted
//! Euler values E_{n,χ}(0) come out as the NEGATIVE of the values most
//! tables use (for the nontrivial character mod 4 they are the negated
//! secant numbers −1, 0, 1, 0, −5, ...). No sign fixes are applied anywhere.
//!
//! The closed form G_{n,χ}(x) = 2·d^{n−1}·Σ_{l<d} (−1)^{l−1} χ(l) B_n((l+x)/d)
//! is the primary route; the generating-function quotients
//! 2·Σ(−1)^{l−1}χ(l)e^{(l+x)t} / (e^{dt}−1) (and t times it) are the
//! independent series oracles. For the principal character the Euler-side
//! quotient has a genuine non-cancelling pole (its numerator does not vanish
//! at t = 0), so the series route reports an error there; the Genocchi-side
//! quotient carries an explicit factor t and works for every character.

use crate::classical::{bernoulli_poly, int_pow};
use crate::cyclotomic::Cyclotomic;
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::scalar::Scalar;
use crate::series::Series;

fn require_even(chi: &DirichletCharacter) -> Result<u64> {
    let d = chi.modulus();
    if d % 2 != 0 {
        return Err(Error::OddModulus(d));
    }
    Ok(d)
}

/// (−1)^{l−1} as a rational sign.
fn alt_sign(l: u64) -> Rat {
    if l % 2 == 0 {
        Rat::from_int(-1)
    } else {
        Rat::one()
    }
}

/// G_{n,χ}(x) = 2·d^{n−1}·Σ_{l=0}^{d−1} (−1)^{l−1} χ(l) B_n((l+x)/d),
/// expanded exactly over the character's cyclotomic ring.
pub fn gen_genocchi_poly(n: usize, chi: &DirichletCharacter) -> Result<Poly<Cyclotomic>> {
    let d = require_even(chi)?;
    let d_rat = Rat::from_int(d as i64);
    let bn = bernoulli_poly(n);
    let inv_d = d_rat.recip()?;
    let mut acc: Poly<Cyclotomic> = Poly::zero();
    for l in 0..d {
        let chi_l = chi.eval_u64(l);
        if Scalar::is_zero(&chi_l) {
            continue;
        }
        // B_n((l + x)/d) as a rational polynomial, then lifted.
        let composed = bn.compose_affine(&(&Rat::from_int(l as i64) * &inv_d), &inv_d);
        let weight = Scalar::mul(&chi_l, &Cyclotomic::from_rational(alt_sign(l)));
        acc = acc.add(&composed.map(Cyclotomic::from_rat).scale(&weight));
    }
    let scale = &Rat::from_int(2) * &d_rat.pow(n as i64 - 1)?;
    Ok(acc.scale(&Cyclotomic::from_rational(scale)))
}

/// E_{n,χ}(x) = G_{n+1,χ}(x) / (n+1).
pub fn gen_euler_poly(n: usize, chi: &DirichletCharacter) -> Result<Poly<Cyclotomic>> {
    let g = gen_genocchi_poly(n + 1, chi)?;
    let scale = Cyclotomic::from_rational(Rat::from_int((n + 1) as i64).recip()?);
    Ok(g.scale(&scale))
}

/// T_{k,χ}(n) = Σ_{l=0}^{n} (−1)^{l−1} χ(l) l^k, with χ extended by
/// periodicity and 0^0 = 1.
pub fn twisted_power_sum(k: usize, chi: &DirichletCharacter, upper: u64) -> Cyclotomic {
    let mut acc = Cyclotomic::zero();
    for l in 0..=upper {
        let chi_l = chi.eval_u64(l);
        if Scalar::is_zero(&chi_l) {
            continue;
        }
        let term = &alt_sign(l) * &Rat::from_bigint(int_pow(l, k));
        acc = Scalar::add(&acc, &Scalar::mul(&chi_l, &Cyclotomic::from_rational(term)));
    }
    acc
}

/// 2·Σ_{l<d} (−1)^{l−1} χ(l) e^{(l+x)t}, the shared numerator of both
/// generating-function quotients, to the given order.
fn twisted_numerator(chi: &DirichletCharacter, x: &Rat, order: usize) -> Result<Series<Cyclotomic>> {
    let d = chi.modulus();
    let mut num = Series::zero(order)?;
    for l in 0..d {
        let chi_l = chi.eval_u64(l);
        if Scalar::is_zero(&chi_l) {
            continue;
        }
        let exponent = Cyclotomic::from_rational(&Rat::from_int(l as i64) + x);
        let e = Series::exp_linear(&exponent, order)?;
        let weight = Scalar::mul(&chi_l, &Cyclotomic::from_rational(alt_sign(l)));
        num = num.add(&e.scale(&weight));
    }
    Ok(num.scale(&Cyclotomic::from_rational(Rat::from_int(2))))
}

/// The quotient 2Σ(−1)^{l−1}χ(l)e^{(l+x)t} / (e^{dt}−1) + O(t^omega); its
/// n-th coefficient times n! is E_{n,χ}(x). Errors with a non-cancelling
/// pole for the principal character.
pub fn gen_euler_series(
    chi: &DirichletCharacter,
    x: &Rat,
    omega: usize,
) -> Result<Series<Cyclotomic>> {
    let d = require_even(chi)?;
    let num = twisted_numerator(chi, x, omega + 1)?;
    let one = Series::constant(Cyclotomic::one(), omega + 1)?;
    let den = Series::exp_linear(&Cyclotomic::from_rational(Rat::from_int(d as i64)), omega + 1)?
        .sub(&one);
    Series::div_cancel(&num, &den)
}

/// The quotient 2tΣ(−1)^{l−1}χ(l)e^{(l+x)t} / (e^{dt}−1) + O(t^omega); its
/// n-th coefficient times n! is G_{n,χ}(x). Works for every character of
/// even modulus (the explicit factor t cancels the pole).
pub fn gen_genocchi_series(
    chi: &DirichletCharacter,
    x: &Rat,
    omega: usize,
) -> Result<Series<Cyclotomic>> {
    let d = require_even(chi)?;
    let base = twisted_numerator(chi, x, omega + 1)?;
    // multiply by t: shift coefficients up by one
    let mut coeffs = base.coeffs().to_vec();
    coeffs.pop();
    coeffs.insert(0, Cyclotomic::zero());
    let num = Series::from_coeffs(coeffs)?;
    let one = Series::constant(Cyclotomic::one(), omega + 1)?;
    let den = Series::exp_linear(&Cyclotomic::from_rational(Rat::from_int(d as i64)), omega + 1)?
        .sub(&one);
    Series::div_cancel(&num, &den)
}

/// A generalized polynomial tagged with the character it belongs to;
/// the CLI's table rows.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedPolynomial {
    pub degree: usize,
    pub modulus: u64,
    pub char_index: usize,
    pub poly: Poly<Cyclotomic>,
}

impl TwistedPolynomial {
    pub fn euler(n: usize, chi: &DirichletCharacter) -> Result<Self> {
        Ok(TwistedPolynomial {
            degree: n,
            modulus: chi.modulus(),
            char_index: chi.index(),
            poly: gen_euler_poly(n, chi)?,
        })
    }

    pub fn genocchi(n: usize, chi: &DirichletCharacter) -> Result<Self> {
        Ok(TwistedPolynomial {
            degree: n,
            modulus: chi.modulus(),
            char_index: chi.index(),
            poly: gen_genocchi_poly(n, chi)?,
        })
    }
}

/// An alternating twisted power sum value with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedPowerSum {
    pub exponent: usize,
    pub modulus: u64,
    pub char_index: usize,
    pub upper: u64,
    pub value: Cyclotomic,
}

impl TwistedPowerSum {
    pub fn new(k: usize, chi: &DirichletCharacter, upper: u64) -> Self {
        TwistedPowerSum {
            exponent: k,
            modulus: chi.modulus(),
            char_index: chi.index(),
            upper,
            value: twisted_power_sum(k, chi, upper),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::enumerate_characters;

    fn chars4() -> Vec<DirichletCharacter> {
        enumerate_characters(4)
    }

    fn embedded(n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(Rat::from_int(n))
    }

    #[test]
    fn genocchi_zero_degree() {
        let chars = chars4();
        // principal: G_0 = (2/d)·phi(d) = 1, NOT zero
        let g0_principal = gen_genocchi_poly(0, &chars[0]).unwrap();
        assert_eq!(g0_principal, Poly::constant(embedded(1)));
        // nontrivial: the alternating character sum vanishes
        let g0 = gen_genocchi_poly(0, &chars[1]).unwrap();
        assert!(g0.is_zero());
    }

    #[test]
    fn genocchi_degree_one_value() {
        let chi = &chars4()[1];
        let g1 = gen_genocchi_poly(1, chi).unwrap();
        assert_eq!(g1.eval(&Cyclotomic::zero()), embedded(-1));
    }

    #[test]
    fn odd_modulus_rejected() {
        let chi = &enumerate_characters(3)[1];
        assert_eq!(gen_genocchi_poly(2, chi), Err(Error::OddModulus(3)));
        assert_eq!(gen_euler_poly(2, chi), Err(Error::OddModulus(3)));
        assert!(gen_euler_series(chi, &Rat::zero(), 4).is_err());
    }

    #[test]
    fn euler_genocchi_relation() {
        for d in [4u64, 8, 12] {
            for chi in enumerate_characters(d) {
                for n in 0..=12 {
                    let e = gen_euler_poly(n, &chi).unwrap();
                    let g = gen_genocchi_poly(n + 1, &chi).unwrap();
                    let scaled = e.scale(&embedded((n + 1) as i64));
                    assert_eq!(scaled, g, "relation failed at d = {d}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn euler_values_negated_secant() {
        let chi = &chars4()[1];
        let expected: [i64; 9] = [-1, 0, 1, 0, -5, 0, 61, 0, -1385];
        for (n, &v) in expected.iter().enumerate() {
            let e = gen_euler_poly(n, chi).unwrap();
            assert_eq!(e.eval(&Cyclotomic::zero()), embedded(v), "n = {n}");
        }
    }

    #[test]
    fn euler_series_oracle_matches_closed_form() {
        // sample the generating function at n+1 integer points
        for d in [4u64, 8] {
            for chi in enumerate_characters(d) {
                if chi.is_principal() {
                    continue;
                }
                for n in 0..=10usize {
                    let closed = gen_euler_poly(n, &chi).unwrap();
                    for j in 0..=n {
                        let x = Rat::from_int(j as i64);
                        let series = gen_euler_series(&chi, &x, n + 1).unwrap();
                        let series_value = series.coeff_factorial(n).unwrap();
                        let closed_value = closed.eval(&Cyclotomic::from_rational(x));
                        assert_eq!(series_value, closed_value, "d = {d}, n = {n}, x = {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn euler_series_pole_for_principal() {
        let chi = &chars4()[0];
        match gen_euler_series(chi, &Rat::zero(), 4) {
            Err(Error::NonCancellingPole { .. }) => {}
            other => panic!("expected a non-cancelling pole, got {other:?}"),
        }
    }

    #[test]
    fn genocchi_series_works_for_every_character() {
        for chi in chars4() {
            for n in 0..=5usize {
                let closed = gen_genocchi_poly(n, &chi).unwrap();
                for j in 0..=n {
                    let x = Rat::from_int(j as i64);
                    let series = gen_genocchi_series(&chi, &x, n + 1).unwrap();
                    assert_eq!(
                        series.coeff_factorial(n).unwrap(),
                        closed.eval(&Cyclotomic::from_rational(x)),
                        "index = {}, n = {n}, x = {j}",
                        chi.index()
                    );
                }
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        let chars = chars4();
        let nontrivial = &chars[1];
        let principal = &chars[0];
        assert_eq!(twisted_power_sum(0, nontrivial, 3), Cyclotomic::zero());
        assert_eq!(twisted_power_sum(1, nontrivial, 3), embedded(-2));
        assert_eq!(twisted_power_sum(1, principal, 3), embedded(4));
    }

    #[test]
    fn power_sum_brute_force_oracle() {
        // literal loop written against eval(), independent of the fast path's
        // unit filtering
        let chi = &enumerate_characters(8)[3];
        for k in 0..=5usize {
            for upper in [0u64, 1, 7, 15, 23] {
                let mut acc = Cyclotomic::zero();
                for l in 0..=upper {
                    let sign = if l % 2 == 0 { -1 } else { 1 };
                    let term = Scalar::mul(
                        &chi.eval(l as i64),
                        &Cyclotomic::from_rational(
                            &Rat::from_int(sign) * &Rat::from_bigint(int_pow(l, k)),
                        ),
                    );
                    acc = Scalar::add(&acc, &term);
                }
                assert_eq!(acc, twisted_power_sum(k, chi, upper), "k = {k}, upper = {upper}");
            }
        }
    }

    #[test]
    fn shift_identity_small_grid() {
        // E_{k,χ}(d·n) − E_{k,χ}(0) = 2·T_{k,χ}(d·n − 1)
        for d in [4u64, 8] {
            for chi in enumerate_characters(d) {
                for n in 1..=3u64 {
                    for k in 0..=8usize {
                        let e = gen_euler_poly(k, &chi).unwrap();
                        let at_dn = e.eval(&Cyclotomic::from_rational(Rat::from_int((d * n) as i64)));
                        let at_zero = e.eval(&Cyclotomic::zero());
                        let lhs = Scalar::sub(&at_dn, &at_zero);
                        let t = twisted_power_sum(k, &chi, d * n - 1);
                        let rhs = Scalar::mul(&t, &embedded(2));
                        assert_eq!(lhs, rhs, "d = {d}, idx = {}, n = {n}, k = {k}", chi.index());
                    }
                }
            }
        }
    }
}
