//! Document types the CLI emits. Everything serializes to JSON with exact
//! string values ("num/den" rationals, {order, coeffs} cyclotomics) and
//! re-parses into equal values; CSV rendering lives in the CLI.

use crate::classical::{bernoulli_number, bernoulli_poly, euler_number, euler_poly, genocchi_number, genocchi_poly};
use crate::cyclotomic::Cyclotomic;
use crate::dirichlet::{enumerate_characters, DirichletCharacter, Parity};
use crate::error::Result;
use crate::fermionic::{convergence_rows, ConvergenceRow};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::twisted::{gen_euler_poly, gen_genocchi_poly, twisted_power_sum};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumberRow {
    pub n: usize,
    pub bernoulli: Rat,
    pub euler: Rat,
    pub genocchi: Rat,
}

/// `numbers` document: the three sequences side by side.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumbersDoc {
    pub max_degree: usize,
    pub rows: Vec<NumberRow>,
}

pub fn numbers_doc(max_degree: usize) -> NumbersDoc {
    let rows = (0..=max_degree)
        .map(|n| NumberRow {
            n,
            bernoulli: bernoulli_number(n),
            euler: euler_number(n),
            genocchi: genocchi_number(n),
        })
        .collect();
    NumbersDoc { max_degree, rows }
}

fn rat_coeffs(p: &Poly<Rat>) -> Vec<Rat> {
    p.coeffs().to_vec()
}

fn cyc_coeffs(p: &Poly<Cyclotomic>) -> Vec<Cyclotomic> {
    p.coeffs().to_vec()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyRow {
    pub n: usize,
    /// Coefficient vectors, index = degree.
    pub bernoulli: Vec<Rat>,
    pub euler: Vec<Rat>,
    pub genocchi: Vec<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gen_euler: Option<Vec<Cyclotomic>>,
}

/// `poly` document: coefficient vectors up to the degree cap, optionally
/// with the character-twisted Euler polynomials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub character: Option<CharacterEntry>,
    pub rows: Vec<PolyRow>,
}

pub fn poly_doc(max_degree: usize, chi: Option<&DirichletCharacter>) -> Result<PolyDoc> {
    let mut rows = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let gen_euler = match chi {
            Some(chi) => Some(cyc_coeffs(&gen_euler_poly(n, chi)?)),
            None => None,
        };
        rows.push(PolyRow {
            n,
            bernoulli: rat_coeffs(&bernoulli_poly(n)),
            euler: rat_coeffs(&euler_poly(n)),
            genocchi: rat_coeffs(&genocchi_poly(n)),
            gen_euler,
        });
    }
    Ok(PolyDoc {
        max_degree,
        character: chi.map(CharacterEntry::from),
        rows,
    })
}

/// Serialized character: modulus, stable index, conductor, parity, values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub modulus: u64,
    pub index: usize,
    pub conductor: u64,
    pub parity: Parity,
    pub values: Vec<Cyclotomic>,
}

impl From<&DirichletCharacter> for CharacterEntry {
    fn from(chi: &DirichletCharacter) -> Self {
        CharacterEntry {
            modulus: chi.modulus(),
            index: chi.index(),
            conductor: chi.conductor(),
            parity: chi.parity(),
            values: chi.values().to_vec(),
        }
    }
}

/// `chars` document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharactersDoc {
    pub modulus: u64,
    pub characters: Vec<CharacterEntry>,
}

pub fn characters_doc(modulus: u64) -> CharactersDoc {
    CharactersDoc {
        modulus,
        characters: enumerate_characters(modulus)
            .iter()
            .map(CharacterEntry::from)
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistedPolyRow {
    pub n: usize,
    pub gen_euler: Vec<Cyclotomic>,
    pub gen_genocchi: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerSumRow {
    pub k: usize,
    pub upper: u64,
    pub value: Cyclotomic,
}

/// `twisted` document: E_{n,χ}, G_{n,χ} coefficient tables and alternating
/// power sums T_{k,χ}(j·d − 1) for j = 1..=3.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistedDoc {
    pub character: CharacterEntry,
    pub rows: Vec<TwistedPolyRow>,
    pub power_sums: Vec<PowerSumRow>,
}

pub fn twisted_doc(chi: &DirichletCharacter, max_degree: usize) -> Result<TwistedDoc> {
    let mut rows = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        rows.push(TwistedPolyRow {
            n,
            gen_euler: cyc_coeffs(&gen_euler_poly(n, chi)?),
            gen_genocchi: cyc_coeffs(&gen_genocchi_poly(n, chi)?),
        });
    }
    let d = chi.modulus();
    let mut power_sums = Vec::new();
    for k in 0..=max_degree {
        for j in 1..=3u64 {
            let upper = j * d - 1;
            power_sums.push(PowerSumRow {
                k,
                upper,
                value: twisted_power_sum(k, chi, upper),
            });
        }
    }
    Ok(TwistedDoc {
        character: CharacterEntry::from(chi),
        rows,
        power_sums,
    })
}

/// `fermionic` document: the valuation table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FermionicDoc {
    pub p: u64,
    pub max_degree: usize,
    pub level_max: u32,
    pub rows: Vec<ConvergenceRow>,
}

pub fn fermionic_doc(p: u64, max_degree: usize, level_max: u32) -> Result<FermionicDoc> {
    let mut rows = Vec::new();
    for n in 0..=max_degree {
        rows.extend(convergence_rows(p, n, level_max)?);
    }
    Ok(FermionicDoc {
        p,
        max_degree,
        level_max,
        rows,
    })
}
