//! Exact-arithmetic toolkit for Bernoulli, Euler and Genocchi numbers and
//! polynomials, their Dirichlet-character-twisted generalizations, and
//! machine-checkable verification certificates for the identities relating
//! them.
//!
//! Everything is computed over exact rationals or cyclotomic numbers; there
//! is no floating point anywhere. Each identity family is checked by
//! comparing independently computed routes (recurrence vs. generating
//! function, closed form vs. series expansion), and every check produces a
//! deterministic [`certificate::IdentityCertificate`].

pub mod arith;
pub mod certificate;
pub mod classical;
pub mod cyclotomic;
pub mod dirichlet;
pub mod error;
pub mod fermionic;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod tables;
pub mod twisted;

pub use certificate::{CertStatus, IdentityCertificate, VerificationReport};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use dirichlet::{enumerate_characters, unit_group_basis, DirichletCharacter, UnitGroupBasis};
pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::Rat;
pub use scalar::Scalar;
pub use series::Series;
