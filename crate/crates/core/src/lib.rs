//! Kostka–Foulkes polynomials for the root system `C_n`, computed both from
//! the q-analogue of Kostant's partition function and through a charge
//! statistic on symplectic tableaux.

pub mod crystal;
pub mod cyclage;
pub mod enumerate;
pub mod error;
pub mod insertion;
pub mod kostant;
pub mod plactic;
pub mod poly;
pub mod recurrences;
pub mod tableau;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{Coefficient, QPolynomial};

/// Polynomials with machine-integer coefficients.
pub type Poly = QPolynomial<i64>;
/// Polynomials with arbitrary-precision coefficients.
pub type BigPoly = QPolynomial<num_bigint::BigInt>;
