//! Exact sparse multivariate polynomials in lex order, Buchberger's
//! algorithm, and Hilbert series of monomial ideals.

mod field;
mod groebner;
mod hilbert;
mod monomial;
mod polynomial;
mod series;

pub use field::{Field, PrimeField, Rationals};
pub use groebner::{
    buchberger, buchberger_with, is_groebner_basis, is_quadratic_basis, is_reduced, reduce_basis, BuchbergerOptions,
};
pub use hilbert::{hilbert_numerator, hilbert_series};
pub use monomial::{var_name, Monomial};
pub use polynomial::{PolyRing, Polynomial};
pub use series::{series_inverse, series_mul, PowerSeries};

/// Default truncation order for series comparisons.
pub const DEFAULT_TRUNCATION: usize = 12;
