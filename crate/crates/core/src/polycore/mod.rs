//! Exact multivariate polynomial arithmetic over Q and Gröbner-basis
//! algorithms: reduction, ideal equality, elimination, saturation, powers.

mod groebner;
mod ideal;
mod monomial;
mod parse;
mod polynomial;
mod ring;
mod ringmap;

pub use groebner::{buchberger, buchberger_in, normal_form, with_basis_store, BasisStore, GroebnerBasis};
pub use ideal::{eliminate, fresh_name, ideal_equal, ideal_power, saturate, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_with_product, ExprError};
pub use polynomial::Polynomial;
pub use ring::Ring;
pub use ringmap::RingMap;

/// Exact rational coefficient, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    MixedRings,
    #[error("cannot saturate at the zero polynomial")]
    ZeroSaturant,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("empty generator list carries no ring")]
    EmptyGenerators,
}
