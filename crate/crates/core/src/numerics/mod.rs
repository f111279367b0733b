//! Entropy functionals, exact log-combinations and rational polynomials.

mod logcomb;
mod poly;
pub(crate) mod potential;

pub use logcomb::LogCombination;
pub use poly::{certify_positive, Certificate, Positivity, Rational, RationalPolynomial};
pub use potential::{
    entropy, entropy_from_potential, increment, increment_by_integral, integral_of_ln_shift,
    potential, shifted_xlogx, shifted_xlogx_exact, xlogx, EntropyParams,
};
