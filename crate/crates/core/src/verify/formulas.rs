//! Closed forms for the quantities compared when a minimum-degree vertex is
//! peeled from an extremal graph.
//!
//! With `v` a vertex of minimum degree `b` in a graph of size `m`:
//!
//! * [`neighbourhood_bound`] bounds `h_c(G) - h_c(G - v)` from above
//!   (called LHS below);
//! * [`star_gain`] is `h_c(K_{1,m}) - h_c(K_{1,m-b})` (RHS).
//!
//! At the smallest admissible size `m = C(b+1, 2)` they reduce to
//! [`boundary_bound`] (LL) and [`boundary_star_gain`] (RL).

use crate::numerics::potential::fc;
use crate::{Error, Result};

pub(crate) fn choose2(x: f64) -> f64 {
    x * (x - 1.0) / 2.0
}

fn delta(x: f64, c: f64) -> f64 {
    fc(x, c) - fc(x - 1.0, c)
}

/// `f_c(b) - f_c(0) + b Δ_c((m + C(b,2)) / b)`, for `b >= 2` and
/// `m >= C(b+1, 2)`.
pub fn neighbourhood_bound(m: u64, b: u64, c: u32) -> Result<f64> {
    if b < 2 {
        return Err(Error::Domain("minimum degree must be at least 2"));
    }
    let min_m = b * (b + 1) / 2;
    if m < min_m {
        return Err(Error::SizeBelowMinimum { m, b, min_m });
    }
    let (mf, bf, cf) = (m as f64, b as f64, f64::from(c));
    let mean = (mf + choose2(bf)) / bf;
    Ok(fc(bf, cf) - fc(0.0, cf) + bf * delta(mean, cf))
}

/// `f_c(m) - f_c(m - b) + b (f_c(1) - f_c(0))`, for `b >= 1` and `m > b`.
pub fn star_gain(m: u64, b: u64, c: u32) -> Result<f64> {
    if b < 1 {
        return Err(Error::Domain("b must be at least 1"));
    }
    if m <= b {
        return Err(Error::Domain("star gain needs m > b"));
    }
    let (mf, bf, cf) = (m as f64, b as f64, f64::from(c));
    Ok(fc(mf, cf) - fc(mf - bf, cf) + bf * delta(1.0, cf))
}

/// `star_gain - neighbourhood_bound`.
pub fn peel_gap(m: u64, b: u64, c: u32) -> Result<f64> {
    Ok(star_gain(m, b, c)? - neighbourhood_bound(m, b, c)?)
}

/// Derivative in `m` of [`peel_gap`]:
/// `ln((m+c)/(m-b+c)) - ln((m+C(b,2)+bc)/(m+C(b,2)+bc-b))`.
pub fn peel_gap_slope(m: f64, b: f64, c: f64) -> f64 {
    let z = m + choose2(b) + b * c;
    libm::log((m + c) / (m - b + c)) - libm::log(z / (z - b))
}

fn check_boundary_args(b: f64, c: f64) -> Result<()> {
    if b.is_nan() || c.is_nan() || b < 2.0 || c < 1.0 {
        return Err(Error::Domain("boundary quantities need b >= 2 and c >= 1"));
    }
    Ok(())
}

/// LL: `(b+1) f_c(b) - f_c(0) - b f_c(b-1)`. Real `b` is allowed.
pub fn boundary_bound(b: f64, c: f64) -> Result<f64> {
    check_boundary_args(b, c)?;
    Ok((b + 1.0) * fc(b, c) - fc(0.0, c) - b * fc(b - 1.0, c))
}

/// RL: `f_c(C(b+1,2)) - f_c(C(b,2)) + b (f_c(1) - f_c(0))`. Real `b` is
/// allowed, with `C(x, 2) = x(x-1)/2`.
pub fn boundary_star_gain(b: f64, c: f64) -> Result<f64> {
    check_boundary_args(b, c)?;
    Ok(fc(choose2(b + 1.0), c) - fc(choose2(b), c) + b * delta(1.0, c))
}

/// `RL - LL`.
pub fn boundary_gap(b: f64, c: f64) -> Result<f64> {
    Ok(boundary_star_gain(b, c)? - boundary_bound(b, c)?)
}

/// Closed-form `d/db` of [`boundary_star_gain`].
pub fn boundary_star_gain_slope(b: f64, c: f64) -> f64 {
    (2.0 * b + 1.0) / 2.0 * (libm::log(choose2(b + 1.0) + c) + 1.0)
        - (2.0 * b - 1.0) / 2.0 * (libm::log(choose2(b) + c) + 1.0)
        + delta(1.0, c)
}

/// Closed-form `d/db` of [`boundary_bound`].
pub fn boundary_bound_slope(b: f64, c: f64) -> f64 {
    (b + 1.0) * (libm::log(b + c) + 1.0) - b * (libm::log(b + c - 1.0) + 1.0) + delta(b, c)
}

/// The three terms whose sum is `d/db (RL - LL)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeTerm {
    /// `(2b-1)/2 · ln[(C(b+1,2)+c)(b+c-1)^2 / ((C(b,2)+c)(b+c)^2)]`
    Binomial,
    /// `c · (ln(c+1) - ln c - ln(b+c) + ln(b+c-1))`
    Shift,
    /// `ln(C(b+1,2)+c) + ln(c+1) - 2 ln(b+c)`
    Remainder,
}

pub fn slope_term(term: SlopeTerm, b: f64, c: f64) -> f64 {
    let ln = libm::log;
    match term {
        SlopeTerm::Binomial => {
            (2.0 * b - 1.0) / 2.0
                * (ln(choose2(b + 1.0) + c) - ln(choose2(b) + c) - 2.0 * ln(b + c)
                    + 2.0 * ln(b + c - 1.0))
        }
        SlopeTerm::Shift => c * (ln(c + 1.0) - ln(c) - ln(b + c) + ln(b + c - 1.0)),
        SlopeTerm::Remainder => ln(choose2(b + 1.0) + c) + ln(c + 1.0) - 2.0 * ln(b + c),
    }
}

pub fn slope_terms_sum(b: f64, c: f64) -> f64 {
    [SlopeTerm::Binomial, SlopeTerm::Shift, SlopeTerm::Remainder]
        .into_iter()
        .map(|t| slope_term(t, b, c))
        .sum()
}

/// `g(b,c) = 2(b-3)bc + 2(b-2)c^2 + b + 2c - b^2`; the binomial slope
/// term is positive exactly when `g > 0`.
pub fn binomial_sign_polynomial(b: i64, c: i64) -> i64 {
    2 * (b - 3) * b * c + 2 * (b - 2) * c * c + b + 2 * c - b * b
}

/// The same quantity before simplification:
/// `(b^2+b+2c)(b+c-1)^2 - (b^2-b+2c)(b+c)^2`.
pub fn binomial_sign_polynomial_unexpanded(b: i64, c: i64) -> i128 {
    let (b, c) = (i128::from(b), i128::from(c));
    (b * b + b + 2 * c) * (b + c - 1) * (b + c - 1) - (b * b - b + 2 * c) * (b + c) * (b + c)
}

/// Central finite difference with step `h`.
pub fn central_difference<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}
