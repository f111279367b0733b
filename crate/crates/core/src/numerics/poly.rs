use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Univariate polynomial with exact rational coefficients, lowest power
/// first. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `t + a`.
    pub fn linear(a: Rational) -> Self {
        Self::from_coeffs(alloc::vec![a, Rational::one()])
    }

    /// `t + a` for an integer `a`.
    pub fn linear_int(a: i64) -> Self {
        Self::linear(int(a))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `q(t) = p(t + s)`, computed exactly by Horner's rule in the ring of
    /// polynomials.
    pub fn shift(&self, s: &Rational) -> Self {
        let step = Self::linear(s.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &step) + &Self::constant(c.clone())
        })
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RationalPolynomial::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: Self) -> RationalPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

/// Renders as `3t^5 + 29t^4 - 106t - 96`, highest power first.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Evidence that `p(t) > 0` for every `t > t0`: the shifted polynomial
/// `q(t) = p(t + t0)` is non-zero with only non-negative coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub polynomial: RationalPolynomial,
    pub t0: Rational,
    pub shifted: RationalPolynomial,
}

impl Certificate {
    /// Re-validates the certificate without reusing the shift routine:
    /// `q` must have non-negative coefficients and agree with `p(t0 + k)` at
    /// `k = 0, 1, ..., deg + 1`, which pins down `q(t) = p(t + t0)`.
    pub fn check(&self) -> bool {
        if self.shifted.is_zero() || self.shifted.coeffs().iter().any(Signed::is_negative) {
            return false;
        }
        let deg = self
            .polynomial
            .degree()
            .unwrap_or(0)
            .max(self.shifted.degree().unwrap_or(0));
        (0..=deg + 1).all(|k| {
            let k = int(k as i64);
            self.polynomial.eval(&(&self.t0 + &k)) == self.shifted.eval(&k)
        })
    }
}

/// Outcome of [`certify_positive`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    Certified(Certificate),
    /// Some shifted coefficient is negative (or the polynomial is zero);
    /// nothing is claimed either way.
    Inconclusive {
        shifted: RationalPolynomial,
    },
}

impl Positivity {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Positivity::Certified(c) => Some(c),
            Positivity::Inconclusive { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.certificate().is_some()
    }
}

/// Tries to prove `p(t) > 0` for all `t > t0` by checking that
/// `p(t + t0)` has non-negative coefficients and is not identically zero.
pub fn certify_positive(p: &RationalPolynomial, t0: &Rational) -> Positivity {
    let shifted = p.shift(t0);
    if !shifted.is_zero() && shifted.coeffs().iter().all(|c| !c.is_negative()) {
        Positivity::Certified(Certificate {
            polynomial: p.clone(),
            t0: t0.clone(),
            shifted,
        })
    } else {
        Positivity::Inconclusive { shifted }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn lin(a: i64) -> RationalPolynomial {
        RationalPolynomial::linear_int(a)
    }

    #[test]
    fn shift_examples() {
        let t = RationalPolynomial::t();
        assert_eq!(t.shift(&int(1)), lin(1));
        let sq = t.pow(2);
        assert_eq!(
            sq.shift(&int(-2)),
            RationalPolynomial::from_i64(&[4, -4, 1])
        );
    }

    #[test]
    fn degree_six_shift_matches_binomial_expansion() {
        // (t+6)(t+5)(t+4)(t+1)^3 - (t+3)^3 (t+2)^3, shifted by 2
        let p = &(&(&(&lin(6) * &lin(5)) * &lin(4)) * &lin(1).pow(3))
            - &(&lin(3).pow(3) * &lin(2).pow(3));
        assert_eq!(p, RationalPolynomial::from_i64(&[-96, -106, 39, 83, 29, 3]));
        assert_eq!(
            p.shift(&int(2)),
            RationalPolynomial::from_i64(&[1072, 2214, 1473, 435, 59, 3])
        );
    }

    #[test]
    fn certify_examples() {
        let p = &(&lin(1) * &lin(4)) - &lin(2).pow(2);
        assert_eq!(p, RationalPolynomial::t());
        let cert = certify_positive(&p, &int(1));
        let c = cert.certificate().expect("certified");
        assert_eq!(c.shifted, lin(1));
        assert!(c.check());

        let half = Rational::new(BigInt::from(5), BigInt::from(2));
        let p = &(&(&lin(4) * &lin(3)) * &lin(1))
            - &(&RationalPolynomial::linear(half).pow(2) * &lin(2));
        assert!(certify_positive(&p, &int(1)).is_certified());

        let neg = RationalPolynomial::from_i64(&[-1]);
        for t0 in [-5, 0, 3, 100] {
            assert!(!certify_positive(&neg, &int(t0)).is_certified());
        }
        assert!(!certify_positive(&RationalPolynomial::zero(), &int(0)).is_certified());
    }

    #[test]
    fn tampered_certificate_fails_check() {
        let p = RationalPolynomial::from_i64(&[-4, 5, 9, 2]);
        let mut cert = certify_positive(&p, &int(1))
            .certificate()
            .cloned()
            .unwrap();
        assert!(cert.check());
        cert.shifted = &cert.shifted + &RationalPolynomial::from_i64(&[0, 1]);
        assert!(!cert.check());
    }

    #[test]
    fn display() {
        let p = RationalPolynomial::from_i64(&[-96, -106, 39, 83, 29, 3]);
        assert_eq!(p.to_string(), "3t^5 + 29t^4 + 83t^3 + 39t^2 - 106t - 96");
        let q = RationalPolynomial::from_coeffs(alloc::vec![
            Rational::new(BigInt::from(-1), BigInt::from(2)),
            int(0),
            int(1)
        ]);
        assert_eq!(q.to_string(), "t^2 - (1/2)");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }
}
