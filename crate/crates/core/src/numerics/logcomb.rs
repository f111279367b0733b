use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigUint;

use crate::{Error, Result};

/// An exact real number of the form `Σ a_p · ln p` with integer `a_p` over
/// distinct primes `p`.
///
/// Logarithms of distinct primes are linearly independent over the
/// rationals, so two combinations are equal as reals exactly when their
/// coefficient maps agree. Ordering is exact as well: the sign of
/// `Σ a_p ln p` is the sign of `Π p^{a_p} - 1`, which is decided on big
/// integers whenever the floating estimate is too close to call.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LogCombination {
    coeffs: BTreeMap<u64, i64>,
}

impl LogCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ln n` for a positive integer `n`.
    pub fn ln_of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("ln 0 is undefined"));
        }
        let mut out = Self::zero();
        for (p, e) in factorize(n) {
            out.add_term(p, i64::from(e));
        }
        Ok(out)
    }

    /// `n ln n`, with `0 ln 0 = 0`.
    pub fn x_ln_x(n: u64) -> Self {
        if n <= 1 {
            return Self::zero();
        }
        let scale = i64::try_from(n).expect("argument fits in i64");
        let mut out = Self::zero();
        for (p, e) in factorize(n) {
            out.add_term(p, scale * i64::from(e));
        }
        out
    }

    /// Builds a combination from explicit `(prime, coefficient)` pairs.
    /// Repeated primes accumulate.
    pub fn from_prime_coefficients<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let mut out = Self::zero();
        for (p, a) in pairs {
            if !is_prime(p) {
                return Err(Error::Domain("log-combination keys must be primes"));
            }
            out.add_term(p, a);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: u64, a: i64) {
        if a == 0 {
            return;
        }
        let slot = self.coeffs.entry(p).or_insert(0);
        *slot += a;
        if *slot == 0 {
            self.coeffs.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `ln p`; zero for primes not present.
    pub fn coefficient(&self, p: u64) -> i64 {
        self.coeffs.get(&p).copied().unwrap_or(0)
    }

    /// Non-zero `(prime, coefficient)` pairs in increasing prime order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&p, &a)| (p, a))
    }

    /// Floating approximation, accurate to a few ulps of `Σ |a_p| ln p`.
    pub fn approx(&self) -> f64 {
        self.terms()
            .map(|(p, a)| a as f64 * libm::log(p as f64))
            .sum()
    }

    fn magnitude_bound(&self) -> f64 {
        self.terms()
            .map(|(p, a)| libm::fabs(a as f64) * libm::log(p as f64))
            .sum()
    }

    /// Exact sign of the represented real.
    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let approx = self.approx();
        // Summation error is far below 1e-12 relative for any realistic
        // number of terms; inside that band fall back to big integers.
        if libm::fabs(approx) > 1e-12 * self.magnitude_bound() {
            return if approx > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        let mut positive = BigUint::from(1u32);
        let mut negative = BigUint::from(1u32);
        for (p, a) in self.terms() {
            let exp = u32::try_from(a.unsigned_abs()).expect("coefficient exponent fits in u32");
            let power = BigUint::from(p).pow(exp);
            if a > 0 {
                positive *= power;
            } else {
                negative *= power;
            }
        }
        positive.cmp(&negative)
    }
}

impl Ord for LogCombination {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self.clone() - other.clone()).signum()
    }
}

impl PartialOrd for LogCombination {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for LogCombination {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for LogCombination {
    fn add_assign(&mut self, rhs: Self) {
        for (p, a) in rhs.coeffs {
            self.add_term(p, a);
        }
    }
}

impl Neg for LogCombination {
    type Output = Self;
    fn neg(mut self) -> Self {
        for a in self.coeffs.values_mut() {
            *a = -*a;
        }
        self
    }
}

impl Sub for LogCombination {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul<i64> for LogCombination {
    type Output = Self;
    fn mul(mut self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        for a in self.coeffs.values_mut() {
            *a *= k;
        }
        self
    }
}

impl Sum for LogCombination {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

/// Renders as `16·ln2 + 6·ln3`; the zero combination renders as `0`.
impl fmt::Display for LogCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, a)) in self.terms().enumerate() {
            let sign = if a < 0 { "-" } else { "+" };
            match (i, a < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{}·ln{p}", a.unsigned_abs())?;
        }
        Ok(())
    }
}

/// Prime factorisation by trial division, primes ascending.
pub(crate) fn factorize(mut n: u64) -> alloc::vec::Vec<(u64, u32)> {
    let mut out = alloc::vec::Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).as_slice() == [(n, 1)]
}
