use crate::degseq::DegreeSequence;
use crate::{Error, Result};

use super::LogCombination;

/// Shift, size and padding order for a potential comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EntropyParams {
    /// Additive shift `c` applied to every degree.
    pub shift: u32,
    /// Number of edges `m`.
    pub size: u64,
    /// Common vertex count all candidates are padded to with isolated
    /// vertices.
    pub padding: usize,
}

/// `x ln x` with the limit convention `0 ln 0 = 0`.
pub fn xlogx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * libm::log(x)
    }
}

/// Real-argument form of `(x + c) ln (x + c)` used by the inequality checks;
/// callers guarantee `x + c >= 0`.
pub(crate) fn fc(x: f64, c: f64) -> f64 {
    xlogx(x + c)
}

/// `(x + c) ln (x + c)` for `x >= 0`.
pub fn shifted_xlogx(x: f64, c: u32) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain("argument must be a non-negative real"));
    }
    Ok(fc(x, f64::from(c)))
}

/// Exact `(x + c) ln (x + c)` for integer arguments.
pub fn shifted_xlogx_exact(x: u64, c: u64) -> LogCombination {
    LogCombination::x_ln_x(x + c)
}

/// Forward difference `f_c(x) - f_c(x - 1)` for real `x >= 1`.
pub fn increment(x: f64, c: u32) -> Result<f64> {
    if x.is_nan() || x < 1.0 {
        return Err(Error::Domain("forward difference needs x >= 1"));
    }
    let c = f64::from(c);
    Ok(fc(x, c) - fc(x - 1.0, c))
}

/// The same forward difference written as `1 + ∫_{x+c-1}^{x+c} ln t dt`.
pub fn increment_by_integral(x: f64, c: u32) -> Result<f64> {
    if x.is_nan() || x < 1.0 {
        return Err(Error::Domain("forward difference needs x >= 1"));
    }
    let c = f64::from(c);
    Ok(1.0 + integral_of_ln_shift(x, c - 1.0, c))
}

/// `∫_lo^hi ln(t + a) dt`, requiring `lo + a >= 0`.
pub fn integral_of_ln_shift(a: f64, lo: f64, hi: f64) -> f64 {
    let antiderivative = |y: f64| xlogx(y) - y;
    antiderivative(hi + a) - antiderivative(lo + a)
}

/// First degree-based entropy `-Σ (d_i / 2m) ln(d_i / 2m)`.
pub fn entropy(seq: &DegreeSequence) -> Result<f64> {
    let total = seq.sum();
    if total == 0 {
        return Err(Error::NoEdges);
    }
    if total % 2 == 1 {
        return Err(Error::OddDegreeSum(total));
    }
    let total = total as f64;
    Ok(-seq
        .degrees()
        .iter()
        .filter(|&&d| d > 0)
        .map(|&d| {
            let p = f64::from(d) / total;
            p * libm::log(p)
        })
        .sum::<f64>())
}

/// `ln(2m) - h(G) / 2m`, the entropy recovered from the `c = 0` potential.
pub fn entropy_from_potential(degree_sum: u64, potential: f64) -> f64 {
    let s = degree_sum as f64;
    libm::log(s) - potential / s
}

/// Exact potential `Σ f_c(d_i) + (N - k) f_c(0)` where `k` counts positive
/// degrees and `N` is the padding order.
///
/// Zero entries of `seq` are treated as padding; for `c <= 1` the padding
/// term vanishes.
pub fn potential(seq: &DegreeSequence, shift: u32, padding: usize) -> Result<LogCombination> {
    let positive = seq.positive_len();
    if padding < positive {
        return Err(Error::PaddingTooSmall {
            padding,
            required: positive,
        });
    }
    let c = u64::from(shift);
    let body: LogCombination = seq
        .degrees()
        .iter()
        .filter(|&&d| d > 0)
        .map(|&d| shifted_xlogx_exact(u64::from(d), c))
        .sum();
    let isolated = i64::try_from(padding - positive).expect("padding fits in i64");
    Ok(body + shifted_xlogx_exact(0, c) * isolated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[u32]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec())
    }

    #[test]
    fn shifted_xlogx_examples() {
        let v = shifted_xlogx(3.0, 1).unwrap();
        assert!((v - 4.0 * libm::log(4.0)).abs() < 1e-15);
        assert!((v - 5.545177).abs() < 1e-6);
        assert_eq!(shifted_xlogx(0.0, 0).unwrap(), 0.0);
        let c7 = shifted_xlogx(0.0, 7).unwrap();
        assert!((c7 - 7.0 * libm::log(7.0)).abs() < 1e-14);
        assert!(shifted_xlogx(-0.5, 1).is_err());
        assert!(shifted_xlogx(f64::NAN, 1).is_err());
    }

    #[test]
    fn exact_examples() {
        assert_eq!(
            shifted_xlogx_exact(3, 1),
            LogCombination::from_prime_coefficients([(2, 8)]).unwrap()
        );
        assert_eq!(
            shifted_xlogx_exact(5, 1),
            LogCombination::from_prime_coefficients([(2, 6), (3, 6)]).unwrap()
        );
        assert!(shifted_xlogx_exact(0, 1).is_zero());
    }

    #[test]
    fn increment_examples() {
        let a = increment(1.0, 1).unwrap();
        assert!((a - 2.0 * libm::log(2.0)).abs() < 1e-15);
        assert!((a - 1.386294).abs() < 1e-6);
        let b = increment(2.0, 1).unwrap();
        assert!((b - 1.909543).abs() < 1e-6);
        assert!(increment(0.5, 1).is_err());
        assert!(increment(2.5, 2).unwrap() > increment(2.0, 2).unwrap());
    }

    #[test]
    fn entropy_examples() {
        let tri = entropy(&seq(&[2, 2, 2])).unwrap();
        assert!((tri - libm::log(3.0)).abs() < 1e-15);
        let s4 = entropy(&seq(&[3, 1, 1, 1])).unwrap();
        assert!((s4 - (libm::log(2.0) + 0.5 * libm::log(3.0))).abs() < 1e-15);
        assert!((s4 - 1.242453).abs() < 1e-6);
        let s5 = entropy(&seq(&[4, 1, 1, 1, 1])).unwrap();
        assert!((s5 - 2.0 * libm::log(2.0)).abs() < 1e-15);
        assert_eq!(entropy(&seq(&[0, 0])), Err(Error::NoEdges));
        assert_eq!(entropy(&seq(&[2, 1])), Err(Error::OddDegreeSum(3)));
    }

    #[test]
    fn potential_examples() {
        let s4 = seq(&[3, 1, 1, 1]);
        let expected = LogCombination::from_prime_coefficients([(2, 14)]).unwrap();
        for n in [4, 5, 9] {
            assert_eq!(potential(&s4, 1, n).unwrap(), expected);
        }
        assert!((expected.approx() - 9.704061).abs() < 1e-6);

        let k3 = potential(&seq(&[2, 2, 2]), 1, 4).unwrap();
        assert_eq!(
            k3,
            LogCombination::from_prime_coefficients([(3, 9)]).unwrap()
        );
        assert!((k3.approx() - 9.887511).abs() < 1e-6);

        assert_eq!(
            potential(&s4, 1, 3),
            Err(Error::PaddingTooSmall {
                padding: 3,
                required: 4
            })
        );
    }

    #[test]
    fn small_size_three_ordering_for_large_shifts() {
        let p4 = seq(&[2, 2, 1, 1]);
        let s4 = seq(&[3, 1, 1, 1]);
        let k3 = seq(&[2, 2, 2]);
        for c in 2..=12 {
            let n = 6;
            let (a, b, k) = (
                potential(&p4, c, n).unwrap(),
                potential(&s4, c, n).unwrap(),
                potential(&k3, c, n).unwrap(),
            );
            assert!(a < b && b < k, "c = {c}");
        }
    }

    #[test]
    fn zero_entries_count_as_padding() {
        let a = potential(&seq(&[3, 3, 3, 3, 0, 0, 0]), 2, 7).unwrap();
        let b = potential(&seq(&[3, 3, 3, 3]), 2, 7).unwrap();
        assert_eq!(a, b);
    }
}
