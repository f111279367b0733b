//! Degree sequences: partition enumeration, graphicality, majorization and
//! realization.

mod majorize;
mod partition;
mod realize;

use alloc::vec::Vec;
use core::fmt;

pub use majorize::{majorization_maxima, majorizes};
pub use partition::{partitions_of, Partitions};
pub use realize::{connected_realization, has_connected_realization, realize};

/// Non-increasing list of non-negative integer degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Sorts the given degrees into non-increasing order.
    pub fn new(mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self(degrees)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    /// Number of strictly positive entries.
    pub fn positive_len(&self) -> usize {
        self.0.iter().take_while(|&&d| d > 0).count()
    }

    /// The sequence with trailing zeros removed.
    pub fn trimmed(&self) -> Self {
        Self(self.0[..self.positive_len()].to_vec())
    }

    pub fn padded(&self, len: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        Self(v)
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Erdős–Gallai test: the sum is even and for every `k`,
/// `Σ_{i<=k} d_i <= k(k-1) + Σ_{i>k} min(d_i, k)`.
pub fn is_graphical(seq: &DegreeSequence) -> bool {
    let d = seq.degrees();
    if seq.sum() % 2 == 1 {
        return false;
    }
    let mut prefix = 0u64;
    for k in 1..=d.len() {
        prefix += u64::from(d[k - 1]);
        let kk = k as u64;
        let tail: u64 = d[k..].iter().map(|&x| u64::from(x).min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return false;
        }
    }
    true
}
