use alloc::vec::Vec;

use super::DegreeSequence;
use crate::{Error, Result};

/// `a` majorizes `b` when every prefix sum of `a` is at least the matching
/// prefix sum of `b`; the shorter sequence is padded with zeros.
pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> Result<bool> {
    let (sa, sb) = (a.sum(), b.sum());
    if sa != sb {
        return Err(Error::UnequalSums {
            left: sa,
            right: sb,
        });
    }
    Ok(dominates(a.degrees(), b.degrees()))
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    let len = a.len().max(b.len());
    let (mut pa, mut pb) = (0u64, 0u64);
    for i in 0..len {
        pa += u64::from(a.get(i).copied().unwrap_or(0));
        pb += u64::from(b.get(i).copied().unwrap_or(0));
        if pa < pb {
            return false;
        }
    }
    true
}

fn same_up_to_padding(a: &[u32], b: &[u32]) -> bool {
    let trim = |s: &[u32]| s.len() - s.iter().rev().take_while(|&&d| d == 0).count();
    a[..trim(a)] == b[..trim(b)]
}

/// Members not strictly majorized by another member, in input order.
/// Sequences equal up to zero-padding are merged, keeping the first.
///
/// All inputs must share one total; mixed totals are rejected.
pub fn majorization_maxima(seqs: &[DegreeSequence]) -> Result<Vec<DegreeSequence>> {
    if let Some(first) = seqs.first() {
        let total = first.sum();
        if let Some(bad) = seqs.iter().find(|s| s.sum() != total) {
            return Err(Error::UnequalSums {
                left: total,
                right: bad.sum(),
            });
        }
    }
    let mut out: Vec<DegreeSequence> = Vec::new();
    for (i, s) in seqs.iter().enumerate() {
        let duplicate = out
            .iter()
            .any(|kept| same_up_to_padding(kept.degrees(), s.degrees()));
        if duplicate {
            continue;
        }
        let dominated = seqs.iter().enumerate().any(|(j, other)| {
            j != i
                && !same_up_to_padding(other.degrees(), s.degrees())
                && dominates(other.degrees(), s.degrees())
        });
        if !dominated {
            out.push(s.clone());
        }
    }
    Ok(out)
}
