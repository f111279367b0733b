use alloc::vec::Vec;

use super::DegreeSequence;

/// A partition of `total` into positive parts, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    total: u32,
}

impl Partition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn into_sequence(self) -> DegreeSequence {
        // parts are already non-increasing
        DegreeSequence(self.parts)
    }
}

/// Partitions of a fixed total in reverse-lexicographic order, optionally
/// capped in part size and part count.
///
/// Each step lowers the rightmost part that can still be lowered while
/// leaving a feasible greedy completion; greedy filling yields the
/// lexicographically largest suffix, which is exactly the successor.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u32>>,
    total: u32,
    max_parts: usize,
}

/// Streams every partition of `total` with parts `<= max_part` and at most
/// `max_parts` parts, each exactly once.
pub fn partitions_of(total: u32, max_part: Option<u32>, max_parts: Option<usize>) -> Partitions {
    let cap = max_part.unwrap_or(total).min(total);
    let max_parts = max_parts.unwrap_or(usize::MAX);
    let next = if total == 0 {
        Some(Vec::new())
    } else if cap == 0 {
        None
    } else {
        greedy_fill(Vec::new(), total, cap, max_parts)
    };
    Partitions {
        next,
        total,
        max_parts,
    }
}

fn greedy_fill(
    mut prefix: Vec<u32>,
    mut rest: u32,
    cap: u32,
    max_parts: usize,
) -> Option<Vec<u32>> {
    let needed = rest.div_ceil(cap) as usize;
    if prefix.len() + needed > max_parts {
        return None;
    }
    while rest > 0 {
        let part = rest.min(cap);
        prefix.push(part);
        rest -= part;
    }
    Some(prefix)
}

fn successor(current: &[u32], max_parts: usize) -> Option<Vec<u32>> {
    let mut suffix = 0u32;
    for i in (0..current.len()).rev() {
        let part = current[i];
        if part >= 2 {
            let lowered = part - 1;
            let rest = suffix + 1;
            let mut prefix = current[..i].to_vec();
            prefix.push(lowered);
            if let Some(next) = greedy_fill(prefix, rest, lowered, max_parts) {
                return Some(next);
            }
        }
        suffix += part;
    }
    None
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.next.take()?;
        self.next = successor(&parts, self.max_parts);
        Some(Partition {
            parts,
            total: self.total,
        })
    }
}

impl core::iter::FusedIterator for Partitions {}
