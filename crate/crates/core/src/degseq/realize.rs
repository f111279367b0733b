use alloc::vec::Vec;

use super::{is_graphical, DegreeSequence};
use crate::graph::LabeledGraph;
use crate::{Error, Result};

/// Havel–Hakimi realization. Vertex `i` receives degree `seq[i]`.
///
/// Ties between equal residual degrees go to the lower index, so the output
/// is deterministic.
pub fn realize(seq: &DegreeSequence) -> Result<LabeledGraph> {
    if !is_graphical(seq) {
        return Err(Error::NotGraphical);
    }
    let n = seq.len();
    let mut residual: Vec<u32> = seq.degrees().to_vec();
    let mut g = LabeledGraph::empty(n);
    if n == 0 {
        return Ok(g);
    }
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let hub = order[0];
        let need = residual[hub] as usize;
        if need == 0 {
            break;
        }
        if need >= n {
            return Err(Error::NotGraphical);
        }
        residual[hub] = 0;
        for &v in &order[1..=need] {
            if residual[v] == 0 {
                return Err(Error::NotGraphical);
            }
            residual[v] -= 1;
            g.insert(hub, v);
        }
    }
    Ok(g)
}

/// A connected realization exists iff the sequence is graphical and either
/// it is a single vertex, or every degree is positive and the degree sum is
/// at least `2(n - 1)`.
pub fn has_connected_realization(seq: &DegreeSequence) -> bool {
    let n = seq.len();
    match n {
        0 => false,
        1 => seq.degrees()[0] == 0,
        _ => {
            is_graphical(seq)
                && seq.degrees().iter().all(|&d| d > 0)
                && seq.sum() >= 2 * (n as u64 - 1)
        }
    }
}

/// Realizes `seq` and then merges components by degree-preserving edge
/// swaps until the graph is connected.
///
/// Each swap takes an edge `ab` lying on a cycle and any edge `xy` from a
/// different component and replaces them by `ax` and `by`; this lowers the
/// component count by one.
pub fn connected_realization(seq: &DegreeSequence) -> Result<LabeledGraph> {
    let mut g = realize(seq)?;
    if !has_connected_realization(seq) {
        return Err(Error::NoConnectedRealization);
    }
    let n = g.order();
    for _ in 0..n * n {
        let comps = g.components();
        if comps.len() == 1 {
            return Ok(g);
        }
        let mut cycle_edge = None;
        'search: for (ci, comp) in comps.iter().enumerate() {
            for &a in comp {
                for b in g.neighbors(a).filter(|&b| b > a) {
                    if g.connected_avoiding(a, b, (a, b)) {
                        cycle_edge = Some((ci, a, b));
                        break 'search;
                    }
                }
            }
        }
        let Some((ci, a, b)) = cycle_edge else {
            return Err(Error::NoConnectedRealization);
        };
        let other = comps
            .iter()
            .enumerate()
            .find(|(cj, _)| *cj != ci)
            .map(|(_, comp)| comp)
            .expect("at least two components");
        let x = other[0];
        let y = g.neighbors(x).next().ok_or(Error::NoConnectedRealization)?;
        g.remove(a, b);
        g.remove(x, y);
        g.insert(a, x);
        g.insert(b, y);
    }
    if g.is_connected() {
        Ok(g)
    } else {
        Err(Error::NoConnectedRealization)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(d: &[u32]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec())
    }

    #[test]
    fn realize_examples() {
        let e = realize(&s(&[1, 1])).unwrap();
        assert_eq!(e.edges(), vec![(0, 1)]);
        let k4m = realize(&s(&[3, 3, 2, 2])).unwrap();
        assert_eq!(k4m.size(), 5);
        assert_eq!(k4m.degree_sequence(), s(&[3, 3, 2, 2]));
        assert_eq!(realize(&s(&[3, 3, 1, 1])), Err(Error::NotGraphical));
        assert_eq!(realize(&s(&[])).unwrap().order(), 0);
    }

    #[test]
    fn connected_examples() {
        assert!(!has_connected_realization(&s(&[1, 1, 1, 1])));
        assert!(has_connected_realization(&s(&[2, 2, 2])));
        for n in 2..10u32 {
            let mut star = vec![n - 1];
            star.extend(core::iter::repeat_n(1, n as usize - 1));
            assert!(has_connected_realization(&s(&star)));
        }
        assert!(has_connected_realization(&s(&[0])));
        assert!(!has_connected_realization(&s(&[2, 2, 2, 0])));
    }

    #[test]
    fn repair_merges_components() {
        // Havel–Hakimi on (2,2,2,2,2,2) yields two triangles.
        let seq = s(&[2, 2, 2, 2, 2, 2]);
        assert!(!realize(&seq).unwrap().is_connected());
        let g = connected_realization(&seq).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.degree_sequence(), seq);
        assert_eq!(
            connected_realization(&s(&[1, 1, 1, 1])),
            Err(Error::NoConnectedRealization)
        );
    }
}
