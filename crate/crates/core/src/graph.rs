//! Labelled simple graphs and the explicit extremal `(n, m)` constructions.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::degseq::DegreeSequence;
use crate::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl LabeledGraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// `K_{1,k}`, centre at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.insert(0, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u == v || u >= n || v >= n {
            return Err(Error::InvalidEdge { u, v, n });
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.insert(u, v);
        Ok(())
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.adj.iter().map(|s| s.len() as u32).collect())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Exactly one component; isolated vertices count as components.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub(crate) fn connected_avoiding(&self, from: usize, to: usize, skip: (usize, usize)) -> bool {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            if u == to {
                return true;
            }
            for &v in &self.adj[u] {
                let banned = (u, v) == skip || (v, u) == skip;
                if !banned && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    /// Appends `k` isolated vertices.
    pub fn with_isolated(mut self, k: usize) -> Self {
        self.adj.extend((0..k).map(|_| BTreeSet::new()));
        self
    }

    /// Adds a new vertex adjacent to every existing vertex. The new vertex
    /// becomes index 0 and old vertex `v` becomes `v + 1`.
    pub fn join_universal(&self) -> Self {
        let n = self.order();
        let mut g = Self::empty(n + 1);
        for (u, v) in self.edges() {
            g.insert(u + 1, v + 1);
        }
        for v in 1..=n {
            g.insert(0, v);
        }
        g
    }

    /// Deletes the lowest-indexed vertex of degree `n - 1`, relabelling the
    /// rest in order.
    pub fn remove_universal(&self) -> Result<Self> {
        let n = self.order();
        let hub = (0..n)
            .find(|&v| self.degree(v) + 1 == n)
            .ok_or(Error::NoUniversalVertex)?;
        Ok(self.delete_vertex(hub))
    }

    pub fn delete_vertex(&self, x: usize) -> Self {
        let relabel = |v: usize| if v > x { v - 1 } else { v };
        let mut g = Self::empty(self.order() - 1);
        for (u, v) in self.edges() {
            if u != x && v != x {
                g.insert(relabel(u), relabel(v));
            }
        }
        g
    }

    /// Whether repeatedly deleting an isolated or universal vertex of the
    /// remaining graph empties it.
    pub fn is_threshold(&self) -> bool {
        let n = self.order();
        let mut alive = vec![true; n];
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        for remaining in (1..=n).rev() {
            let pick = (0..n).find(|&v| alive[v] && (degree[v] == 0 || degree[v] + 1 == remaining));
            let Some(v) = pick else {
                return false;
            };
            alive[v] = false;
            for &u in &self.adj[v] {
                if alive[u] {
                    degree[u] -= 1;
                }
            }
        }
        true
    }
}

/// Graphs maximising `h_1` among all graphs with `size` edges, as used for
/// the base of the `(n, m)` construction. Two graphs at `size == 5`.
pub fn h1_extremal_base(size: usize) -> Vec<LabeledGraph> {
    match size {
        3 => vec![LabeledGraph::complete(3)],
        5 => {
            let mut k4_minus = LabeledGraph::complete(4);
            k4_minus.remove(2, 3);
            vec![k4_minus, LabeledGraph::star(5)]
        }
        6 => vec![LabeledGraph::complete(4)],
        k => vec![LabeledGraph::star(k)],
    }
}

/// Entropy-minimising connected graphs with `n` vertices and `m` edges for
/// `n - 1 <= m <= 2n - 3`: a universal hub (vertex 0) joined to the
/// `h_1`-extremal graph with `m - n + 1` edges padded to `n - 1` vertices.
pub fn construct_extremal_nm(n: usize, m: usize) -> Result<Vec<LabeledGraph>> {
    let range = || Error::OutOfRange {
        n,
        m,
        min_m: n.saturating_sub(1),
        max_m: (2 * n).saturating_sub(3),
    };
    if n < 2 || m + 1 < n || m + 3 > 2 * n {
        return Err(range());
    }
    let base_size = m + 1 - n;
    Ok(h1_extremal_base(base_size)
        .into_iter()
        .map(|base| {
            let pad = n - 1 - base.order();
            base.with_isolated(pad).join_universal()
        })
        .collect())
}
