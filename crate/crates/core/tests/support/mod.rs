//! Small-graph enumeration shared by integration and acceptance tests.
//!
//! Graphs on at most 16 vertices are adjacency bitmasks. Isomorphism
//! classes are separated by a canonical code: colour refinement fixes an
//! invariant vertex partition, then every ordering within the classes is
//! tried and the largest upper-triangle bit code wins.

#![allow(dead_code)]

use std::collections::HashSet;

use degentropy_core::LabeledGraph;

pub type Adj = Vec<u16>;

pub fn to_labeled(adj: &[u16]) -> LabeledGraph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| adj[u] >> v & 1 == 1)
            .map(move |v| (u, v))
    });
    LabeledGraph::from_edges(n, edges).expect("simple graph")
}

pub fn from_labeled(g: &LabeledGraph) -> Adj {
    let mut adj = vec![0u16; g.order()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn is_connected(adj: &[u16]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next = 0;
        for (v, row) in adj.iter().enumerate() {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| colour[u])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn code(adj: &[u16], order: &[usize]) -> u128 {
    let n = order.len();
    let mut c = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | u128::from(adj[order[i]] >> order[j] & 1);
        }
    }
    c
}

fn permute_classes(
    adj: &[u16],
    classes: &[Vec<usize>],
    k: usize,
    prefix: &mut Vec<usize>,
    best: &mut u128,
) {
    if k == classes.len() {
        *best = (*best).max(code(adj, prefix));
        return;
    }
    let mut members = classes[k].clone();
    let len = members.len();
    heap_permutations(&mut members, len, &mut |p| {
        let len = prefix.len();
        prefix.extend_from_slice(p);
        permute_classes(adj, classes, k + 1, prefix, best);
        prefix.truncate(len);
    });
}

fn heap_permutations(a: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(a, k - 1, f);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permutations(a, k - 1, f);
}

/// Equal exactly for isomorphic graphs of the same order.
pub fn canonical(adj: &[u16]) -> u128 {
    let colour = refine(adj);
    let k = colour.iter().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); k];
    for (v, &c) in colour.iter().enumerate() {
        classes[c].push(v);
    }
    let mut best = 0;
    permute_classes(adj, &classes, 0, &mut Vec::new(), &mut best);
    best
}

/// `adj` with a new last vertex joined to the vertices in `mask`.
pub fn augment(adj: &[u16], mask: u16) -> Adj {
    let n = adj.len();
    let mut out: Adj = adj.to_vec();
    for (v, row) in out.iter_mut().enumerate() {
        if mask >> v & 1 == 1 {
            *row |= 1 << n;
        }
    }
    out.push(mask);
    out
}

/// One representative per isomorphism class of connected graphs, indexed
/// by order `0..=n_max`.
pub fn connected_graphs(n_max: usize) -> Vec<Vec<Adj>> {
    let mut by_order: Vec<Vec<Adj>> = vec![Vec::new(), vec![vec![0]]];
    for n in 2..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &by_order[n - 1] {
            for mask in 1..(1u16 << (n - 1)) {
                let h = augment(g, mask);
                if seen.insert(canonical(&h)) {
                    next.push(h);
                }
            }
        }
        by_order.push(next);
    }
    by_order.truncate(n_max + 1);
    by_order
}

/// Checks `f` on every connected graph of order `n_max + 1`, each
/// isomorphism class visited at least once: every connected graph has a
/// non-cut vertex, so it extends a connected graph of order `n_max`.
pub fn for_each_connected_extension(base: &[Adj], mut f: impl FnMut(&[u16])) -> usize {
    let mut count = 0;
    for g in base {
        let n = g.len();
        for mask in 1..(1u16 << n) {
            f(&augment(g, mask));
            count += 1;
        }
    }
    count
}

/// `Σ_{u ∈ N(v)} d(u) <= m + C(b, 2)` at every minimum-degree vertex `v`,
/// and `m >= C(b+1, 2)`.
pub fn degree_bounds_hold(adj: &[u16]) -> bool {
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let m: u32 = deg.iter().sum::<u32>() / 2;
    let b = *deg.iter().min().unwrap();
    if m < b * (b + 1) / 2 {
        return false;
    }
    (0..adj.len()).filter(|&v| deg[v] == b).all(|v| {
        let s: u32 = (0..adj.len())
            .filter(|&u| adj[v] >> u & 1 == 1)
            .map(|u| deg[u])
            .sum();
        s <= m + b * b.saturating_sub(1) / 2
    })
}
