//! Exhaustive enumeration of small graphs up to isomorphism, one canonical
//! representative each. Canonical form is the minimum upper-triangle
//! bitstring over all vertex relabelings, found by prefix-pruned
//! backtracking; graphs on one more vertex are generated by attaching a new
//! vertex with every neighbor subset and deduplicating canonical keys.

use crate::graph::Graph;
use std::collections::HashSet;

const ENUMERATE_CAP: usize = 10;

/// Canonical key of a graph on up to 10 vertices: the minimum, over all
/// permutations, of the column-major upper-triangle adjacency bits packed
/// most significant first.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= ENUMERATE_CAP);
    if n <= 1 {
        return 0;
    }
    let total_bits = n * (n - 1) / 2;
    let mut best = u64::MAX >> (64 - total_bits.max(1));
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        n: usize,
        total_bits: usize,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        partial: u64,
        bits: usize,
        best: &mut u64,
    ) {
        if perm.len() == n {
            if partial < *best {
                *best = partial;
            }
            return;
        }
        let m = perm.len();
        for v in 0..n {
            if used[v] {
                continue;
            }
            // append the column (i, m) for i < m
            let mut next = partial;
            for &u in perm.iter() {
                next = next << 1 | u64::from(g.has_edge(u, v));
            }
            let next_bits = bits + m;
            // compare against the corresponding prefix of the incumbent
            if next > *best >> (total_bits - next_bits) {
                continue;
            }
            used[v] = true;
            perm.push(v);
            rec(g, n, total_bits, perm, used, next, next_bits, best);
            perm.pop();
            used[v] = false;
        }
    }
    rec(g, n, total_bits, &mut perm, &mut used, 0, 0, &mut best);
    best
}

/// Rebuilds the graph encoded by a canonical key.
fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut g = Graph::empty(n);
    let total_bits = n.saturating_sub(1) * n / 2;
    let mut bit = total_bits;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if key >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// All graphs on exactly `n` vertices up to isomorphism, in ascending
/// canonical-key order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= ENUMERATE_CAP, "enumeration capped at {ENUMERATE_CAP} vertices");
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level: Vec<u64> = vec![0]; // the 1-vertex graph
    for m in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for &key in &level {
            let base = graph_from_key(m, key);
            for mask in 0u64..1 << m {
                let mut g = Graph::empty(m + 1);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for v in 0..m {
                    if mask >> v & 1 == 1 {
                        g.add_edge(v, m);
                    }
                }
                let ck = canonical_key(&g);
                if seen.insert(ck) {
                    next.push(ck);
                }
            }
        }
        next.sort_unstable();
        level = next;
    }
    level.into_iter().map(|k| graph_from_key(n, k)).collect()
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
