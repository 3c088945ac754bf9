//! Exact independence and clique numbers by branch and bound.
//!
//! The solver is a plain include/exclude search over bitsets with a greedy
//! clique-cover upper bound. Correctness is the only contract; the bound just
//! keeps desk-scale instances (a few dozen vertices) instant. Branching picks
//! the smallest-index vertex so every witness is deterministic.

use crate::graph::Graph;
use crate::set::VertexSet;

/// Maximum independent set of `G[x]`: size and one witness set.
///
/// The witness is the first maximum independent set found by the canonical
/// search order, so equal inputs always produce identical witnesses.
pub fn independence_with_witness(g: &Graph, x: &VertexSet) -> (usize, VertexSet) {
    let mut best = VertexSet::new();
    let mut best_len = 0;
    let mut current = Vec::new();
    expand(g, x.clone(), &mut current, &mut best, &mut best_len);
    (best_len, best)
}

/// `α(G[x])` — the independence number of the subgraph induced by `x`.
pub fn independence_number(g: &Graph, x: &VertexSet) -> usize {
    independence_with_witness(g, x).0
}

/// `ω(G[x])` — the clique number, computed as the independence number of the
/// induced subgraph in the complement.
pub fn clique_number(g: &Graph, x: &VertexSet) -> usize {
    clique_with_witness(g, x).0
}

/// Maximum clique of `G[x]`: size and one witness.
pub fn clique_with_witness(g: &Graph, x: &VertexSet) -> (usize, VertexSet) {
    let (sub, map) = g.induced(x);
    let co = sub.complement();
    let (size, w) = independence_with_witness(&co, &co.vertices());
    (size, w.iter().map(|i| map[i]).collect())
}

fn expand(
    g: &Graph,
    candidates: VertexSet,
    current: &mut Vec<usize>,
    best: &mut VertexSet,
    best_len: &mut usize,
) {
    if candidates.is_empty() {
        if current.len() > *best_len {
            *best_len = current.len();
            *best = current.iter().copied().collect();
        }
        return;
    }
    if current.len() + clique_cover_bound(g, &candidates) <= *best_len {
        return;
    }
    let v = candidates.min().unwrap();
    // include v
    current.push(v);
    expand(
        g,
        candidates.minus(g.adj(v)).without(v),
        current,
        best,
        best_len,
    );
    current.pop();
    // exclude v
    expand(g, candidates.without(v), current, best, best_len);
}

/// Greedy clique cover of `G[p]`; the number of cliques bounds `α(G[p])`.
fn clique_cover_bound(g: &Graph, p: &VertexSet) -> usize {
    let mut remaining = p.clone();
    let mut cliques = 0;
    while let Some(v) = remaining.min() {
        cliques += 1;
        let mut clique_common = g.adj(v).intersection(&remaining);
        remaining.remove(v);
        while let Some(u) = clique_common.min() {
            remaining.remove(u);
            clique_common = clique_common.intersection(g.adj(u));
            clique_common.remove(u);
        }
    }
    cliques
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: scan all `2^n` subsets.
    fn alpha_exhaustive(g: &Graph, x: &VertexSet) -> usize {
        let verts = x.to_vec();
        let mut best = 0;
        for mask in 0u32..1 << verts.len() {
            let chosen: Vec<usize> = verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let independent = chosen
                .iter()
                .enumerate()
                .all(|(i, &u)| chosen[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
            if independent {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn small_cases() {
        let k5 = Graph::complete(5);
        assert_eq!(independence_number(&k5, &k5.vertices()), 1);
        assert_eq!(clique_number(&k5, &k5.vertices()), 5);

        let c5 = Graph::cycle(5);
        assert_eq!(independence_number(&c5, &c5.vertices()), 2);
        assert_eq!(clique_number(&c5, &c5.vertices()), 2);

        assert_eq!(independence_number(&k5, &VertexSet::new()), 0);
    }

    #[test]
    fn witness_is_independent_and_maximum() {
        let g = Graph::cycle(7);
        let (a, w) = independence_with_witness(&g, &g.vertices());
        assert_eq!(a, 3);
        assert_eq!(w.len(), 3);
        let vs = w.to_vec();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn agrees_with_exhaustive_oracle() {
        // deterministic pseudo-random graphs on up to 16 vertices
        let mut seed = 0xdead_beefu64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            seed >> 33
        };
        for n in 1..=10usize {
            for _ in 0..20 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 100 < 45 {
                            g.add_edge(u, v);
                        }
                    }
                }
                let x = g.vertices();
                assert_eq!(independence_number(&g, &x), alpha_exhaustive(&g, &x));
                // and on a random subset
                let sub: VertexSet = (0..n).filter(|_| next() % 2 == 0).collect();
                assert_eq!(independence_number(&g, &sub), alpha_exhaustive(&g, &sub));
            }
        }
    }

    #[test]
    fn clique_agrees_with_exhaustive_scan() {
        fn omega_exhaustive(g: &Graph, x: &VertexSet) -> usize {
            let verts = x.to_vec();
            let mut best = 0;
            for mask in 0u32..1 << verts.len() {
                let chosen: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let clique = chosen
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| chosen[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                if clique {
                    best = best.max(chosen.len());
                }
            }
            best
        }
        let mut seed = 0x51u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed >> 33
        };
        for n in 1..=10usize {
            for _ in 0..10 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 100 < 50 {
                            g.add_edge(u, v);
                        }
                    }
                }
                let x = g.vertices();
                assert_eq!(clique_number(&g, &x), omega_exhaustive(&g, &x));
                let (size, witness) = clique_with_witness(&g, &x);
                assert_eq!(witness.len(), size);
                let vs = witness.to_vec();
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        assert!(g.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_under_subsets() {
        let g = Graph::cycle(9);
        let x = g.vertices();
        let a_full = independence_number(&g, &x);
        for v in 0..9 {
            assert!(independence_number(&g, &x.without(v)) <= a_full);
        }
    }
}
