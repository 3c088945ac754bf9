//! Structure recognition: chordality, fixed induced subgraphs, star-freeness,
//! quasi-threshold graphs.

use crate::alpha::independence_with_witness;
use crate::graph::Graph;
use crate::set::VertexSet;

/// True iff `G` is chordal, decided by LexBFS followed by verification of the
/// resulting candidate perfect elimination ordering.
pub fn is_chordal(g: &Graph) -> bool {
    let order = lex_bfs(g);
    is_perfect_elimination_ordering(g, &order)
}

/// LexBFS order (first visited first). Ties break toward the smallest vertex,
/// so the order is deterministic.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for u in g.adj(v).iter() {
            if !visited[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Checks whether the *reverse* of `order` is a perfect elimination ordering:
/// for every vertex, its earlier neighbors (in reverse order) that come after
/// it must form a clique through the earliest one.
fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // peo = reversed LexBFS order; process vertices in peo order
    for &v in order.iter().rev() {
        // neighbors later in peo = earlier in the LexBFS order
        let later: Vec<usize> = g
            .adj(v)
            .iter()
            .filter(|&u| position[u] < position[v])
            .collect();
        if let Some(&u) = later.iter().max_by_key(|&&u| position[u]) {
            for &w in &later {
                if w != u && !g.has_edge(u, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Searches for an induced copy of `h` in `g`: an injection `phi` with
/// `uv in E(H)` iff `phi(u)phi(v) in E(G)`. Pattern vertices are mapped in
/// index order and host candidates tried ascending, so the returned injection
/// is canonical. Intended for small fixed patterns only.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut phi: Vec<usize> = Vec::with_capacity(h.n());
    let mut used = VertexSet::new();
    if extend_injection(g, h, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

fn extend_injection(g: &Graph, h: &Graph, phi: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    let p = phi.len();
    if p == h.n() {
        return true;
    }
    for cand in 0..g.n() {
        if used.contains(cand) {
            continue;
        }
        let consistent = (0..p).all(|q| h.has_edge(q, p) == g.has_edge(phi[q], cand));
        if !consistent {
            continue;
        }
        phi.push(cand);
        used.insert(cand);
        if extend_injection(g, h, phi, used) {
            return true;
        }
        phi.pop();
        used.remove(cand);
    }
    false
}

/// `K_{1,d}`-freeness: true iff every open neighborhood has independence
/// number at most `d-1`. On failure returns the witness star: the center plus
/// `d` pairwise nonadjacent neighbors.
pub fn is_k1d_free(g: &Graph, d: usize) -> (bool, Option<VertexSet>) {
    assert!(d >= 1, "is_k1d_free requires d >= 1");
    for v in 0..g.n() {
        let (a, wit) = independence_with_witness(g, g.adj(v));
        if a >= d {
            let mut star = VertexSet::singleton(v);
            for u in wit.iter().take(d) {
                star.insert(u);
            }
            return (false, Some(star));
        }
    }
    (true, None)
}

/// Quasi-threshold (trivially perfect) recognition: `{P4, C4}`-free.
pub fn is_quasi_threshold(g: &Graph) -> bool {
    contains_induced(g, &Graph::path(4)).is_none() && contains_induced(g, &Graph::cycle(4)).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force chordality: no induced cycle of length >= 4. Checks every
    /// vertex subset of size >= 4 for being an induced cycle.
    fn chordal_exhaustive(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u32..1 << n {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() < 4 {
                continue;
            }
            let set: VertexSet = verts.iter().copied().collect();
            let two_regular = verts
                .iter()
                .all(|&v| g.adj(v).intersection(&set).len() == 2);
            if two_regular && g.is_connected_set(&set) {
                return false;
            }
        }
        true
    }

    #[test]
    fn chordal_basics() {
        assert!(is_chordal(&Graph::path(6))); // trees are chordal
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(&Graph::empty(4)));
        assert!(is_chordal(&Graph::empty(0)));
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(!is_chordal(&Graph::cycle(6)));
        // C4 plus a chord is chordal
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&g));
    }

    #[test]
    fn chordal_matches_bruteforce() {
        let mut seed = 99u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed >> 33
        };
        for n in 1..=7usize {
            for _ in 0..60 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 2 == 0 {
                            g.add_edge(u, v);
                        }
                    }
                }
                assert_eq!(is_chordal(&g), chordal_exhaustive(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn induced_subgraph_search() {
        assert!(contains_induced(&Graph::complete(3), &Graph::path(3)).is_none());
        let id = contains_induced(&Graph::cycle(4), &Graph::cycle(4)).unwrap();
        assert_eq!(id.len(), 4);
        assert!(contains_induced(&Graph::cycle(5), &Graph::path(4)).is_some());

        // returned injection respects adjacency
        let g = Graph::cycle(6);
        let h = Graph::path(4);
        let phi = contains_induced(&g, &h).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(h.has_edge(u, v), g.has_edge(phi[u], phi[v]));
            }
        }
    }

    #[test]
    fn star_freeness() {
        assert!(is_k1d_free(&Graph::complete(6), 2).0);
        let (ok, wit) = is_k1d_free(&Graph::star(3), 3);
        assert!(!ok);
        let wit = wit.unwrap();
        assert_eq!(wit.len(), 4);
        assert!(wit.contains(0)); // the center
        assert!(is_k1d_free(&Graph::cycle(6), 3).0);
        assert!(!is_k1d_free(&Graph::cycle(6), 2).0);
    }

    #[test]
    fn k1d_equivalence_with_induced_star() {
        let mut seed = 5u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed >> 33
        };
        for n in 1..=7usize {
            for _ in 0..30 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 2 == 0 {
                            g.add_edge(u, v);
                        }
                    }
                }
                for d in 1..=4usize {
                    let free = is_k1d_free(&g, d).0;
                    let star_found = contains_induced(&g, &Graph::star(d)).is_some();
                    assert_eq!(free, !star_found, "{g:?} d={d}");
                }
            }
        }
    }

    #[test]
    fn quasi_threshold() {
        assert!(is_quasi_threshold(&Graph::complete(5)));
        assert!(!is_quasi_threshold(&Graph::path(4)));
        assert!(!is_quasi_threshold(&Graph::cycle(4)));
        assert!(is_quasi_threshold(&Graph::star(4)));
    }
}
