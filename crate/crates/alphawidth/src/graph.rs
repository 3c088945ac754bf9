//! Immutable simple undirected graphs over vertices `0..n-1`.

use crate::error::Error;
use crate::set::VertexSet;

/// A finite simple undirected graph. Adjacency is stored as one `VertexSet`
/// row per vertex, which keeps every neighborhood/component/solver operation
/// a handful of word operations at desk scale while still allowing universes
/// beyond 64 vertices (the elimination-tree constructions need paths on up to
/// a few hundred vertices).
///
/// Graphs are immutable after construction; all operations are pure.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Neighbor set of a single vertex (open).
    #[inline]
    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    /// Open or closed neighborhood of a vertex set.
    pub fn neighborhood(&self, x: &VertexSet, closed: bool) -> VertexSet {
        let mut acc = VertexSet::new();
        for v in x.iter() {
            acc = acc.union(&self.adj[v]);
        }
        if closed {
            acc.union(x)
        } else {
            acc.minus(x)
        }
    }

    /// Connected components of `G[x]`, ordered by smallest contained vertex.
    pub fn components(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in x.iter() {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut frontier = VertexSet::singleton(v);
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for u in frontier.iter() {
                    next = next.union(&self.adj[u]);
                }
                next = next.intersection(x).minus(&comp);
                comp = comp.union(&next);
                frontier = next;
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        x.is_empty() || self.components(x).len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components(&self.vertices()).len() == 1
    }

    /// The induced subgraph `G[x]` with vertices relabeled `0..|x|-1` in
    /// ascending order of their original ids, together with the map from new
    /// ids back to original ids.
    pub fn induced(&self, x: &VertexSet) -> (Graph, Vec<usize>) {
        let verts = x.to_vec();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, verts)
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    // --- named constructors ---

    /// Path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle on `n >= 3` vertices in natural order.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star with center `0` and `d` leaves.
    pub fn star(d: usize) -> Graph {
        Graph::complete_bipartite(1, d)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighborhood_open_closed() {
        let p3 = Graph::path(3);
        let x = VertexSet::singleton(1);
        assert_eq!(p3.neighborhood(&x, false).to_vec(), vec![0, 2]);
        assert_eq!(p3.neighborhood(&x, true).to_vec(), vec![0, 1, 2]);

        // open neighborhood of the whole vertex set is empty
        let all = p3.vertices();
        assert!(p3.neighborhood(&all, false).is_empty());

        let c5 = Graph::cycle(5);
        assert_eq!(
            c5.neighborhood(&VertexSet::singleton(0), true).to_vec(),
            vec![0, 1, 4]
        );
    }

    #[test]
    fn components_partition() {
        let p4 = Graph::path(4);
        let x = VertexSet::from_iter([0, 1, 3]);
        let comps = p4.components(&x);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![3]);

        // connected subset gives a single component
        assert_eq!(p4.components(&VertexSet::from_iter([1, 2])).len(), 1);

        // edgeless graph: all singletons
        let e = Graph::empty(4);
        assert_eq!(e.components(&e.vertices()).len(), 4);

        // empty set gives no components
        assert!(p4.components(&VertexSet::new()).is_empty());
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn constructors() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(4).edge_count(), 4);
        assert_eq!(Graph::star(3).edge_count(), 3);
        assert_eq!(Graph::complete_bipartite(3, 3).edge_count(), 9);
        assert!(Graph::path(5).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }
}
