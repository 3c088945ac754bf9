//! Dominating paths and cycles for strong brambles: induced paths/cycles
//! whose closed neighborhood meets every bramble element.

use crate::alpha::independence_number;
use crate::bramble::{alpha_order_exact, check_strong_bramble, StrongBramble};
use crate::error::Error;
use crate::graph::Graph;
use crate::patterns::is_k1d_free;
use crate::set::VertexSet;

/// Result of [`dominating_cycle_or_vertex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationOutcome {
    /// A single vertex whose closed neighborhood meets every element.
    Vertex(usize),
    /// An induced cycle, in cyclic order, whose closed neighborhood meets
    /// every element.
    Cycle(Vec<usize>),
}

fn covers(g: &Graph, elements: &[VertexSet], path: &VertexSet) -> bool {
    let reach = g.neighborhood(path, true);
    elements.iter().all(|e| reach.intersects(e))
}

/// Drops elements that contain another element; covering the subset covers
/// the superset, and the extension argument needs the family antichain.
fn normalize(elements: &[VertexSet]) -> Vec<VertexSet> {
    elements
        .iter()
        .filter(|e| !elements.iter().any(|f| f != *e && f.is_subset(e)))
        .cloned()
        .collect()
}

/// Builds an induced path `P` with `N[P] ∩ B ≠ ∅` for every element `B`, by
/// the greedy extension argument: start next to one element and repeatedly
/// route a shortest path through the current element to the neighborhood of
/// an uncovered one. A single dominating vertex is returned as a 1-vertex
/// path when one exists.
pub fn dominating_path(g: &Graph, b: &StrongBramble) -> Result<Vec<usize>, Error> {
    if g.n() == 0 {
        return Err(Error::Precondition("dominating_path needs a nonempty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("dominating_path needs a connected graph".into()));
    }
    check_strong_bramble(g, b)
        .map_err(|v| Error::Precondition(format!("not a strong bramble: {v}")))?;
    let elements = normalize(b.elements());

    // single-vertex fast path; also the home of elements equal to V(G)
    for x in 0..g.n() {
        if covers(g, &elements, &VertexSet::singleton(x)) {
            return Ok(vec![x]);
        }
    }

    // extension loop; every element is now a proper subset of V(G)
    let first = elements
        .iter()
        .min_by(|a, b| a.cmp_lex(b))
        .expect("fast path handles empty brambles")
        .clone();
    let start = g
        .neighborhood(&first, false)
        .min()
        .expect("proper connected subset has a neighbor");
    let mut path = vec![start];
    let mut current = first;
    loop {
        let path_set: VertexSet = path.iter().copied().collect();
        let reach = g.neighborhood(&path_set, true);
        let next = elements
            .iter()
            .filter(|e| !reach.intersects(e))
            .min_by(|a, b| a.cmp_lex(b));
        let Some(next) = next else {
            debug_assert!(is_induced_path(g, &path));
            return Ok(path);
        };
        let endpoint = *path.last().unwrap();
        let hop = shortest_hop(g, endpoint, &current, next).ok_or_else(|| {
            Error::Invariant("extension path through the bramble element is missing".into())
        })?;
        // the loop's termination measure: every extension grows the path
        debug_assert!(!hop.is_empty());
        path.extend(hop);
        debug_assert!(is_induced_path(g, &path));
        current = next.clone();
    }
}

/// Shortest path from `from` to `N(target)` whose interior stays in
/// `through`, returned without `from`. BFS with ascending tie-breaks.
fn shortest_hop(
    g: &Graph,
    from: usize,
    through: &VertexSet,
    target: &VertexSet,
) -> Option<Vec<usize>> {
    let target_nbhd = g.neighborhood(target, false);
    let mut parent: Vec<Option<usize>> = vec![None; g.n()];
    let mut seen = VertexSet::singleton(from);
    let mut layer = vec![from];
    while !layer.is_empty() {
        let mut next_layer = Vec::new();
        for &u in &layer {
            for v in g.adj(u).intersection(through).iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    parent[v] = Some(u);
                    next_layer.push(v);
                }
            }
        }
        // first layer containing a target wins; smallest index within it
        if let Some(hit) = next_layer
            .iter()
            .copied()
            .filter(|&v| target_nbhd.contains(v))
            .min()
        {
            let mut rev = vec![hit];
            let mut cur = hit;
            while let Some(p) = parent[cur] {
                if p == from {
                    break;
                }
                rev.push(p);
                cur = p;
            }
            rev.reverse();
            return Some(rev);
        }
        layer = next_layer;
    }
    None
}

fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    path.iter().enumerate().all(|(i, &u)| {
        path[i + 1..]
            .iter()
            .enumerate()
            .all(|(off, &v)| g.has_edge(u, v) == (off == 0))
    })
}

fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 3 {
        return false;
    }
    cycle.iter().enumerate().all(|(i, &u)| {
        (i + 1..m).all(|j| {
            let adjacent_positions = j == i + 1 || (i == 0 && j == m - 1);
            g.has_edge(u, cycle[j]) == adjacent_positions
        })
    })
}

/// Either a dominating vertex or an induced dominating cycle: shrinks the
/// dominating path to a minimal one, picks the elements private to its two
/// endpoints, and closes the path through their union.
pub fn dominating_cycle_or_vertex(g: &Graph, b: &StrongBramble) -> Result<DominationOutcome, Error> {
    let mut path = dominating_path(g, b)?;
    let elements = normalize(b.elements());

    // shrink to a minimal dominating subpath
    loop {
        if path.len() > 1 && covers(g, &elements, &path[1..].iter().copied().collect()) {
            path.remove(0);
            continue;
        }
        if path.len() > 1
            && covers(g, &elements, &path[..path.len() - 1].iter().copied().collect())
        {
            path.pop();
            continue;
        }
        break;
    }
    if path.len() == 1 {
        return Ok(DominationOutcome::Vertex(path[0]));
    }

    let s = path[0];
    let t = *path.last().unwrap();
    let private_element = |endpoint_removed: VertexSet| {
        elements
            .iter()
            .filter(|e| !g.neighborhood(&endpoint_removed, true).intersects(e))
            .min_by(|a, b| a.cmp_lex(b))
            .cloned()
    };
    let b_s = private_element(path[1..].iter().copied().collect())
        .ok_or_else(|| Error::Invariant("minimal path start has no private element".into()))?;
    let b_t = private_element(path[..path.len() - 1].iter().copied().collect())
        .ok_or_else(|| Error::Invariant("minimal path end has no private element".into()))?;
    if b_s == b_t {
        return Err(Error::Invariant("endpoint-private elements coincide".into()));
    }

    // shortest s-t path of length >= 2 with interior inside B_s ∪ B_t
    let interior = b_s.union(&b_t);
    let hop = shortest_hop(g, s, &interior, &VertexSet::singleton(t))
        .ok_or_else(|| Error::Invariant("no return path through the private elements".into()))?;
    // hop ends at a neighbor of t inside the interior; append the interior
    // vertices after the path
    let mut cycle = path.clone();
    for v in hop.iter().rev() {
        cycle.push(*v);
    }
    if !is_induced_cycle(g, &cycle) {
        return Err(Error::Invariant(format!("closure is not an induced cycle: {cycle:?}")));
    }
    debug_assert!(covers(g, &elements, &cycle.iter().copied().collect()));
    Ok(DominationOutcome::Cycle(cycle))
}

/// Long dominating cycle under the counting preconditions: for a
/// `K_{1,d}`-free graph and a strong bramble of α-order at least `d·k`
/// (`k >= 2`), returns an induced dominating cycle of length at least `k`.
/// The chain `d·k <= α(N[C]) <= d·|V(C)|` is re-checked numerically.
pub fn long_dominating_cycle(
    g: &Graph,
    b: &StrongBramble,
    d: usize,
    k: usize,
) -> Result<Vec<usize>, Error> {
    if k < 2 {
        return Err(Error::Precondition(format!("long_dominating_cycle needs k >= 2, got {k}")));
    }
    let (free, witness) = is_k1d_free(g, d);
    if !free {
        return Err(Error::Precondition(format!(
            "graph is not K_{{1,{d}}}-free: induced star {:?}",
            witness.unwrap()
        )));
    }
    let (order, _) = alpha_order_exact(g, b)?;
    if order < d * k {
        return Err(Error::Precondition(format!(
            "bramble α-order {order} is below d·k = {}",
            d * k
        )));
    }
    match dominating_cycle_or_vertex(g, b)? {
        DominationOutcome::Vertex(v) => Err(Error::Invariant(format!(
            "dominating vertex {v} contradicts α-order >= d·k"
        ))),
        DominationOutcome::Cycle(cycle) => {
            let cycle_set: VertexSet = cycle.iter().copied().collect();
            let alpha_reach = independence_number(g, &g.neighborhood(&cycle_set, true));
            if alpha_reach < d * k {
                return Err(Error::Invariant(format!(
                    "α(N[C]) = {alpha_reach} fell below d·k = {}",
                    d * k
                )));
            }
            if alpha_reach > d * cycle.len() {
                return Err(Error::Invariant(format!(
                    "α(N[C]) = {alpha_reach} exceeds d·|C| = {}",
                    d * cycle.len()
                )));
            }
            if cycle.len() < k {
                return Err(Error::Invariant(format!(
                    "cycle length {} is below k = {k}",
                    cycle.len()
                )));
            }
            Ok(cycle)
        }
    }
}
