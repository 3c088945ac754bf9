//! Tree-decompositions, their validation, α-width, and the exact solvers for
//! tree-independence number and treewidth via elimination orderings.

use crate::alpha::independence_number;
use crate::error::Error;
use crate::graph::Graph;
use crate::set::VertexSet;
use serde_json::{json, Value};

/// A tree-decomposition: a tree over node ids `0..bags.len()-1` with one
/// vertex bag per node.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
    pub root: Option<usize>,
}

/// Why a candidate decomposition is not valid for a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    /// Node ids out of range, duplicate/self edges, or the node graph is not
    /// a tree.
    NotATree(String),
    BagOutOfRange { node: usize, vertex: usize },
    VertexUncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    /// The nodes whose bags contain `vertex` do not induce a subtree.
    TraceDisconnected { vertex: usize },
}

impl std::fmt::Display for TdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdViolation::NotATree(why) => write!(f, "node graph is not a tree: {why}"),
            TdViolation::BagOutOfRange { node, vertex } => {
                write!(f, "bag of node {node} contains out-of-range vertex {vertex}")
            }
            TdViolation::VertexUncovered { vertex } => {
                write!(f, "vertex {vertex} appears in no bag")
            }
            TdViolation::EdgeUncovered { u, v } => {
                write!(f, "edge ({u}, {v}) is contained in no bag")
            }
            TdViolation::TraceDisconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} do not form a subtree")
            }
        }
    }
}

impl TreeDecomposition {
    /// Single-node decomposition with bag `x`.
    pub fn single_bag(x: VertexSet) -> Self {
        TreeDecomposition {
            bags: vec![x],
            edges: Vec::new(),
            root: Some(0),
        }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn neighbors(&self, t: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == t {
                out.push(b);
            } else if b == t {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    /// Serializes to the certificate schema
    /// `{nodes:[...], edges:[[i,j],...], bags:{i:[v,...]}}`.
    pub fn to_json(&self) -> Value {
        let nodes: Vec<usize> = (0..self.bags.len()).collect();
        let edges: Vec<Value> = self.edges.iter().map(|&(a, b)| json!([a, b])).collect();
        let mut bags = serde_json::Map::new();
        for (i, bag) in self.bags.iter().enumerate() {
            bags.insert(i.to_string(), json!(bag.to_vec()));
        }
        json!({ "nodes": nodes, "edges": edges, "bags": bags })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidInput("decomposition JSON must be an object".into()))?;
        let nodes = obj
            .get("nodes")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput("missing `nodes` array".into()))?;
        let n_nodes = nodes.len();
        let mut edges = Vec::new();
        for e in obj
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput("missing `edges` array".into()))?
        {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::InvalidInput("edge must be a pair".into()))?;
            let a = pair[0].as_u64().ok_or_else(|| Error::InvalidInput("bad edge id".into()))?;
            let b = pair[1].as_u64().ok_or_else(|| Error::InvalidInput("bad edge id".into()))?;
            edges.push((a as usize, b as usize));
        }
        let bags_obj = obj
            .get("bags")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::InvalidInput("missing `bags` object".into()))?;
        let mut bags = vec![VertexSet::new(); n_nodes];
        for (key, val) in bags_obj {
            let id: usize = key
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad bag key `{key}`")))?;
            if id >= n_nodes {
                return Err(Error::InvalidInput(format!("bag key {id} out of range")));
            }
            let verts = val
                .as_array()
                .ok_or_else(|| Error::InvalidInput("bag must be an array".into()))?;
            for v in verts {
                let x = v.as_u64().ok_or_else(|| Error::InvalidInput("bad bag vertex".into()))?;
                bags[id].insert(x as usize);
            }
        }
        Ok(TreeDecomposition {
            bags,
            edges,
            root: None,
        })
    }

    /// DOT export with bags as node labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph td {\n  node [shape=box];\n");
        for (i, bag) in self.bags.iter().enumerate() {
            let label: Vec<String> = bag.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("  {} [label=\"{{{}}}\"];\n", i, label.join(",")));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  {} -- {};\n", a, b));
        }
        out.push_str("}\n");
        out
    }
}

/// Checks the three tree-decomposition axioms plus structural sanity.
pub fn check_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let k = td.bags.len();
    if k == 0 {
        return Err(TdViolation::NotATree("no nodes".into()));
    }
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &td.edges {
        if a >= k || b >= k {
            return Err(TdViolation::NotATree(format!("edge ({a}, {b}) out of range")));
        }
        if a == b {
            return Err(TdViolation::NotATree(format!("self-loop at node {a}")));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    if td.edges.len() != k - 1 {
        return Err(TdViolation::NotATree(format!(
            "{} edges on {} nodes",
            td.edges.len(),
            k
        )));
    }
    // connectivity
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for &u in &adj[t] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(TdViolation::NotATree("disconnected".into()));
    }

    // bags within range, coverage of vertices
    let mut covered = VertexSet::new();
    for (i, bag) in td.bags.iter().enumerate() {
        for v in bag.iter() {
            if v >= g.n() {
                return Err(TdViolation::BagOutOfRange { node: i, vertex: v });
            }
        }
        covered = covered.union(bag);
    }
    for v in 0..g.n() {
        if !covered.contains(v) {
            return Err(TdViolation::VertexUncovered { vertex: v });
        }
    }

    // coverage of edges
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Err(TdViolation::EdgeUncovered { u, v });
        }
    }

    // trace connectivity per vertex
    for v in 0..g.n() {
        let trace: Vec<usize> = (0..k).filter(|&t| td.bags[t].contains(v)).collect();
        let start = trace[0];
        let inside: std::collections::HashSet<usize> = trace.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for &u in &adj[t] {
                if inside.contains(&u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        if seen.len() != trace.len() {
            return Err(TdViolation::TraceDisconnected { vertex: v });
        }
    }
    Ok(())
}

/// α-width of a valid decomposition: the maximum bag independence number.
pub fn alpha_width(g: &Graph, td: &TreeDecomposition) -> Result<usize, Error> {
    check_tree_decomposition(g, td)
        .map_err(|v| Error::InvalidInput(format!("invalid tree-decomposition: {v}")))?;
    Ok(td
        .bags
        .iter()
        .map(|b| independence_number(g, b))
        .max()
        .unwrap_or(0))
}

const ELIMINATION_CAP: usize = 18;

/// Exact tree-independence number with a witness decomposition.
///
/// Minimizes, over all vertex elimination orderings, the maximum independence
/// number (taken in `G`) of the bags of the induced fill-in clique tree. This
/// equals α-tw because optimal decompositions may be taken over the bags of a
/// minimal triangulation and every minimal triangulation arises from some
/// ordering. Subset DP, so capped at 18 vertices.
pub fn alpha_tw_exact(g: &Graph) -> Result<(usize, TreeDecomposition), Error> {
    elimination_optimum(g, "alpha_tw_exact", independence_number)
}

/// Exact treewidth with a witness decomposition (same elimination DP with bag
/// cardinality as the cost). Width of the empty graph is reported as 0.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition), Error> {
    elimination_optimum(g, "treewidth_exact", |_, bag| bag.len().saturating_sub(1))
}

fn elimination_optimum(
    g: &Graph,
    operation: &'static str,
    cost: impl Fn(&Graph, &VertexSet) -> usize,
) -> Result<(usize, TreeDecomposition), Error> {
    let n = g.n();
    if n > ELIMINATION_CAP {
        return Err(Error::SizeCap {
            operation,
            size: n,
            cap: ELIMINATION_CAP,
        });
    }
    if n == 0 {
        return Ok((0, TreeDecomposition::single_bag(VertexSet::new())));
    }

    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut value = vec![u8::MAX; (full as usize) + 1];
    let mut choice = vec![u8::MAX; (full as usize) + 1];
    value[0] = 0;
    for mask in 1..=full {
        let mut best = u8::MAX;
        let mut best_v = u8::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = mask & !(1 << v);
            let bag = elimination_bag(g, v, prev);
            let c = cost(g, &bag) as u8;
            let val = value[prev as usize].max(c);
            if val < best {
                best = val;
                best_v = v as u8;
            }
        }
        value[mask as usize] = best;
        choice[mask as usize] = best_v;
    }

    // reconstruct the ordering (choice[mask] is the vertex eliminated last
    // within the prefix `mask`)
    let mut order = vec![0usize; n];
    let mut mask = full;
    for i in (0..n).rev() {
        let v = choice[mask as usize] as usize;
        order[i] = v;
        mask &= !(1 << v);
    }

    let td = decomposition_from_ordering(g, &order);
    Ok((value[full as usize] as usize, td))
}

/// The bag of `v` when eliminated after the vertex set `prev`: `v` together
/// with every remaining vertex reachable from `v` through eliminated ones.
fn elimination_bag(g: &Graph, v: usize, prev: u32) -> VertexSet {
    let mut bag = VertexSet::singleton(v);
    let mut visited_prev = 0u32;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for w in g.adj(u).iter() {
            let bit = 1u32 << w;
            if prev & bit != 0 {
                if visited_prev & bit == 0 {
                    visited_prev |= bit;
                    stack.push(w);
                }
            } else {
                bag.insert(w);
            }
        }
    }
    bag
}

/// Clique-tree construction from an elimination ordering: each vertex's bag
/// links to the bag of the earliest-eliminated later vertex it contains;
/// component-final bags are chained to keep the node graph a tree.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    if n == 0 {
        return TreeDecomposition::single_bag(VertexSet::new());
    }
    let mut position = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut prev_mask = 0u32;
    for &v in order {
        bags.push(elimination_bag(g, v, prev_mask));
        prev_mask |= 1 << v;
    }
    let mut edges = Vec::new();
    let mut parentless = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        let later = bag.without(order[i]);
        match later.iter().min_by_key(|&u| position[u]) {
            Some(u) => edges.push((i, position[u])),
            None => parentless.push(i),
        }
    }
    for pair in parentless.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    TreeDecomposition {
        bags,
        edges,
        root: Some(n - 1),
    }
}
