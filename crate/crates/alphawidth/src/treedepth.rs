//! Elimination forests, α-depth, exact α-treedepth, and constructive
//! elimination trees: the balanced tree for paths, the Gyárfás-style greedy
//! tree for star-free graphs, and the complete-bipartite construction.

use crate::alpha::independence_number;
use crate::error::Error;
use crate::graph::Graph;
use crate::patterns::is_k1d_free;
use crate::set::VertexSet;
use serde_json::{json, Value};
use std::collections::HashMap;

const ALPHA_TD_CAP: usize = 25;

/// A rooted forest over the vertices of a graph, given by parent pointers.
/// The elimination property demands that every graph edge connect an
/// ancestor-descendant pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationForest {
    pub parent: Vec<Option<usize>>,
    pub roots: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForestViolation {
    WrongVertexCount { forest: usize, graph: usize },
    ParentOutOfRange { vertex: usize },
    Cyclic { vertex: usize },
    RootMismatch { vertex: usize },
    /// Edge of the graph whose endpoints are not ancestor-comparable.
    EdgeNotCovered { u: usize, v: usize },
}

impl std::fmt::Display for ForestViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForestViolation::WrongVertexCount { forest, graph } => {
                write!(f, "forest has {forest} vertices, graph has {graph}")
            }
            ForestViolation::ParentOutOfRange { vertex } => {
                write!(f, "parent of {vertex} out of range or self")
            }
            ForestViolation::Cyclic { vertex } => {
                write!(f, "parent chain from {vertex} cycles")
            }
            ForestViolation::RootMismatch { vertex } => {
                write!(f, "root set disagrees with parent map at {vertex}")
            }
            ForestViolation::EdgeNotCovered { u, v } => {
                write!(f, "edge ({u}, {v}) lies on no root-to-leaf path")
            }
        }
    }
}

impl EliminationForest {
    pub fn from_parents(parent: Vec<Option<usize>>) -> Self {
        let roots = parent
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(v, _)| v)
            .collect();
        EliminationForest { parent, roots }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Vertices on the path from `v` up to its root, inclusive.
    pub fn ancestors_inclusive(&self, v: usize) -> VertexSet {
        let mut set = VertexSet::new();
        let mut cur = Some(v);
        while let Some(u) = cur {
            set.insert(u);
            cur = self.parent[u];
        }
        set
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.parent.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(v);
            }
        }
        ch
    }

    /// Serializes to `{parent:{v:p|null,...}, roots:[...]}`.
    pub fn to_json(&self) -> Value {
        let mut parent = serde_json::Map::new();
        for (v, p) in self.parent.iter().enumerate() {
            parent.insert(v.to_string(), match p {
                Some(p) => json!(p),
                None => Value::Null,
            });
        }
        json!({ "parent": parent, "roots": self.roots.to_vec() })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let map = v
            .get("parent")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::InvalidInput("missing `parent` object".into()))?;
        let mut parent = vec![None; map.len()];
        for (key, val) in map {
            let vertex: usize = key
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad vertex key `{key}`")))?;
            if vertex >= parent.len() {
                return Err(Error::InvalidInput(format!(
                    "vertex {vertex} out of range for {} entries",
                    parent.len()
                )));
            }
            parent[vertex] = match val {
                Value::Null => None,
                other => Some(
                    other
                        .as_u64()
                        .ok_or_else(|| Error::InvalidInput("bad parent value".into()))?
                        as usize,
                ),
            };
        }
        Ok(EliminationForest::from_parents(parent))
    }

    /// DOT export, drawn root-up.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ef {\n  rankdir=BT;\n");
        for v in 0..self.parent.len() {
            out.push_str(&format!("  {v};\n"));
        }
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                out.push_str(&format!("  {v} -> {p};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Checks the structural invariants and the elimination property, naming the
/// violating edge on failure.
pub fn check_elimination_forest(g: &Graph, f: &EliminationForest) -> Result<(), ForestViolation> {
    let n = g.n();
    if f.parent.len() != n {
        return Err(ForestViolation::WrongVertexCount {
            forest: f.parent.len(),
            graph: n,
        });
    }
    for v in 0..n {
        if let Some(p) = f.parent[v] {
            if p >= n || p == v {
                return Err(ForestViolation::ParentOutOfRange { vertex: v });
            }
        }
        if f.roots.contains(v) != f.parent[v].is_none() {
            return Err(ForestViolation::RootMismatch { vertex: v });
        }
    }
    // acyclicity: each chain must reach a root within n steps
    for v in 0..n {
        let mut cur = v;
        let mut steps = 0;
        while let Some(p) = f.parent[cur] {
            cur = p;
            steps += 1;
            if steps > n {
                return Err(ForestViolation::Cyclic { vertex: v });
            }
        }
    }
    for (u, v) in g.edges() {
        let au = f.ancestors_inclusive(u);
        let av = f.ancestors_inclusive(v);
        if !au.contains(v) && !av.contains(u) {
            return Err(ForestViolation::EdgeNotCovered { u, v });
        }
    }
    Ok(())
}

/// Flag form of [`check_elimination_forest`].
pub fn is_elimination_forest(g: &Graph, f: &EliminationForest) -> bool {
    check_elimination_forest(g, f).is_ok()
}

/// α-depth of a valid elimination forest: the maximum `α(G[V(P)])` over
/// root-to-leaf paths `P`.
pub fn alpha_depth(g: &Graph, f: &EliminationForest) -> Result<usize, Error> {
    check_elimination_forest(g, f)
        .map_err(|v| Error::InvalidInput(format!("invalid elimination forest: {v}")))?;
    let children = f.children();
    let mut best = 0;
    for (v, kids) in children.iter().enumerate() {
        if kids.is_empty() {
            let path = f.ancestors_inclusive(v);
            best = best.max(independence_number(g, &path));
        }
    }
    Ok(best)
}

// --- exact α-treedepth -------------------------------------------------

/// Ancestor profile: the attachment boundary `B = S ∩ N(A)` (kept sorted)
/// together with `α(G[A \ N(U)])` for every `U ⊆ B`. This is exactly the
/// information future root choices inside `S` can observe about the already
/// chosen ancestors `A`, so memoizing on it is lossless while collapsing the
/// exponentially many `A` that behave identically.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Profile {
    boundary: Vec<usize>,
    table: Vec<usize>,
}

impl Profile {
    fn empty() -> Self {
        Profile {
            boundary: Vec::new(),
            table: vec![0],
        }
    }

    fn lookup(&self, subset: &VertexSet) -> usize {
        let mut idx = 0usize;
        for (i, &b) in self.boundary.iter().enumerate() {
            if subset.contains(b) {
                idx |= 1 << i;
            }
        }
        self.table[idx]
    }

    /// α(G[A ∪ {r}]) given this profile of `A`.
    fn alpha_with_root(&self, r: usize) -> usize {
        let base = self.table[0];
        let exclusive = if self.boundary.contains(&r) {
            self.lookup(&VertexSet::singleton(r))
        } else {
            base
        };
        base.max(1 + exclusive)
    }

    /// Profile of `A ∪ {r}` restricted to a component `c` of `G[S - r]`.
    fn child(&self, g: &Graph, c: &VertexSet, r: usize) -> Profile {
        let r_neighbors = g.adj(r);
        let old_boundary: VertexSet = self.boundary.iter().copied().collect();
        let boundary_set = c.intersection(&old_boundary).union(&c.intersection(r_neighbors));
        let boundary = boundary_set.to_vec();
        let mut table = vec![0usize; 1 << boundary.len()];
        for (idx, slot) in table.iter_mut().enumerate() {
            let u_prime: VertexSet = boundary
                .iter()
                .enumerate()
                .filter(|(i, _)| idx >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let u = u_prime.intersection(&old_boundary);
            let attach = u_prime.intersects(r_neighbors);
            *slot = if attach {
                // r is excluded from the independent extensions
                self.lookup(&u)
            } else {
                let without_r = self.lookup(&u);
                let with_r = if self.boundary.contains(&r) {
                    self.lookup(&u.with(r))
                } else {
                    without_r
                };
                without_r.max(1 + with_r)
            };
        }
        Profile { boundary, table }
    }
}

type Memo = HashMap<(Vec<usize>, Profile), (usize, usize)>;

/// Exact α-treedepth with a witness elimination forest.
///
/// Minimum over root choices `r` of the maximum over components of
/// `G[S] - r`, recursively; root-to-leaf path values are evaluated through
/// ancestor profiles. Splitting per component is optimal because merging
/// components under one child only enlarges path vertex sets.
pub fn alpha_td_exact(g: &Graph) -> Result<(usize, EliminationForest), Error> {
    if g.n() > ALPHA_TD_CAP {
        return Err(Error::SizeCap {
            operation: "alpha_td_exact",
            size: g.n(),
            cap: ALPHA_TD_CAP,
        });
    }
    if g.n() == 0 {
        return Ok((0, EliminationForest::from_parents(Vec::new())));
    }
    let mut memo: Memo = Memo::new();
    let mut depth = 0;
    for c in g.components(&g.vertices()) {
        depth = depth.max(solve(g, &c, &Profile::empty(), &mut memo));
    }
    let mut parent = vec![None; g.n()];
    for c in g.components(&g.vertices()) {
        rebuild(g, &c, &Profile::empty(), &memo, None, &mut parent);
    }
    let forest = EliminationForest::from_parents(parent);
    debug_assert!(is_elimination_forest(g, &forest));
    Ok((depth, forest))
}

fn solve(g: &Graph, s: &VertexSet, prof: &Profile, memo: &mut Memo) -> usize {
    let key = (s.to_vec(), prof.clone());
    if let Some(&(val, _)) = memo.get(&key) {
        return val;
    }
    let mut best = usize::MAX;
    let mut best_root = usize::MAX;
    for r in s.iter() {
        let rest = s.without(r);
        let val = if rest.is_empty() {
            prof.alpha_with_root(r)
        } else {
            let mut worst = 0;
            for c in g.components(&rest) {
                let child = prof.child(g, &c, r);
                worst = worst.max(solve(g, &c, &child, memo));
                if worst >= best {
                    break;
                }
            }
            worst
        };
        if val < best {
            best = val;
            best_root = r;
        }
    }
    memo.insert(key, (best, best_root));
    best
}

fn rebuild(
    g: &Graph,
    s: &VertexSet,
    prof: &Profile,
    memo: &Memo,
    parent_of_root: Option<usize>,
    parent: &mut Vec<Option<usize>>,
) {
    let key = (s.to_vec(), prof.clone());
    let (_, r) = memo[&key];
    parent[r] = parent_of_root;
    let rest = s.without(r);
    for c in g.components(&rest) {
        let child = prof.child(g, &c, r);
        rebuild(g, &c, &child, memo, Some(r), parent);
    }
}

// --- constructive elimination trees ------------------------------------

/// The closed-form α-treedepth of the k-vertex path, `⌈log2(k/3 + 1)⌉`
/// (1 for k <= 3).
pub fn path_alpha_td_formula(k: usize) -> usize {
    let mut depth = 0;
    // smallest d with 3(2^d - 1) >= k
    while 3 * ((1usize << depth) - 1) < k {
        depth += 1;
    }
    depth.max(1)
}

/// Optimal elimination tree for the path on `k >= 1` vertices: the balanced
/// median construction on the next size `3(2^d - 1)`, restricted to the
/// first `k` vertices. Its α-depth equals `path_alpha_td_formula(k)`.
pub fn path_elimination_tree(k: usize) -> EliminationForest {
    assert!(k >= 1, "path_elimination_tree requires k >= 1");
    let mut depth = 1;
    while 3 * ((1usize << depth) - 1) < k {
        depth += 1;
    }
    let full = 3 * ((1usize << depth) - 1);
    let mut parent = vec![None; full];
    build_median_tree(&mut parent, 0, full - 1, None);
    // restrict to the first k vertices: nearest surviving ancestor
    let restricted: Vec<Option<usize>> = (0..k)
        .map(|v| {
            let mut cur = parent[v];
            while let Some(p) = cur {
                if p < k {
                    return Some(p);
                }
                cur = parent[p];
            }
            None
        })
        .collect();
    EliminationForest::from_parents(restricted)
}

/// Builds the median tree of the interval `[lo, hi]` (length `3(2^d - 1)`)
/// into `parent`, returning nothing; the interval root is its midpoint.
fn build_median_tree(parent: &mut [Option<usize>], lo: usize, hi: usize, up: Option<usize>) {
    let len = hi - lo + 1;
    let mid = (lo + hi) / 2;
    parent[mid] = up;
    if len == 3 {
        parent[lo] = Some(mid);
        parent[hi] = Some(mid);
        return;
    }
    parent[mid - 1] = Some(mid);
    parent[mid + 1] = Some(mid);
    build_median_tree(parent, lo, mid - 2, Some(mid - 1));
    build_median_tree(parent, mid + 2, hi, Some(mid + 1));
}

/// Outcome of the Gyárfás-style greedy construction.
#[derive(Clone, Debug)]
pub enum GyarfasOutcome {
    /// Elimination tree of α-depth at most `max{1, (d-1)(k-2)}`.
    Forest(EliminationForest),
    /// An induced path on `k` vertices, listed from its endpoint `r`.
    Path(Vec<usize>),
}

/// Greedy elimination tree for connected `K_{1,d}`-free graphs: either an
/// elimination tree of α-depth at most `max{1, (d-1)(k-2)}` rooted at vertex
/// 0, or an induced path on `k` vertices starting at vertex 0.
///
/// The recursion follows the path argument: order `N[r]` as a path `Q`
/// ascending, recurse into each component `J` of `G - N[r]` through its
/// neighbor furthest along `Q` with budget `k-1`, and either assemble the
/// tree from `Q` and the sub-trees or propagate an induced path back up.
pub fn gyarfas_elimination(g: &Graph, d: usize, k: usize) -> Result<GyarfasOutcome, Error> {
    if !g.is_connected() {
        return Err(Error::Precondition("gyarfas_elimination needs a connected graph".into()));
    }
    if d < 1 || k < 1 {
        return Err(Error::Precondition("gyarfas_elimination needs d >= 1 and k >= 1".into()));
    }
    let (free, witness) = is_k1d_free(g, d);
    if !free {
        return Err(Error::Precondition(format!(
            "graph is not K_{{1,{d}}}-free: induced star {:?}",
            witness.unwrap()
        )));
    }
    if g.n() == 0 {
        return Ok(GyarfasOutcome::Forest(EliminationForest::from_parents(Vec::new())));
    }
    // degenerate budgets: a 1- or 2-vertex path is immediate, and with no
    // edge at the root the graph is a single vertex
    if k == 1 {
        return Ok(GyarfasOutcome::Path(vec![0]));
    }
    if k == 2 {
        return Ok(match g.adj(0).min() {
            Some(u) => GyarfasOutcome::Path(vec![0, u]),
            None => GyarfasOutcome::Forest(EliminationForest::from_parents(vec![None])),
        });
    }

    let mut parent = vec![None; g.n()];
    match gyarfas_rec(g, &g.vertices(), 0, k, &mut parent) {
        Some(path) => {
            debug_assert!(path.len() == k);
            debug_assert!(path.iter().enumerate().all(|(i, &u)| {
                path[i + 1..]
                    .iter()
                    .enumerate()
                    .all(|(off, &v)| g.has_edge(u, v) == (off == 0))
            }));
            Ok(GyarfasOutcome::Path(path))
        }
        None => {
            let forest = EliminationForest::from_parents(parent);
            debug_assert!(is_elimination_forest(g, &forest));
            Ok(GyarfasOutcome::Forest(forest))
        }
    }
}

/// Returns `Some(path)` if an induced path on `budget` vertices with endpoint
/// `r` exists down this branch; otherwise writes the elimination tree of
/// `G[h]` rooted at `r` into `parent` and returns `None`.
fn gyarfas_rec(
    g: &Graph,
    h: &VertexSet,
    r: usize,
    budget: usize,
    parent: &mut Vec<Option<usize>>,
) -> Option<Vec<usize>> {
    if budget == 3 {
        // induced P3 with endpoint r: r - a - b with b outside N[r]
        let closed_r = g.adj(r).with(r);
        for a in g.adj(r).intersection(h).iter() {
            let b_candidates = g.adj(a).intersection(h).minus(&closed_r);
            if let Some(b) = b_candidates.min() {
                return Some(vec![r, a, b]);
            }
        }
        // no induced P3 from r: r dominates G[h]; chain the rest below r
        debug_assert!(h.minus(&closed_r).is_empty());
        let mut prev = r;
        for v in h.iter() {
            if v != r {
                parent[v] = Some(prev);
                prev = v;
            }
        }
        return None;
    }

    let neighbors = g.adj(r).intersection(h);
    let q: Vec<usize> = neighbors.to_vec(); // ascending = order along Q after r
    let closed = neighbors.with(r);
    let rest = h.minus(&closed);

    let mut sub = Vec::new();
    for j in g.components(&rest) {
        let attachments = g.neighborhood(&j, false).intersection(&neighbors);
        let r_j = attachments
            .iter()
            .max()
            .expect("component of G - N[r] attaches to N(r)");
        sub.push((j, r_j));
    }
    for (j, r_j) in &sub {
        if let Some(path) = gyarfas_rec(g, &j.with(*r_j), *r_j, budget - 1, parent) {
            let mut extended = Vec::with_capacity(path.len() + 1);
            extended.push(r);
            extended.extend(path);
            return Some(extended);
        }
    }
    // assemble: Q as a chain below r, sub-trees already written with their
    // roots r_j on Q
    let mut prev = r;
    for &v in &q {
        parent[v] = Some(prev);
        prev = v;
    }
    None
}

/// Elimination tree for `K_{d,d}` (= [`Graph::complete_bipartite`]`(d, d)`)
/// of α-depth exactly `d`: a chain through one side with the other side
/// attached as leaves below the chain's last vertex.
pub fn kdd_elimination(d: usize) -> EliminationForest {
    assert!(d >= 1, "kdd_elimination requires d >= 1");
    let mut parent: Vec<Option<usize>> = (0..d).map(|i| i.checked_sub(1)).collect();
    parent.extend(std::iter::repeat_n(Some(d - 1), d));
    EliminationForest::from_parents(parent)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: enumerate all parent functions, keep valid
    /// elimination forests, take the minimum α-depth.
    fn alpha_td_bruteforce(g: &Graph) -> usize {
        let n = g.n();
        assert!((1..=6).contains(&n));
        let mut best = usize::MAX;
        let mut assignment = vec![0usize; n]; // 0 = root, i+1 = parent i
        loop {
            let parent: Vec<Option<usize>> = assignment
                .iter()
                .enumerate()
                .map(|(v, &a)| {
                    if a == 0 {
                        None
                    } else {
                        Some(if a > v { a } else { a - 1 })
                    }
                })
                .collect();
            let parent_ok = parent.iter().enumerate().all(|(v, p)| p != &Some(v));
            if parent_ok {
                let f = EliminationForest::from_parents(parent);
                if check_elimination_forest(g, &f).is_ok() {
                    if let Ok(depth) = alpha_depth(g, &f) {
                        best = best.min(depth);
                    }
                }
            }
            // odometer over {0..n} per digit
            let mut i = 0;
            loop {
                if i == n {
                    return best;
                }
                assignment[i] += 1;
                if assignment[i] <= n {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
        }
    }

    /// Second oracle: the plain (S, A) recursion without profiles.
    fn alpha_td_plain(g: &Graph) -> usize {
        fn rec(g: &Graph, s: &VertexSet, a: &VertexSet) -> usize {
            match s.min() {
                None => independence_number(g, a),
                Some(_) => s
                    .iter()
                    .map(|r| {
                        let rest = s.without(r);
                        let with_r = a.with(r);
                        if rest.is_empty() {
                            independence_number(g, &with_r)
                        } else {
                            g.components(&rest)
                                .iter()
                                .map(|c| rec(g, c, &with_r))
                                .max()
                                .unwrap()
                        }
                    })
                    .min()
                    .unwrap(),
            }
        }
        g.components(&g.vertices())
            .iter()
            .map(|c| rec(g, c, &VertexSet::new()))
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn forest_validation() {
        // path 0-1-2 with root 1 and children 0, 2
        let p3 = Graph::path(3);
        let f = EliminationForest::from_parents(vec![Some(1), None, Some(1)]);
        assert!(is_elimination_forest(&p3, &f));

        // K2 with two roots: the edge lies on no root-to-leaf path
        let k2 = Graph::complete(2);
        let f = EliminationForest::from_parents(vec![None, None]);
        assert_eq!(
            check_elimination_forest(&k2, &f),
            Err(ForestViolation::EdgeNotCovered { u: 0, v: 1 })
        );

        // a single chain makes every pair comparable
        let c5 = Graph::cycle(5);
        let chain = EliminationForest::from_parents(vec![None, Some(0), Some(1), Some(2), Some(3)]);
        assert!(is_elimination_forest(&c5, &chain));
    }

    #[test]
    fn alpha_depth_examples() {
        let k4 = Graph::complete(4);
        let chain = EliminationForest::from_parents(vec![None, Some(0), Some(1), Some(2)]);
        assert_eq!(alpha_depth(&k4, &chain).unwrap(), 1);

        // star forest over an edgeless graph: every path has 2 nonadjacent
        // vertices
        let e4 = Graph::empty(4);
        let star = EliminationForest::from_parents(vec![None, Some(0), Some(0), Some(0)]);
        assert_eq!(alpha_depth(&e4, &star).unwrap(), 2);

        // invalid forests are rejected
        let p3 = Graph::path(3);
        let bad = EliminationForest::from_parents(vec![None, None, Some(1)]);
        assert!(alpha_depth(&p3, &bad).is_err());
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(alpha_td_exact(&Graph::path(3)).unwrap().0, 1);
        assert_eq!(alpha_td_exact(&Graph::complete(5)).unwrap().0, 1);
        assert_eq!(alpha_td_exact(&Graph::complete_bipartite(3, 3)).unwrap().0, 3);
        assert_eq!(alpha_td_exact(&Graph::empty(0)).unwrap().0, 0);

        let (d, f) = alpha_td_exact(&Graph::cycle(6)).unwrap();
        assert!(is_elimination_forest(&Graph::cycle(6), &f));
        assert_eq!(alpha_depth(&Graph::cycle(6), &f).unwrap(), d);
    }

    #[test]
    fn exact_matches_bruteforce() {
        let mut seed = 31u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed >> 33
        };
        for n in 1..=5usize {
            for _ in 0..12 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 2 == 0 {
                            g.add_edge(u, v);
                        }
                    }
                }
                let exact = alpha_td_exact(&g).unwrap().0;
                assert_eq!(exact, alpha_td_bruteforce(&g), "{g:?}");
                assert_eq!(exact, alpha_td_plain(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn exact_matches_plain_recursion_n7() {
        let mut seed = 77u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed >> 33
        };
        for _ in 0..40 {
            let n = 6 + (next() % 2) as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 40 {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(alpha_td_exact(&g).unwrap().0, alpha_td_plain(&g), "{g:?}");
        }
    }

    #[test]
    fn witness_achieves_reported_depth() {
        let mut seed = 13u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed >> 33
        };
        for _ in 0..30 {
            let n = 2 + (next() % 6) as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 2 == 0 {
                        g.add_edge(u, v);
                    }
                }
            }
            let (d, f) = alpha_td_exact(&g).unwrap();
            assert!(is_elimination_forest(&g, &f), "{g:?}");
            assert_eq!(alpha_depth(&g, &f).unwrap(), d, "{g:?}");
        }
    }

    #[test]
    fn median_tree_matches_figure() {
        // the optimal tree for the 21-vertex path: root 11, children 10 and
        // 12, sub-roots 5 and 17 (1-indexed labels; ours are 0-indexed)
        let f = path_elimination_tree(21);
        assert_eq!(f.parent[10], None);
        assert_eq!(f.parent[9], Some(10));
        assert_eq!(f.parent[11], Some(10));
        assert_eq!(f.parent[4], Some(9));
        assert_eq!(f.parent[16], Some(11));
        let p21 = Graph::path(21);
        assert!(is_elimination_forest(&p21, &f));
        assert_eq!(alpha_depth(&p21, &f).unwrap(), 3);
    }

    #[test]
    fn path_tree_small_cases() {
        let f = path_elimination_tree(1);
        assert_eq!(f.parent, vec![None]);
        assert_eq!(alpha_depth(&Graph::path(1), &f).unwrap(), 1);

        let f = path_elimination_tree(3);
        assert!(is_elimination_forest(&Graph::path(3), &f));
        assert_eq!(alpha_depth(&Graph::path(3), &f).unwrap(), 1);
    }

    #[test]
    fn path_tree_matches_formula_up_to_40() {
        for k in 1..=40 {
            let f = path_elimination_tree(k);
            let g = Graph::path(k);
            assert!(is_elimination_forest(&g, &f), "k={k}");
            assert_eq!(alpha_depth(&g, &f).unwrap(), path_alpha_td_formula(k), "k={k}");
        }
    }

    #[test]
    fn gyarfas_on_cliques_and_paths() {
        // K_n is K_{1,2}-free and P3-free: depth-1 tree
        let k5 = Graph::complete(5);
        match gyarfas_elimination(&k5, 2, 3).unwrap() {
            GyarfasOutcome::Forest(f) => {
                assert!(is_elimination_forest(&k5, &f));
                assert_eq!(alpha_depth(&k5, &f).unwrap(), 1);
            }
            GyarfasOutcome::Path(_) => panic!("K5 has no induced P3"),
        }

        // the path itself comes back as an induced path
        for k in 3..=7 {
            let p = Graph::path(k);
            match gyarfas_elimination(&p, 3, k).unwrap() {
                GyarfasOutcome::Path(path) => {
                    assert_eq!(path.len(), k);
                    assert_eq!(path[0], 0);
                    assert_induced_path(&p, &path);
                }
                GyarfasOutcome::Forest(_) => panic!("P{k} contains itself"),
            }
        }
    }

    #[test]
    fn gyarfas_rejections() {
        let disconnected = Graph::empty(3);
        assert!(matches!(
            gyarfas_elimination(&disconnected, 3, 4),
            Err(Error::Precondition(_))
        ));
        let claw = Graph::star(3);
        assert!(matches!(
            gyarfas_elimination(&claw, 3, 4),
            Err(Error::Precondition(_))
        ));
    }

    fn assert_induced_path(g: &Graph, path: &[usize]) {
        for (i, &u) in path.iter().enumerate() {
            for (j, &v) in path.iter().enumerate().skip(i + 1) {
                assert_eq!(g.has_edge(u, v), j == i + 1, "path {path:?} at ({u},{v})");
            }
        }
    }

    #[test]
    fn gyarfas_bound_on_random_claw_free_p5_free_graphs() {
        let mut seed = 4242u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed >> 33
        };
        let mut tested = 0;
        while tested < 25 {
            let n = 4 + (next() % 7) as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 55 {
                        g.add_edge(u, v);
                    }
                }
            }
            if !g.is_connected() || !is_k1d_free(&g, 3).0 {
                continue;
            }
            tested += 1;
            match gyarfas_elimination(&g, 3, 5).unwrap() {
                GyarfasOutcome::Forest(f) => {
                    assert!(is_elimination_forest(&g, &f), "{g:?}");
                    assert!(alpha_depth(&g, &f).unwrap() <= (3 - 1) * (5 - 2), "{g:?}");
                }
                GyarfasOutcome::Path(path) => {
                    assert_eq!(path.len(), 5);
                    assert_induced_path(&g, &path);
                }
            }
        }
    }

    #[test]
    fn kdd_construction() {
        let f = kdd_elimination(1);
        let k11 = Graph::complete_bipartite(1, 1);
        assert!(is_elimination_forest(&k11, &f));
        assert_eq!(alpha_depth(&k11, &f).unwrap(), 1);

        for d in 1..=5 {
            let g = Graph::complete_bipartite(d, d);
            let f = kdd_elimination(d);
            assert!(is_elimination_forest(&g, &f), "d={d}");
            assert_eq!(alpha_depth(&g, &f).unwrap(), d, "d={d}");
            assert_eq!(alpha_td_exact(&g).unwrap().0, d, "d={d}");
        }
    }

    #[test]
    fn induced_subgraph_monotonicity() {
        let g = Graph::cycle(7);
        let (full, _) = alpha_td_exact(&g).unwrap();
        for v in 0..7 {
            let (sub, map) = g.induced(&g.vertices().without(v));
            assert!(map.len() == 6);
            assert!(alpha_td_exact(&sub).unwrap().0 <= full);
        }
    }

    #[test]
    fn disjoint_union_is_max() {
        // P4 ⊎ K3: atd = max(atd(P4), atd(K3)) = max(2, 1)
        let mut g = Graph::empty(7);
        for i in 1..4 {
            g.add_edge(i - 1, i);
        }
        g.add_edge(4, 5);
        g.add_edge(5, 6);
        g.add_edge(4, 6);
        let whole = alpha_td_exact(&g).unwrap().0;
        let p4 = alpha_td_exact(&Graph::path(4)).unwrap().0;
        let k3 = alpha_td_exact(&Graph::complete(3)).unwrap().0;
        assert_eq!(whole, p4.max(k3));
    }

    #[test]
    fn json_roundtrip() {
        let f = kdd_elimination(2);
        let v = f.to_json();
        let back = EliminationForest::from_json(&v).unwrap();
        assert_eq!(back, f);
    }
}
