//! Induced minor models, desk-scale containment search with the small-model
//! clique bound, wheel-specific constructions around long induced cycles,
//! and the end-to-end wheel detection pipeline.

use crate::alpha::{clique_number, clique_with_witness};
use crate::decomposition::{check_tree_decomposition, treewidth_exact, TreeDecomposition};
use crate::error::Error;
use crate::graph::Graph;
use crate::patterns::is_k1d_free;
use crate::separators::Bounds;
use crate::set::VertexSet;
use num_bigint::BigUint;
use serde_json::{json, Value};

const HOST_CAP: usize = 16;
const PATTERN_CAP: usize = 8;

/// The `l`-wheel: rim cycle `0..l-1` plus hub `l` adjacent to every rim
/// vertex. `W_3 = K_4`.
pub fn wheel_graph(l: usize) -> Graph {
    assert!(l >= 3, "wheel_graph requires l >= 3");
    let mut g = Graph::cycle(l);
    let mut w = Graph::empty(l + 1);
    for (u, v) in g.edges() {
        w.add_edge(u, v);
    }
    for v in 0..l {
        w.add_edge(v, l);
    }
    g = w;
    g
}

/// An induced minor model: one branch set per pattern vertex, pairwise
/// disjoint, each connected, realizing exactly the pattern's adjacencies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMinorModel {
    pub branch: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    WrongBranchCount { model: usize, pattern: usize },
    EmptyBranch { vertex: usize },
    DisconnectedBranch { vertex: usize },
    OverlappingBranches { u: usize, v: usize },
    MissingEdge { u: usize, v: usize },
    ExtraEdge { u: usize, v: usize },
}

impl std::fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelViolation::WrongBranchCount { model, pattern } => {
                write!(f, "model has {model} branch sets for a {pattern}-vertex pattern")
            }
            ModelViolation::EmptyBranch { vertex } => {
                write!(f, "branch set of pattern vertex {vertex} is empty")
            }
            ModelViolation::DisconnectedBranch { vertex } => {
                write!(f, "branch set of pattern vertex {vertex} is not connected")
            }
            ModelViolation::OverlappingBranches { u, v } => {
                write!(f, "branch sets of pattern vertices {u} and {v} overlap")
            }
            ModelViolation::MissingEdge { u, v } => {
                write!(f, "pattern edge ({u}, {v}) has no host edge between its branch sets")
            }
            ModelViolation::ExtraEdge { u, v } => {
                write!(f, "host edge between branch sets of nonadjacent pattern vertices ({u}, {v})")
            }
        }
    }
}

impl InducedMinorModel {
    pub fn union(&self) -> VertexSet {
        self.branch
            .iter()
            .fold(VertexSet::new(), |acc, b| acc.union(b))
    }

    /// Certificate JSON: `{pattern:"W5", branch:{0:[...],...}}`.
    pub fn to_json(&self, pattern: &str) -> Value {
        let mut branch = serde_json::Map::new();
        for (v, set) in self.branch.iter().enumerate() {
            branch.insert(v.to_string(), json!(set.to_vec()));
        }
        json!({ "pattern": pattern, "branch": branch })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let map = v
            .get("branch")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::InvalidInput("missing `branch` object".into()))?;
        let mut branch = vec![VertexSet::new(); map.len()];
        for (key, val) in map {
            let idx: usize = key
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad pattern vertex `{key}`")))?;
            if idx >= branch.len() {
                return Err(Error::InvalidInput(format!("pattern vertex {idx} out of range")));
            }
            let verts = val
                .as_array()
                .ok_or_else(|| Error::InvalidInput("branch must be an array".into()))?;
            for x in verts {
                let v = x.as_u64().ok_or_else(|| Error::InvalidInput("bad branch vertex".into()))?;
                branch[idx].insert(v as usize);
            }
        }
        Ok(InducedMinorModel { branch })
    }
}

/// Verifies all model conditions, naming the failing one.
pub fn check_model(g: &Graph, h: &Graph, m: &InducedMinorModel) -> Result<(), ModelViolation> {
    if m.branch.len() != h.n() {
        return Err(ModelViolation::WrongBranchCount {
            model: m.branch.len(),
            pattern: h.n(),
        });
    }
    for (v, set) in m.branch.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::EmptyBranch { vertex: v });
        }
        if !g.is_connected_set(set) {
            return Err(ModelViolation::DisconnectedBranch { vertex: v });
        }
    }
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            if m.branch[u].intersects(&m.branch[v]) {
                return Err(ModelViolation::OverlappingBranches { u, v });
            }
            let touching = g.neighborhood(&m.branch[u], false).intersects(&m.branch[v]);
            match (h.has_edge(u, v), touching) {
                (true, false) => return Err(ModelViolation::MissingEdge { u, v }),
                (false, true) => return Err(ModelViolation::ExtraEdge { u, v }),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Flag form of [`check_model`].
pub fn is_model(g: &Graph, h: &Graph, m: &InducedMinorModel) -> bool {
    check_model(g, h, m).is_ok()
}

/// Exhaustive induced-minor search, pruned by partial adjacency consistency
/// and the small-model bound `ω(G[∪ branch]) <= |V(H)|²` (which loses no
/// decisions: a model exists iff a small one does). Pattern vertices are
/// processed by descending degree; branch sets grow from ascending seeds, so
/// the first model found is canonical.
pub fn find_induced_minor(g: &Graph, h: &Graph) -> Result<Option<InducedMinorModel>, Error> {
    search_model(g, h, true)
}

/// Unrestricted exhaustive search used as the independent oracle: natural
/// pattern order, no clique-number pruning.
pub fn find_induced_minor_exhaustive(g: &Graph, h: &Graph) -> Result<Option<InducedMinorModel>, Error> {
    search_model(g, h, false)
}

fn search_model(g: &Graph, h: &Graph, pruned: bool) -> Result<Option<InducedMinorModel>, Error> {
    if g.n() > HOST_CAP {
        return Err(Error::SizeCap {
            operation: "find_induced_minor",
            size: g.n(),
            cap: HOST_CAP,
        });
    }
    if h.n() > PATTERN_CAP {
        return Err(Error::SizeCap {
            operation: "find_induced_minor",
            size: h.n(),
            cap: PATTERN_CAP,
        });
    }
    if h.n() == 0 {
        return Ok(Some(InducedMinorModel { branch: Vec::new() }));
    }
    let order: Vec<usize> = if pruned {
        // descending degree, index ascending on ties
        let mut order: Vec<usize> = (0..h.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
        order
    } else {
        (0..h.n()).collect()
    };
    let omega_cap = if pruned { Some(h.n() * h.n()) } else { None };
    let mut search = ModelSearch {
        g,
        h,
        order: &order,
        omega_cap,
        assigned: Vec::new(),
    };
    if search.assign(&g.vertices()) {
        let mut branch = vec![VertexSet::new(); h.n()];
        for (i, set) in search.assigned.iter().enumerate() {
            branch[order[i]] = set.clone();
        }
        let model = InducedMinorModel { branch };
        debug_assert!(is_model(g, h, &model));
        Ok(Some(model))
    } else {
        Ok(None)
    }
}

struct ModelSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    omega_cap: Option<usize>,
    assigned: Vec<VertexSet>,
}

impl ModelSearch<'_> {
    fn assign(&mut self, avail: &VertexSet) -> bool {
        let idx = self.assigned.len();
        if idx == self.order.len() {
            return true;
        }
        if avail.len() < self.order.len() - idx {
            return false;
        }
        for seed in avail.iter() {
            // branch sets with minimum vertex = seed
            let allowed: VertexSet = avail.iter().filter(|&v| v >= seed).collect();
            let mut banned = VertexSet::new();
            if self.grow(VertexSet::singleton(seed), &allowed, &mut banned, avail) {
                return true;
            }
        }
        false
    }

    /// DFS over connected supersets of `set` within `allowed`; each superset
    /// is visited exactly once (extensions banned after being explored).
    fn grow(
        &mut self,
        set: VertexSet,
        allowed: &VertexSet,
        banned: &mut VertexSet,
        avail: &VertexSet,
    ) -> bool {
        let idx = self.assigned.len();
        let p = self.order[idx];

        // adjacency to an assigned branch set is monotone under growth:
        // a forbidden contact prunes the whole subtree
        for (i, other) in self.assigned.iter().enumerate() {
            let q = self.order[i];
            if !self.h.has_edge(p, q)
                && self.g.neighborhood(&set, false).intersects(other)
            {
                return false;
            }
        }
        if let Some(cap) = self.omega_cap {
            let union = self.assigned.iter().fold(set.clone(), |acc, b| acc.union(b));
            if clique_number(self.g, &union) > cap {
                return false;
            }
        }

        // try `set` as the finished branch set for pattern vertex p
        let complete = (0..idx).all(|i| {
            let q = self.order[i];
            !self.h.has_edge(p, q)
                || self.g.neighborhood(&set, false).intersects(&self.assigned[i])
        });
        if complete {
            let rest = avail.minus(&set);
            self.assigned.push(set.clone());
            if self.assign(&rest) {
                return true;
            }
            self.assigned.pop();
        }

        // extend
        let extensions = self
            .g
            .neighborhood(&set, false)
            .intersection(allowed)
            .minus(banned);
        let mut local_banned = Vec::new();
        for v in extensions.iter() {
            if self.grow(set.with(v), allowed, banned, avail) {
                return true;
            }
            banned.insert(v);
            local_banned.push(v);
        }
        for v in local_banned {
            banned.remove(v);
        }
        false
    }
}

/// Shrinks a model until it is small (`ω(G[∪ branch]) <= |V(H)|²`) by the
/// BFS-leaf deletion argument: inside an oversized branch set, root a BFS
/// tree in a maximum clique, protect one leaf per pattern neighbor, and
/// delete an unprotected leaf. Model validity is asserted after every step.
pub fn minimize_model(
    g: &Graph,
    h: &Graph,
    m: &InducedMinorModel,
) -> Result<InducedMinorModel, Error> {
    check_model(g, h, m).map_err(|v| Error::Precondition(format!("invalid model: {v}")))?;
    let cap = h.n() * h.n();
    let mut model = m.clone();
    loop {
        if clique_number(g, &model.union()) <= cap {
            return Ok(model);
        }
        // some branch set has a clique larger than |V(H)|
        let v = (0..h.n())
            .find(|&v| clique_number(g, &model.branch[v]) > h.n())
            .ok_or_else(|| {
                Error::Invariant("oversized union without an oversized branch set".into())
            })?;
        let (_, max_clique) = clique_with_witness(g, &model.branch[v]);
        let root = max_clique.min().unwrap();

        // BFS tree of G[X_v] rooted inside the clique
        let branch = &model.branch[v];
        let mut parent: Vec<Option<usize>> = vec![None; g.n()];
        let mut seen = VertexSet::singleton(root);
        let mut layer = vec![root];
        let mut order = vec![root];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &u in &layer {
                for w in g.adj(u).intersection(branch).iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        parent[w] = Some(u);
                        next.push(w);
                        order.push(w);
                    }
                }
            }
            layer = next;
        }
        let mut has_child = VertexSet::new();
        for &w in &order {
            if let Some(p) = parent[w] {
                has_child.insert(p);
            }
        }
        let leaves: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&w| !has_child.contains(w))
            .collect();

        // protect one leaf per pattern neighbor: a leaf whose root path
        // touches that neighbor's branch set
        let mut protected = VertexSet::new();
        for u in h.adj(v).iter() {
            let contact_zone = g.neighborhood(&model.branch[u], false);
            let guard = leaves.iter().copied().find(|&leaf| {
                let mut cur = Some(leaf);
                while let Some(w) = cur {
                    if contact_zone.contains(w) {
                        return true;
                    }
                    cur = parent[w];
                }
                false
            });
            match guard {
                Some(leaf) => protected.insert(leaf),
                None => {
                    return Err(Error::Invariant(format!(
                        "pattern edge ({u}, {v}) lost its contact during minimization"
                    )))
                }
            }
        }
        let doomed = leaves
            .iter()
            .copied()
            .filter(|&l| !protected.contains(l))
            .min()
            .ok_or_else(|| Error::Invariant("no unprotected BFS leaf to delete".into()))?;
        model.branch[v].remove(doomed);
        check_model(g, h, &model)
            .map_err(|viol| Error::Invariant(format!("shrink step broke the model: {viol}")))?;
    }
}

/// Builds a `W_{|N(K)|}` model from an induced cycle and a component `K` of
/// `G - C` with `|N(K)| >= 3`: hub branch `K`, rim branches the arcs of `C`
/// from one attachment up to (excluding) the next, starting at the smallest
/// attachment.
pub fn wheel_from_cycle(
    g: &Graph,
    cycle: &[usize],
    k_comp: &VertexSet,
) -> Result<InducedMinorModel, Error> {
    let cycle_set: VertexSet = cycle.iter().copied().collect();
    if !is_induced_cycle(g, cycle) {
        return Err(Error::Precondition(format!("{cycle:?} is not an induced cycle")));
    }
    if k_comp.is_empty() || k_comp.intersects(&cycle_set) || !g.is_connected_set(k_comp) {
        return Err(Error::Precondition("K must be a nonempty connected set disjoint from C".into()));
    }
    let attachments = g.neighborhood(k_comp, false);
    if !attachments.minus(&cycle_set).is_empty() {
        return Err(Error::Precondition("K is not a component of G - C: it has neighbors outside C".into()));
    }
    let ell = attachments.len();
    if ell < 3 {
        return Err(Error::Precondition(format!("|N(K)| = {ell} < 3")));
    }

    let oriented = orient_cycle(cycle, attachments.min().unwrap());
    let positions: Vec<usize> = (0..oriented.len())
        .filter(|&i| attachments.contains(oriented[i]))
        .collect();
    let mut branch = Vec::with_capacity(ell + 1);
    for (j, &start) in positions.iter().enumerate() {
        let end = if j + 1 < positions.len() {
            positions[j + 1]
        } else {
            oriented.len()
        };
        branch.push(oriented[start..end].iter().copied().collect());
    }
    branch.push(k_comp.clone());
    let model = InducedMinorModel { branch };
    check_model(g, &wheel_graph(ell), &model)
        .map_err(|v| Error::Invariant(format!("arc construction broke: {v}")))?;
    Ok(model)
}

/// Rotates/reflects the cycle so it starts at `start` and continues toward
/// the smaller of that vertex's two cycle neighbors.
fn orient_cycle(cycle: &[usize], start: usize) -> Vec<usize> {
    let m = cycle.len();
    let pos = cycle.iter().position(|&v| v == start).unwrap();
    let forward = cycle[(pos + 1) % m];
    let backward = cycle[(pos + m - 1) % m];
    let mut out = Vec::with_capacity(m);
    if forward <= backward {
        for i in 0..m {
            out.push(cycle[(pos + i) % m]);
        }
    } else {
        for i in 0..m {
            out.push(cycle[(pos + m - i) % m]);
        }
    }
    out
}

pub(crate) fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 3 {
        return false;
    }
    let distinct: VertexSet = cycle.iter().copied().collect();
    if distinct.len() != m {
        return false;
    }
    cycle.iter().enumerate().all(|(i, &u)| {
        (i + 1..m).all(|j| {
            let adjacent_positions = j == i + 1 || (i == 0 && j == m - 1);
            g.has_edge(u, cycle[j]) == adjacent_positions
        })
    })
}

/// Merges a `W_m` model down to a `W_l` model (`3 <= l <= m`) by unioning the
/// trailing rim arcs into one branch.
fn merge_wheel_model(g: &Graph, model: &InducedMinorModel, l: usize) -> Result<InducedMinorModel, Error> {
    let m = model.branch.len() - 1;
    if l > m {
        return Err(Error::Invariant(format!("cannot grow a W_{m} model to W_{l}")));
    }
    if l == m {
        return Ok(model.clone());
    }
    let mut branch: Vec<VertexSet> = model.branch[..l - 1].to_vec();
    let mut tail = VertexSet::new();
    for arc in &model.branch[l - 1..m] {
        tail = tail.union(arc);
    }
    branch.push(tail);
    branch.push(model.branch[m].clone());
    let merged = InducedMinorModel { branch };
    check_model(g, &wheel_graph(l), &merged)
        .map_err(|v| Error::Invariant(format!("arc merge broke: {v}")))?;
    Ok(merged)
}

/// The decomposition half of the cycle-vicinity dichotomy.
#[derive(Clone, Debug)]
pub struct VicinityDecomposition {
    pub td: TreeDecomposition,
    /// Interior nodes: bags with certified small independence number.
    pub f1: Vec<usize>,
    /// Leaf nodes in bijection with the components of `G - N[C]`.
    pub f2: Vec<usize>,
    /// The bijection: component of `G - N[C]` -> its leaf node.
    pub phi: Vec<(VertexSet, usize)>,
}

#[derive(Clone, Debug)]
pub enum VicinityOutcome {
    Model(InducedMinorModel),
    Decomposition(VicinityDecomposition),
}

/// Either extracts a `W_l` induced minor model around the cycle, or builds
/// the tree-decomposition whose interior is the (exact-treewidth) clique
/// tree of the cycle-contraction graph and whose leaves carry the closed
/// neighborhoods of the components of `G - N[C]`.
pub fn cycle_vicinity_decomposition(
    g: &Graph,
    cycle: &[usize],
    d: usize,
    l: usize,
) -> Result<VicinityOutcome, Error> {
    if g.n() > HOST_CAP {
        return Err(Error::SizeCap {
            operation: "cycle_vicinity_decomposition",
            size: g.n(),
            cap: HOST_CAP,
        });
    }
    if l < 3 {
        return Err(Error::Precondition(format!("wheel size l = {l} < 3")));
    }
    let (free, witness) = is_k1d_free(g, d);
    if !free {
        return Err(Error::Precondition(format!(
            "graph is not K_{{1,{d}}}-free: induced star {:?}",
            witness.unwrap()
        )));
    }
    if cycle.len() < l || !is_induced_cycle(g, cycle) {
        return Err(Error::Precondition(format!(
            "{cycle:?} is not an induced cycle of length >= {l}"
        )));
    }

    let cycle_set: VertexSet = cycle.iter().copied().collect();
    let outside = g.vertices().minus(&cycle_set);
    let comps = g.components(&outside);
    for k_comp in &comps {
        if g.neighborhood(k_comp, false).len() >= l {
            let model = wheel_from_cycle(g, cycle, k_comp)?;
            return Ok(VicinityOutcome::Model(merge_wheel_model(g, &model, l)?));
        }
    }

    // cycle-contraction graph G1: the cycle vertices plus one vertex per
    // component of G - C
    let cycle_verts = cycle_set.to_vec();
    let n1 = cycle_verts.len() + comps.len();
    let mut g1 = Graph::empty(n1);
    let index_of = |v: usize| cycle_verts.binary_search(&v).unwrap();
    for (i, &u) in cycle_verts.iter().enumerate() {
        for v in g.adj(u).intersection(&cycle_set).iter() {
            if v > u {
                g1.add_edge(i, index_of(v));
            }
        }
    }
    for (ci, k_comp) in comps.iter().enumerate() {
        for v in g.neighborhood(k_comp, false).iter() {
            g1.add_edge(cycle_verts.len() + ci, index_of(v));
        }
    }
    // contracted components have degree <= l-1 (wheel branch excluded them)
    // and star-freeness keeps cycle vertices at degree <= d+2
    debug_assert!((0..g1.n()).all(|v| g1.degree(v) <= (l - 1).max(d + 2)));

    let (_, interior_td) = treewidth_exact(&g1)?;

    // expand contracted vertices back to the component fringes N(C) ∩ K
    let closed_cycle = g.neighborhood(&cycle_set, true);
    let fringes: Vec<VertexSet> = comps
        .iter()
        .map(|k| k.intersection(&closed_cycle))
        .collect();
    let mut bags: Vec<VertexSet> = interior_td
        .bags
        .iter()
        .map(|bag| {
            let mut out = VertexSet::new();
            for i in bag.iter() {
                if i < cycle_verts.len() {
                    out.insert(cycle_verts[i]);
                } else {
                    out = out.union(&fringes[i - cycle_verts.len()]);
                }
            }
            out
        })
        .collect();
    let mut edges = interior_td.edges.clone();
    let f1: Vec<usize> = (0..bags.len()).collect();

    // one leaf per component of G - N[C], hung off a bag that saw its
    // enclosing contracted component
    let far = g.vertices().minus(&closed_cycle);
    let mut f2 = Vec::new();
    let mut phi = Vec::new();
    for j in g.components(&far) {
        let enclosing = comps
            .iter()
            .position(|k| j.is_subset(k))
            .ok_or_else(|| Error::Invariant("far component not inside any G - C component".into()))?;
        let anchor_id = cycle_verts.len() + enclosing;
        let anchor = (0..interior_td.bags.len())
            .find(|&t| interior_td.bags[t].contains(anchor_id))
            .ok_or_else(|| Error::Invariant("contracted vertex missing from decomposition".into()))?;
        let leaf = bags.len();
        bags.push(g.neighborhood(&j, true));
        edges.push((anchor, leaf));
        f2.push(leaf);
        phi.push((j, leaf));
    }

    let td = TreeDecomposition {
        bags,
        edges,
        root: None,
    };
    check_tree_decomposition(g, &td)
        .map_err(|v| Error::Invariant(format!("vicinity construction invalid: {v}")))?;
    Ok(VicinityOutcome::Decomposition(VicinityDecomposition { td, f1, f2, phi }))
}

/// Checks the five structural properties of a vicinity decomposition against
/// the graph and cycle it was built for, with the independence bounds taken
/// from `bounds.vicinity_bound()`.
pub fn verify_vicinity_properties(
    g: &Graph,
    cycle: &[usize],
    parts: &VicinityDecomposition,
    bounds: &Bounds,
) -> Result<(), Error> {
    use crate::alpha::independence_number;
    let limit = bounds.vicinity_bound();
    let td = &parts.td;
    check_tree_decomposition(g, td)
        .map_err(|v| Error::Invariant(format!("invalid decomposition: {v}")))?;

    // interior bags within the bound
    for &t in &parts.f1 {
        if BigUint::from(independence_number(g, &td.bags[t])) > limit {
            return Err(Error::Invariant(format!("interior bag {t} exceeds the vicinity bound")));
        }
    }
    // adhesions within the bound
    for &(a, b) in &td.edges {
        let adhesion = td.bags[a].intersection(&td.bags[b]);
        if BigUint::from(independence_number(g, &adhesion)) > limit {
            return Err(Error::Invariant(format!("adhesion ({a}, {b}) exceeds the vicinity bound")));
        }
    }
    // F2 nodes are leaves
    for &t in &parts.f2 {
        if td.neighbors(t).len() != 1 {
            return Err(Error::Invariant(format!("F2 node {t} is not a leaf")));
        }
    }
    // phi is a bijection onto F2 with bags N[J]
    let cycle_set: VertexSet = cycle.iter().copied().collect();
    let far = g.vertices().minus(&g.neighborhood(&cycle_set, true));
    let far_comps = g.components(&far);
    if parts.phi.len() != far_comps.len() || parts.phi.len() != parts.f2.len() {
        return Err(Error::Invariant("phi is not a bijection".into()));
    }
    for (j, t) in &parts.phi {
        if !far_comps.contains(j) {
            return Err(Error::Invariant("phi domain is not the far components".into()));
        }
        if td.bags[*t] != g.neighborhood(j, true) {
            return Err(Error::Invariant(format!("leaf {t} bag differs from N[J]")));
        }
        // adhesion of the leaf equals N(J)
        let parent = td.neighbors(*t)[0];
        if td.bags[*t].intersection(&td.bags[parent]) != g.neighborhood(j, false) {
            return Err(Error::Invariant(format!("leaf {t} adhesion differs from N(J)")));
        }
    }
    Ok(())
}

/// Outcome of [`detect_wheel`].
#[derive(Clone, Debug)]
pub enum WheelOutcome {
    Model(InducedMinorModel),
    Decomposition {
        alpha_tw: usize,
        td: TreeDecomposition,
        vicinity: Option<VicinityDecomposition>,
    },
}

/// Desk-scale wheel detection: exhaustive model search first; on absence, a
/// structural certificate consisting of the exact tree-independence number
/// and, when a long induced cycle exists, the vicinity decomposition.
pub fn detect_wheel(g: &Graph, d: usize, l: usize) -> Result<WheelOutcome, Error> {
    if l < 3 {
        return Err(Error::Precondition(format!("wheel size l = {l} < 3")));
    }
    let (free, witness) = is_k1d_free(g, d);
    if !free {
        return Err(Error::Precondition(format!(
            "graph is not K_{{1,{d}}}-free: induced star {:?}",
            witness.unwrap()
        )));
    }
    if let Some(model) = find_induced_minor(g, &wheel_graph(l))? {
        return Ok(WheelOutcome::Model(model));
    }
    let (alpha_tw, witness_td) = crate::decomposition::alpha_tw_exact(g)?;
    match find_long_induced_cycle(g, l) {
        Some(cycle) => match cycle_vicinity_decomposition(g, &cycle, d, l)? {
            VicinityOutcome::Model(_) => Err(Error::Invariant(
                "vicinity route found a model the exhaustive search missed".into(),
            )),
            VicinityOutcome::Decomposition(parts) => Ok(WheelOutcome::Decomposition {
                alpha_tw,
                td: parts.td.clone(),
                vicinity: Some(parts),
            }),
        },
        None => Ok(WheelOutcome::Decomposition {
            alpha_tw,
            td: witness_td,
            vicinity: None,
        }),
    }
}

/// First induced cycle of length at least `l` in (size, lex) subset order,
/// as a cyclic vertex sequence.
pub fn find_long_induced_cycle(g: &Graph, l: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n > 30 {
        return None;
    }
    let verts: Vec<usize> = (0..n).collect();
    for size in l.max(3)..=n {
        let mut found: Option<VertexSet> = None;
        for_combinations(&verts, size, &mut |set| {
            if found.is_none() && is_cycle_set(g, set) {
                found = Some(set.clone());
            }
        });
        if let Some(set) = found {
            return Some(walk_cycle(g, &set));
        }
    }
    None
}

fn for_combinations(verts: &[usize], size: usize, f: &mut impl FnMut(&VertexSet)) {
    fn rec(verts: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&VertexSet)) {
        if cur.len() == size {
            f(&cur.iter().copied().collect());
            return;
        }
        for i in start..verts.len() {
            cur.push(verts[i]);
            rec(verts, size, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(verts, size, 0, &mut Vec::new(), f);
}

fn is_cycle_set(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|v| g.adj(v).intersection(set).len() == 2) && g.is_connected_set(set)
}

fn walk_cycle(g: &Graph, set: &VertexSet) -> Vec<usize> {
    let start = set.min().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = g.adj(start).intersection(set).min().unwrap();
    while cur != start {
        cycle.push(cur);
        let next = g
            .adj(cur)
            .intersection(set)
            .iter()
            .find(|&v| v != prev)
            .unwrap();
        prev = cur;
        cur = next;
    }
    cycle
}
