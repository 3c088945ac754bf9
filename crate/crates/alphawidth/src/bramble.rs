//! Strong brambles, their α-order, and the duality with tree-independence
//! number: a (2k-2)-α-linked set yields a strong bramble of α-order at least
//! k out of the heavy components of all small-independence separators.

use crate::alpha::independence_number;
use crate::error::Error;
use crate::graph::Graph;
use crate::separators::{find_k_alpha_linked, heavy_component};
use crate::set::VertexSet;
use serde_json::{json, Value};

const BRAMBLE_CAP: usize = 16;

/// A collection of connected vertex sets, every pair of which intersects.
/// Elements are kept sorted by (smallest vertex, mask) so certificates are
/// canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongBramble {
    elements: Vec<VertexSet>,
}

/// Why a candidate family fails to be a strong bramble.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrambleViolation {
    EmptyElement { index: usize },
    DisconnectedElement { index: usize },
    DisjointPair { first: usize, second: usize },
}

impl std::fmt::Display for BrambleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BrambleViolation::EmptyElement { index } => write!(f, "element {index} is empty"),
            BrambleViolation::DisconnectedElement { index } => {
                write!(f, "element {index} is not connected")
            }
            BrambleViolation::DisjointPair { first, second } => {
                write!(f, "elements {first} and {second} do not intersect")
            }
        }
    }
}

impl StrongBramble {
    /// Builds a bramble from arbitrary element sets, deduplicating and
    /// sorting canonically. Validity is not checked here.
    pub fn new(elements: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut elements: Vec<VertexSet> = elements.into_iter().collect();
        elements.sort_by_key(|e| e.canonical_key());
        elements.dedup();
        StrongBramble { elements }
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Certificate JSON: `{elements:[[v,...],...], cover:[v,...], alpha_order:n}`.
    pub fn to_json(&self, cover: &VertexSet, alpha_order: usize) -> Value {
        let elements: Vec<Value> = self.elements.iter().map(|e| json!(e.to_vec())).collect();
        json!({
            "elements": elements,
            "cover": cover.to_vec(),
            "alpha_order": alpha_order,
        })
    }

    /// Reads the elements of a certificate (cover and order fields optional).
    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let elements = v
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput("missing `elements` array".into()))?;
        let mut out = Vec::new();
        for e in elements {
            let verts = e
                .as_array()
                .ok_or_else(|| Error::InvalidInput("element must be an array".into()))?;
            let mut set = VertexSet::new();
            for x in verts {
                let v = x
                    .as_u64()
                    .ok_or_else(|| Error::InvalidInput("bad element vertex".into()))?;
                set.insert(v as usize);
            }
            out.push(set);
        }
        Ok(StrongBramble::new(out))
    }
}

/// Checks the strong-bramble conditions, naming the offending element or
/// pair on failure.
pub fn check_strong_bramble(g: &Graph, b: &StrongBramble) -> Result<(), BrambleViolation> {
    for (i, e) in b.elements.iter().enumerate() {
        if e.is_empty() {
            return Err(BrambleViolation::EmptyElement { index: i });
        }
        if !g.is_connected_set(e) {
            return Err(BrambleViolation::DisconnectedElement { index: i });
        }
    }
    for i in 0..b.elements.len() {
        for j in i + 1..b.elements.len() {
            if !b.elements[i].intersects(&b.elements[j]) {
                return Err(BrambleViolation::DisjointPair { first: i, second: j });
            }
        }
    }
    Ok(())
}

/// Flag form of [`check_strong_bramble`].
pub fn is_strong_bramble(g: &Graph, b: &StrongBramble) -> bool {
    check_strong_bramble(g, b).is_ok()
}

/// Exact α-order of a bramble: the minimum `α(X)` over covers `X` (sets
/// meeting every element), with a witness cover. Only inclusion-minimal
/// covers are enumerated; by monotonicity of α the minimum is attained on
/// one of them.
pub fn alpha_order_exact(g: &Graph, b: &StrongBramble) -> Result<(usize, VertexSet), Error> {
    if g.n() > BRAMBLE_CAP {
        return Err(Error::SizeCap {
            operation: "alpha_order_exact",
            size: g.n(),
            cap: BRAMBLE_CAP,
        });
    }
    if b.is_empty() {
        return Ok((0, VertexSet::new()));
    }
    let mut best: Option<(usize, VertexSet)> = None;
    let mut current = VertexSet::new();
    hitting_sets(g, &b.elements, &mut current, &mut best);
    best.ok_or_else(|| Error::Invariant("no cover found for nonempty bramble".into()))
}

/// Branch-and-bound enumeration of minimal hitting sets: pick the first unhit
/// element, branch on its vertices ascending. Sets that are not inclusion-
/// minimal or cannot beat the incumbent α are pruned.
fn hitting_sets(
    g: &Graph,
    elements: &[VertexSet],
    current: &mut VertexSet,
    best: &mut Option<(usize, VertexSet)>,
) {
    if let Some((b, _)) = best {
        if independence_number(g, current) >= *b {
            return;
        }
    }
    let unhit = elements.iter().find(|e| !e.intersects(current));
    match unhit {
        None => {
            // minimality: every chosen vertex must privately hit something
            let minimal = current.iter().all(|v| {
                elements
                    .iter()
                    .any(|e| e.contains(v) && e.intersection(current).len() == 1)
            });
            if minimal {
                let a = independence_number(g, current);
                if best.as_ref().is_none_or(|(b, _)| a < *b) {
                    *best = Some((a, current.clone()));
                }
            }
        }
        Some(e) => {
            for v in e.iter() {
                current.insert(v);
                hitting_sets(g, elements, current, best);
                current.remove(v);
            }
        }
    }
}

/// Builds the strong bramble of heavy components from a
/// (2k-2)-α-linked set `x`: the elements are `V(C_S)` over all `S` with
/// `α(S) <= k-1`, deduplicated. If some such `S` lacks a heavy component,
/// the caller's `x` was not linked and a precondition error is returned.
pub fn bramble_from_linked_set(g: &Graph, x: &VertexSet, k: usize) -> Result<StrongBramble, Error> {
    if g.n() > BRAMBLE_CAP {
        return Err(Error::SizeCap {
            operation: "bramble_from_linked_set",
            size: g.n(),
            cap: BRAMBLE_CAP,
        });
    }
    if k == 0 {
        return Err(Error::Precondition("bramble order k must be at least 1".into()));
    }
    let n = g.n();
    let mut elements = Vec::new();
    for mask in 0u32..1u32 << n {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if independence_number(g, &s) > k - 1 {
            continue;
        }
        match heavy_component(g, x, &s)? {
            Some(c) => elements.push(c),
            None => {
                return Err(Error::Precondition(format!(
                    "{x:?} is not (2k-2)-α-linked: separator {s:?} has no heavy component"
                )))
            }
        }
    }
    Ok(StrongBramble::new(elements))
}

/// Finds a strong bramble of α-order at least `k` when one is forced: looks
/// for a (2k-2)-α-linked set and converts it. Returns `None` exactly when no
/// (2k-2)-α-linked set exists, which certifies `α-tw(G) <= 4k-3`.
pub fn strong_bramble_of_order(g: &Graph, k: usize) -> Result<Option<StrongBramble>, Error> {
    if k == 0 {
        return Err(Error::Precondition("bramble order k must be at least 1".into()));
    }
    match find_k_alpha_linked(g, 2 * k - 2)? {
        None => Ok(None),
        Some(x) => Ok(Some(bramble_from_linked_set(g, &x, k)?)),
    }
}
