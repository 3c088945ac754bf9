//! The named property suites: each evaluates one library invariant on every
//! graph of a stream.

use crate::report::{GraphOutcome, Outcome};
use alphawidth::bramble::check_strong_bramble;
use alphawidth::domination::{dominating_cycle_or_vertex, dominating_path, DominationOutcome};
use alphawidth::minor::{find_long_induced_cycle, verify_vicinity_properties};
use alphawidth::separators::{balanced_separator, Bounds, RefineOutcome};
use alphawidth::treedepth::path_alpha_td_formula;
use alphawidth::*;

#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub k: usize,
    pub d: usize,
    pub l: usize,
}

pub const SUITE_NAMES: &[&str] = &[
    "duality",
    "treedepth-formula",
    "td-vs-tw",
    "chordal-char",
    "quasi-threshold-char",
    "refine",
    "small-model",
    "wheel-dichotomy",
    "domination",
];

pub fn run_one(
    name: &str,
    index: usize,
    graph6: &str,
    g: &Graph,
    params: &SuiteParams,
) -> GraphOutcome {
    let result = match name {
        "duality" => duality(g, params.k),
        "treedepth-formula" => treedepth_formula(g),
        "td-vs-tw" => td_vs_tw(g),
        "chordal-char" => chordal_char(g),
        "quasi-threshold-char" => quasi_threshold_char(g),
        "refine" => refine(g, params.k),
        "small-model" => small_model(g),
        "wheel-dichotomy" => wheel_dichotomy(g, params.d, params.l),
        "domination" => domination(g, params.k),
        other => Err(format!("unknown suite `{other}`")),
    };
    let (outcome, detail) = match result {
        Ok(Some(detail)) => (Outcome::Pass, detail),
        Ok(None) => (Outcome::Skip, String::from("not applicable")),
        Err(detail) => (Outcome::Fail, detail),
    };
    GraphOutcome {
        index,
        graph6: graph6.to_string(),
        outcome,
        detail,
    }
}

type SuiteResult = Result<Option<String>, String>;

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn lib(e: Error) -> String {
    format!("library error: {e}")
}

/// Both directions of the bramble duality at parameter `k`.
fn duality(g: &Graph, k: usize) -> SuiteResult {
    if !g.is_connected() || g.n() == 0 {
        return Ok(None);
    }
    let (tw, _) = alpha_tw_exact(g).map_err(lib)?;
    match strong_bramble_of_order(g, k).map_err(lib)? {
        Some(b) => {
            if !is_strong_bramble(g, &b) {
                return fail("emitted bramble is not strong");
            }
            let (order, _) = alpha_order_exact(g, &b).map_err(lib)?;
            if order < k {
                return fail(format!("bramble α-order {order} below k = {k}"));
            }
            if tw < order {
                return fail(format!("α-tw {tw} below bramble α-order {order}"));
            }
            Ok(Some(format!("bramble of order {order}, α-tw {tw}")))
        }
        None => {
            if tw >= 4 * k - 2 {
                return fail(format!("α-tw {tw} >= 4k-2 but no bramble of order {k} found"));
            }
            Ok(Some(format!("no (2k-2)-linked set; α-tw {tw} <= 4k-3")))
        }
    }
}

fn is_path_graph(g: &Graph) -> bool {
    g.n() >= 1
        && g.is_connected()
        && g.edge_count() == g.n() - 1
        && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn treedepth_formula(g: &Graph) -> SuiteResult {
    if !is_path_graph(g) {
        return Ok(None);
    }
    let (td, _) = alpha_td_exact(g).map_err(lib)?;
    let expected = path_alpha_td_formula(g.n());
    if td != expected {
        return fail(format!("α-td of P_{} is {td}, formula says {expected}", g.n()));
    }
    Ok(Some(format!("α-td(P_{}) = {td}", g.n())))
}

fn td_vs_tw(g: &Graph) -> SuiteResult {
    let (tw, _) = alpha_tw_exact(g).map_err(lib)?;
    let (td, _) = alpha_td_exact(g).map_err(lib)?;
    if tw > td {
        return fail(format!("α-tw {tw} exceeds α-td {td}"));
    }
    Ok(Some(format!("α-tw {tw} <= α-td {td}")))
}

fn chordal_char(g: &Graph) -> SuiteResult {
    let (tw, _) = alpha_tw_exact(g).map_err(lib)?;
    let chordal = is_chordal(g);
    if (tw <= 1) != chordal {
        return fail(format!("α-tw = {tw} but is_chordal = {chordal}"));
    }
    Ok(Some(format!("α-tw {tw}, chordal {chordal}")))
}

fn quasi_threshold_char(g: &Graph) -> SuiteResult {
    let (td, _) = alpha_td_exact(g).map_err(lib)?;
    let qt = is_quasi_threshold(g);
    if (td <= 1) != qt {
        return fail(format!("α-td = {td} but is_quasi_threshold = {qt}"));
    }
    Ok(Some(format!("α-td {td}, quasi-threshold {qt}")))
}

fn refine(g: &Graph, k: usize) -> SuiteResult {
    match refine_decomposition(g, k).map_err(lib)? {
        RefineOutcome::Decomposition(td) => {
            check_tree_decomposition(g, &td)
                .map_err(|v| format!("refinement produced an invalid decomposition: {v}"))?;
            let width = alpha_width(g, &td).map_err(lib)?;
            if width > 2 * k + 1 {
                return fail(format!("refined α-width {width} exceeds 2k+1 = {}", 2 * k + 1));
            }
            Ok(Some(format!("decomposition of α-width {width}")))
        }
        RefineOutcome::LinkedSet(x) => {
            if balanced_separator(g, &x, k).map_err(lib)?.is_some() {
                return fail(format!("claimed linked set {x:?} has a balanced separator"));
            }
            Ok(Some(format!("{k}-α-linked set of size {}", x.len())))
        }
    }
}

fn small_model(g: &Graph) -> SuiteResult {
    let patterns: [(&str, Graph); 4] = [
        ("K3", Graph::complete(3)),
        ("P4", Graph::path(4)),
        ("K4", Graph::complete(4)),
        ("C4", Graph::cycle(4)),
    ];
    let mut summary = Vec::new();
    for (name, h) in &patterns {
        let restricted = find_induced_minor(g, h).map_err(lib)?;
        let unrestricted = find_induced_minor_exhaustive(g, h).map_err(lib)?;
        if restricted.is_some() != unrestricted.is_some() {
            return fail(format!(
                "{name}: ω-bounded search says {}, exhaustive says {}",
                restricted.is_some(),
                unrestricted.is_some()
            ));
        }
        if let Some(m) = &restricted {
            if !is_model(g, h, m) {
                return fail(format!("{name}: returned model is invalid"));
            }
        }
        summary.push(format!("{name}:{}", restricted.is_some()));
    }
    Ok(Some(summary.join(" ")))
}

fn wheel_dichotomy(g: &Graph, d: usize, l: usize) -> SuiteResult {
    if !g.is_connected() || !is_k1d_free(g, d).0 {
        return Ok(None);
    }
    let wheel = wheel_graph(l);
    let oracle = find_induced_minor_exhaustive(g, &wheel).map_err(lib)?;
    match detect_wheel(g, d, l).map_err(lib)? {
        WheelOutcome::Model(m) => {
            if oracle.is_none() {
                return fail("pipeline found a model the oracle says is absent");
            }
            if !is_model(g, &wheel, &m) {
                return fail("emitted model is invalid");
            }
            Ok(Some(format!("W{l} model present")))
        }
        WheelOutcome::Decomposition { alpha_tw, td, vicinity } => {
            if oracle.is_some() {
                return fail("pipeline certified absence but the oracle found a model");
            }
            check_tree_decomposition(g, &td)
                .map_err(|v| format!("certificate decomposition invalid: {v}"))?;
            if let Some(parts) = vicinity {
                let cycle = find_long_induced_cycle(g, l)
                    .ok_or_else(|| "vicinity certificate without a long cycle".to_string())?;
                verify_vicinity_properties(g, &cycle, &parts, &Bounds::new(d as u64, l as u64, 1))
                    .map_err(|e| format!("vicinity properties violated: {e}"))?;
            }
            Ok(Some(format!("no W{l} minor; α-tw {alpha_tw}")))
        }
    }
}

fn domination(g: &Graph, k: usize) -> SuiteResult {
    if !g.is_connected() || g.n() == 0 {
        return Ok(None);
    }
    let Some(b) = strong_bramble_of_order(g, k).map_err(lib)? else {
        return Ok(None);
    };
    check_strong_bramble(g, &b).map_err(|v| format!("bramble invalid: {v}"))?;
    let path = dominating_path(g, &b).map_err(lib)?;
    let path_set: VertexSet = path.iter().copied().collect();
    if !induced_path_ok(g, &path) {
        return fail(format!("dominating path {path:?} is not induced"));
    }
    let reach = g.neighborhood(&path_set, true);
    if !b.elements().iter().all(|e| reach.intersects(e)) {
        return fail(format!("path {path:?} does not dominate the bramble"));
    }
    match dominating_cycle_or_vertex(g, &b).map_err(lib)? {
        DominationOutcome::Vertex(v) => {
            let reach = g.neighborhood(&VertexSet::singleton(v), true);
            if !b.elements().iter().all(|e| reach.intersects(e)) {
                return fail(format!("vertex {v} does not dominate the bramble"));
            }
            Ok(Some(format!("dominating vertex {v}")))
        }
        DominationOutcome::Cycle(c) => {
            if !induced_cycle_ok(g, &c) {
                return fail(format!("cycle {c:?} is not induced"));
            }
            let reach = g.neighborhood(&c.iter().copied().collect(), true);
            if !b.elements().iter().all(|e| reach.intersects(e)) {
                return fail(format!("cycle {c:?} does not dominate the bramble"));
            }
            Ok(Some(format!("dominating cycle of length {}", c.len())))
        }
    }
}

pub fn induced_path_ok(g: &Graph, path: &[usize]) -> bool {
    path.iter().enumerate().all(|(i, &u)| {
        path[i + 1..]
            .iter()
            .enumerate()
            .all(|(off, &v)| g.has_edge(u, v) == (off == 0))
    })
}

pub fn induced_cycle_ok(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    m >= 3
        && cycle.iter().enumerate().all(|(i, &u)| {
            (i + 1..m).all(|j| {
                let neighbors = j == i + 1 || (i == 0 && j == m - 1);
                g.has_edge(u, cycle[j]) == neighbors
            })
        })
}
