//! Reference oracle: a cardinality-ascending scan over all subsets, filtered
//! by direct feasibility and minimality/maximality predicates.
//!
//! The predicates below work straight off the graph adjacency (or set
//! membership) and deliberately share nothing with the transversal engine,
//! so the two enumeration routes stay independent. The scan visits subsets
//! grouped by cardinality, lexicographically within each group, which is
//! exactly the family's canonical order.

use std::ops::ControlFlow;

use itertools::Itertools;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

pub fn is_independent_set(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .tuple_combinations()
        .all(|(&u, &v)| !g.has_edge(u, v))
}

pub fn is_maximal_independent_set(g: &Graph, s: &[usize]) -> bool {
    if !is_independent_set(g, s) {
        return false;
    }
    g.vertices()
        .filter(|v| !s.contains(v))
        .all(|v| s.iter().any(|&u| g.has_edge(u, v)))
}

pub fn is_vertex_cover(g: &Graph, s: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| s.contains(&u) || s.contains(&v))
}

pub fn is_dominating_set(g: &Graph, s: &[usize]) -> bool {
    g.vertices()
        .all(|v| s.contains(&v) || s.iter().any(|&u| g.has_edge(u, v)))
}

pub fn is_total_dominating_set(g: &Graph, s: &[usize]) -> bool {
    g.vertices().all(|v| s.iter().any(|&u| g.has_edge(u, v)))
}

pub fn is_hitting_set(h: &Hypergraph, s: &[usize]) -> bool {
    (0..h.set_count()).all(|j| s.iter().any(|&e| h.contains_element(j, e)))
}

/// `s` holds set indices; a cover must touch every universe element.
pub fn is_set_cover(h: &Hypergraph, s: &[usize]) -> bool {
    (0..h.universe_size()).all(|e| s.iter().any(|&j| h.contains_element(j, e)))
}

fn is_minimal<P>(s: &[usize], feasible: P) -> bool
where
    P: Fn(&[usize]) -> bool,
{
    let mut reduced = Vec::with_capacity(s.len().saturating_sub(1));
    (0..s.len()).all(|drop| {
        reduced.clear();
        reduced.extend(s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v));
        !feasible(&reduced)
    })
}

pub fn is_minimal_vertex_cover(g: &Graph, s: &[usize]) -> bool {
    is_vertex_cover(g, s) && is_minimal(s, |t| is_vertex_cover(g, t))
}

pub fn is_minimal_dominating_set(g: &Graph, s: &[usize]) -> bool {
    is_dominating_set(g, s) && is_minimal(s, |t| is_dominating_set(g, t))
}

pub fn is_minimal_total_dominating_set(g: &Graph, s: &[usize]) -> bool {
    is_total_dominating_set(g, s) && is_minimal(s, |t| is_total_dominating_set(g, t))
}

pub fn is_minimal_hitting_set(h: &Hypergraph, s: &[usize]) -> bool {
    is_hitting_set(h, s) && is_minimal(s, |t| is_hitting_set(h, t))
}

pub fn is_minimal_set_cover(h: &Hypergraph, s: &[usize]) -> bool {
    is_set_cover(h, s) && is_minimal(s, |t| is_set_cover(h, t))
}

/// Scans all subsets of `0..ground` in (cardinality, lexicographic) order,
/// visiting those where `keep` holds. Returns `false` on visitor abort.
fn scan<K, F>(ground: usize, keep: K, mut visit: F) -> bool
where
    K: Fn(&[usize]) -> bool,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    for k in 0..=ground {
        for subset in (0..ground).combinations(k) {
            if keep(&subset) {
                if let ControlFlow::Break(()) = visit(&subset) {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn stream_maximal_independent_sets<F>(g: &Graph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    scan(g.n(), |s| is_maximal_independent_set(g, s), visit)
}

pub(crate) fn stream_minimal_vertex_covers<F>(g: &Graph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    scan(g.n(), |s| is_minimal_vertex_cover(g, s), visit)
}

pub(crate) fn stream_minimal_dominating_sets<F>(g: &Graph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    scan(g.n(), |s| is_minimal_dominating_set(g, s), visit)
}

pub(crate) fn stream_minimal_total_dominating_sets<F>(g: &Graph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    scan(g.n(), |s| is_minimal_total_dominating_set(g, s), visit)
}

pub(crate) fn stream_minimal_hitting_sets<F>(h: &Hypergraph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    scan(h.universe_size(), |s| is_minimal_hitting_set(h, s), visit)
}

pub(crate) fn stream_minimal_set_covers<F>(h: &Hypergraph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    scan(h.set_count(), |s| is_minimal_set_cover(h, s), visit)
}
