//! Domination-chain parameters and the polynomial recognizers for the
//! special classes where wellness is structurally characterized.

use crate::enumerate::Enumerator;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The four domination-chain parameters computed from the enumerated
/// families: γ ≤ ι ≤ α and γ ≤ Γ always hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainParameters {
    /// γ: minimum dominating set size.
    pub lower_domination: usize,
    /// Γ: maximum size over minimal dominating sets.
    pub upper_domination: usize,
    /// ι: minimum maximal-independent-set size (independent domination).
    pub independent_domination: usize,
    /// α: maximum independent set size.
    pub independence: usize,
}

impl ChainParameters {
    /// The `gamma Gamma iota alpha` one-liner.
    pub fn record_line(&self) -> String {
        format!(
            "{} {} {} {}",
            self.lower_domination,
            self.upper_domination,
            self.independent_domination,
            self.independence
        )
    }
}

pub fn chain_parameters(g: &Graph, enumerator: &Enumerator) -> Result<ChainParameters> {
    let dominating = enumerator.minimal_dominating_sets(g)?;
    let independent = enumerator.maximal_independent_sets(g)?;
    let ds_sizes = dominating.size_values();
    let mis_sizes = independent.size_values();
    Ok(ChainParameters {
        lower_domination: *ds_sizes.iter().next().expect("family is non-empty"),
        upper_domination: *ds_sizes.iter().next_back().expect("family is non-empty"),
        independent_domination: *mis_sizes.iter().next().expect("family is non-empty"),
        independence: *mis_sizes.iter().next_back().expect("family is non-empty"),
    })
}

/// Attaches one new pendant vertex to every vertex of `h`: vertex `v` of the
/// base gets the leaf `h.n() + v`.
pub fn corona_with_k1(h: &Graph) -> Graph {
    let n = h.n();
    let mut g = Graph::new(2 * n);
    for (u, v) in h.edges() {
        g.add_edge(u, v).expect("base edges stay valid");
    }
    for v in 0..n {
        g.add_edge(v, n + v).expect("pendant edges are valid");
    }
    g
}

/// Recovers the base graph when `g` is a corona of some graph with a single
/// pendant per vertex: exactly half the vertices are leaves, every non-leaf
/// has exactly one leaf neighbor, and the non-leaves induce a connected
/// graph. K2 counts as the corona of K1. Base vertices are renumbered in
/// ascending order of their original ids.
pub fn is_corona_with_k1(g: &Graph) -> Option<Graph> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    if n == 2 {
        return if g.has_edge(0, 1) { Some(Graph::new(1)) } else { None };
    }
    if n % 2 != 0 {
        return None;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() != n / 2 {
        return None;
    }
    let supports: Vec<usize> = (0..n).filter(|&v| g.degree(v) != 1).collect();
    for &v in &supports {
        let leaf_neighbors = g.neighbors(v).filter(|&w| g.degree(w) == 1).count();
        if leaf_neighbors != 1 {
            return None;
        }
    }
    for &leaf in &leaves {
        let support = g.neighbors(leaf).next().expect("leaves have one neighbor");
        if g.degree(support) == 1 {
            return None;
        }
    }
    let rank: std::collections::HashMap<usize, usize> = supports
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut base = Graph::new(supports.len());
    for &v in &supports {
        for w in g.neighbors(v) {
            if let Some(&j) = rank.get(&w) {
                if rank[&v] < j {
                    base.add_edge(rank[&v], j).expect("base edges are valid");
                }
            }
        }
    }
    if !base.is_connected().unwrap_or(false) {
        return None;
    }
    Some(base)
}

fn is_c4(g: &Graph) -> bool {
    g.n() == 4
        && g.vertices().all(|v| g.degree(v) == 2)
        && g.is_connected().unwrap_or(false)
}

/// Polynomial recognizer for connected bipartite graphs: well-dominated iff
/// the graph is a single vertex, a 4-cycle, or the corona of a connected
/// graph. No enumeration is involved. The single-vertex case is accepted
/// (vacuously well-dominated) even though the structural characterization
/// is usually stated for larger graphs.
pub fn recognize_bipartite_well_dominated(g: &Graph) -> Result<bool> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    Ok(g.n() == 1 || is_c4(g) || is_corona_with_k1(g).is_some())
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    match g.isolated_vertices().first() {
        Some(&v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Well-covered with common size exactly n/2; needs no isolated vertices.
pub fn is_very_well_covered(g: &Graph, enumerator: &Enumerator) -> Result<bool> {
    require_no_isolated(g)?;
    let report = crate::wellness::check_well_covered(g, enumerator)?;
    Ok(g.n() % 2 == 0 && report.is_well() && report.common_size == Some(g.n() / 2))
}

/// Well-dominated with common size exactly n/2; needs no isolated vertices.
pub fn is_very_well_dominated(g: &Graph, enumerator: &Enumerator) -> Result<bool> {
    require_no_isolated(g)?;
    let report = crate::wellness::check_well_dominated(g, enumerator)?;
    Ok(g.n() % 2 == 0 && report.is_well() && report.common_size == Some(g.n() / 2))
}
