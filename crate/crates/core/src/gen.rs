//! Seed-deterministic random instance generation. Every generator derives
//! its randomness from a (seed, trial) pair through independent ChaCha
//! streams, so trial i is the same no matter how trials are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::reductions;

/// The RNG for one trial of one seeded experiment.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn element_name(i: usize) -> String {
    // single letters at desk scale, e<i> beyond
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("e{i}")
    }
}

/// A hypergraph with the exact given dimensions whose sets are non-empty
/// uniform subsets of the universe.
pub fn random_hypergraph_with(rng: &mut ChaCha8Rng, elements: usize, sets: usize) -> Hypergraph {
    assert!(elements >= 1);
    let mut family = Vec::with_capacity(sets);
    for _ in 0..sets {
        let mut members: Vec<usize> = Vec::new();
        while members.is_empty() {
            members = (0..elements).filter(|_| rng.random_bool(0.5)).collect();
        }
        family.push(members);
    }
    let universe: Vec<String> = (0..elements).map(element_name).collect();
    Hypergraph::from_indexed(universe, family).expect("generated sets are valid")
}

/// A hypergraph with uniformly drawn dimensions (1..=max each) whose sets
/// are non-empty uniform subsets of the universe.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, max_universe: usize, max_sets: usize) -> Hypergraph {
    assert!(max_universe >= 1 && max_sets >= 1);
    let u = rng.random_range(1..=max_universe);
    let f = rng.random_range(1..=max_sets);
    random_hypergraph_with(rng, u, f)
}

/// Erdős–Rényi style graph: each pair becomes an edge with probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("generated edges are valid");
            }
        }
    }
    g
}

/// A graph with uniform order in 1..=max_n and uniform edge density.
pub fn random_graph_sized(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.1..0.9);
    random_graph(rng, n, p)
}

/// Like [`random_graph_sized`] but redraws until no vertex is isolated.
pub fn random_graph_no_isolated(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let g = random_graph_sized(rng, max_n);
        if g.n() >= 2 && g.isolated_vertices().is_empty() {
            return g;
        }
    }
}

/// A connected bipartite graph on at most `max_n` vertices: random sides,
/// random cross edges, redrawn until connected.
pub fn random_connected_bipartite(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.random_range(1..=max_n);
        if n == 1 {
            return Graph::new(1);
        }
        let a = rng.random_range(1..n);
        let p = rng.random_range(0.2..0.95);
        let mut g = Graph::new(n);
        for u in 0..a {
            for v in a..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v).expect("generated edges are valid");
                }
            }
        }
        if g.is_connected().unwrap_or(false) {
            return g;
        }
    }
}

/// Instances for the total-domination correspondence experiment: seeded
/// random hypergraphs filtered to the construction's precondition (a
/// non-empty family no single element hits entirely). Returns the accepted
/// instances and the number of rejected draws.
pub fn sample_total_domination_instances(
    seed: u64,
    count: usize,
    max_universe: usize,
    max_sets: usize,
) -> (Vec<Hypergraph>, usize) {
    let mut accepted = Vec::with_capacity(count);
    let mut rejected = 0;
    let mut stream = 0u64;
    while accepted.len() < count {
        let mut rng = trial_rng(seed, stream);
        stream += 1;
        let h = random_hypergraph(&mut rng, max_universe, max_sets);
        if reductions::hitting_set_to_total_domination(
            &h,
            reductions::TotalDominationVariant::Plain,
        )
        .is_ok()
        {
            accepted.push(h);
        } else {
            rejected += 1;
        }
    }
    (accepted, rejected)
}

/// Instances for the well-domination experiment: seeded random hypergraphs
/// paired with the greedy minimal hitting-set size k, filtered to k >= 2.
pub fn sample_well_domination_instances(
    seed: u64,
    count: usize,
    max_universe: usize,
    max_sets: usize,
) -> (Vec<(Hypergraph, usize)>, usize) {
    let mut accepted = Vec::with_capacity(count);
    let mut rejected = 0;
    let mut stream = 0u64;
    while accepted.len() < count {
        let mut rng = trial_rng(seed, stream);
        stream += 1;
        let h = random_hypergraph(&mut rng, max_universe, max_sets);
        let k = reductions::greedy_minimal_hitting_set(&h).len();
        if k >= 2 {
            accepted.push((h, k));
        } else {
            rejected += 1;
        }
    }
    (accepted, rejected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_determines_instances() {
        let mut a = trial_rng(1, 0);
        let mut b = trial_rng(1, 0);
        assert_eq!(
            crate::io::write_hypergraph(&random_hypergraph(&mut a, 5, 4)),
            crate::io::write_hypergraph(&random_hypergraph(&mut b, 5, 4)),
        );
        let mut c = trial_rng(2, 0);
        // different seeds almost surely differ; fixed seeds make this exact
        assert_ne!(
            crate::io::write_hypergraph(&random_hypergraph(&mut trial_rng(1, 0), 7, 6)),
            crate::io::write_hypergraph(&random_hypergraph(&mut c, 7, 6)),
        );
    }

    #[test]
    fn trials_are_independent_streams() {
        let mut rng = trial_rng(9, 3);
        let first = random_graph_sized(&mut rng, 8);
        // drawing again from a fresh stream-3 rng reproduces the graph
        let mut again = trial_rng(9, 3);
        assert_eq!(first, random_graph_sized(&mut again, 8));
    }

    #[test]
    fn samplers_respect_preconditions() {
        let (instances, _rejected) = sample_total_domination_instances(7, 25, 6, 5);
        assert_eq!(instances.len(), 25);
        for h in &instances {
            assert!(reductions::hitting_set_to_total_domination(
                h,
                reductions::TotalDominationVariant::Plain
            )
            .is_ok());
        }
        let (instances, _) = sample_well_domination_instances(7, 25, 6, 5);
        for (h, k) in &instances {
            assert!(*k >= 2);
            assert_eq!(reductions::greedy_minimal_hitting_set(h).len(), *k);
        }
    }

    #[test]
    fn constrained_generators_hold_their_promises() {
        for trial in 0..20 {
            let mut rng = trial_rng(5, trial);
            let g = random_connected_bipartite(&mut rng, 8);
            assert!(g.n() <= 8);
            assert!(g.is_connected().unwrap());
            assert!(g.is_bipartite());

            let mut rng = trial_rng(6, trial);
            let g = random_graph_no_isolated(&mut rng, 10);
            assert!(g.isolated_vertices().is_empty());
        }
    }
}
