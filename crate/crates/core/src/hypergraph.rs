//! Hypergraphs: a named universe plus a family of non-empty element subsets.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A sorted, duplicate-free set of element names. Ordering follows the
/// owning hypergraph's universe order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ElementSet {
    names: Vec<String>,
}

impl ElementSet {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|n| n == name)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.names.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{}", self.names.join(","))
    }
}

/// Which side of the incidence graph a vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncidenceRole {
    Element(usize),
    Set(usize),
}

/// A hypergraph over a universe of named elements. Every set is non-empty
/// (an empty set admits no hitting set and is rejected at construction);
/// an empty family is allowed and makes the empty set the unique minimal
/// hitting set. Duplicate sets are permitted but reported by [`warnings`].
///
/// [`warnings`]: Hypergraph::warnings
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    universe: Vec<String>,
    index: HashMap<String, usize>,
    sets: Vec<Vec<usize>>,
    set_names: Vec<Option<String>>,
}

impl Hypergraph {
    pub fn new<U, S, N>(universe: U, sets: S) -> Result<Self>
    where
        U: IntoIterator<Item = N>,
        S: IntoIterator<Item = Vec<N>>,
        N: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, name) in universe.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let mut resolved = Vec::new();
        for (set_idx, set) in sets.into_iter().enumerate() {
            let mut members = Vec::with_capacity(set.len());
            for name in set {
                let name = name.into();
                match index.get(&name) {
                    Some(&i) => members.push(i),
                    None => return Err(Error::UnknownElement(name)),
                }
            }
            members.sort_unstable();
            members.dedup();
            if members.is_empty() {
                return Err(Error::EmptySet(set_idx));
            }
            resolved.push(members);
        }
        let set_names = vec![None; resolved.len()];
        Ok(Hypergraph {
            universe,
            index,
            sets: resolved,
            set_names,
        })
    }

    /// Builds directly from element indices; used by the graph-to-hypergraph
    /// translations where the universe is `0..n` rendered as decimal names.
    pub(crate) fn from_indexed(universe: Vec<String>, sets: Vec<Vec<usize>>) -> Result<Self> {
        let named = sets
            .into_iter()
            .map(|s| s.into_iter().map(|i| universe[i].clone()).collect())
            .collect::<Vec<Vec<String>>>();
        Hypergraph::new(universe, named)
    }

    pub fn set_set_name(&mut self, set: usize, name: impl Into<String>) -> Result<()> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidName(name));
        }
        self.set_names[set] = Some(name);
        Ok(())
    }

    /// The display name of a set: the provided one, or `S<index>`.
    pub fn set_name(&self, set: usize) -> String {
        match &self.set_names[set] {
            Some(name) => name.clone(),
            None => format!("S{set}"),
        }
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn universe_size(&self) -> usize {
        self.universe.len()
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    /// Members of one set as sorted element indices.
    pub fn set(&self, set: usize) -> &[usize] {
        &self.sets[set]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set_members(&self, set: usize) -> Vec<String> {
        self.sets[set]
            .iter()
            .map(|&i| self.universe[i].clone())
            .collect()
    }

    pub fn element_name(&self, element: usize) -> &str {
        &self.universe[element]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn element_set(&self, indices: &[usize]) -> ElementSet {
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        ElementSet {
            names: sorted.iter().map(|&i| self.universe[i].clone()).collect(),
        }
    }

    pub fn contains_element(&self, set: usize, element: usize) -> bool {
        self.sets[set].binary_search(&element).is_ok()
    }

    /// Validation warnings that do not make the instance invalid.
    /// Duplicate sets do not change the minimal hitting sets but are flagged.
    pub fn warnings(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        for i in 0..self.sets.len() {
            for j in i + 1..self.sets.len() {
                if self.sets[i] == self.sets[j] {
                    warnings.push(format!("sets {i} and {j} are identical"));
                }
            }
        }
        warnings
    }

    /// The dual hypergraph: one universe element `S<j>` per set, and one set
    /// per original element listing the sets containing it. Errors if some
    /// element occurs in no set, since its dual set would be empty.
    pub fn dual(&self) -> Result<Hypergraph> {
        let universe: Vec<String> = (0..self.sets.len()).map(|j| format!("S{j}")).collect();
        let mut dual_sets = Vec::with_capacity(self.universe.len());
        for e in 0..self.universe.len() {
            let members: Vec<usize> = (0..self.sets.len())
                .filter(|&j| self.contains_element(j, e))
                .collect();
            if members.is_empty() {
                return Err(Error::UncoverableElement(self.universe[e].clone()));
            }
            dual_sets.push(members);
        }
        let mut dual = Hypergraph::from_indexed(universe, dual_sets)?;
        for (e, name) in self.universe.iter().enumerate() {
            dual.set_set_name(e, name.clone())?;
        }
        Ok(dual)
    }

    /// The bipartite incidence graph: one vertex per element (ids `0..|U|`),
    /// one per set (ids `|U|..|U|+|F|`), an edge for each membership. The
    /// returned role map records which side each vertex came from.
    pub fn incidence_graph(&self) -> (Graph, Vec<IncidenceRole>) {
        let u = self.universe.len();
        let mut g = Graph::new(u + self.sets.len());
        let mut roles = Vec::with_capacity(u + self.sets.len());
        for (e, name) in self.universe.iter().enumerate() {
            g.set_label(e, name.clone()).expect("element names are valid labels");
            roles.push(IncidenceRole::Element(e));
        }
        for j in 0..self.sets.len() {
            g.set_label(u + j, self.set_name(j)).expect("set names are valid labels");
            roles.push(IncidenceRole::Set(j));
            for &e in &self.sets[j] {
                g.add_edge(e, u + j).expect("incidence edges are valid");
            }
        }
        (g, roles)
    }

    /// Membership bitmasks over the universe; requires `|U| <= 64`.
    pub(crate) fn set_masks(&self) -> Vec<u64> {
        assert!(self.universe.len() <= 64);
        self.sets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &e| m | (1 << e)))
            .collect()
    }

    /// Stable content hash of the canonical text form.
    pub fn fingerprint(&self) -> String {
        crate::fingerprint::fingerprint(crate::io::write_hypergraph(self).as_bytes())
    }
}
