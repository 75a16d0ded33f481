//! Python bindings: graphs, hypergraphs, solution-family enumeration, the
//! wellness checkers, the gadget reductions and their verifiers, and the
//! seeded generators, all driven in-process.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use welldom::enumerate::{Enumerator, InstanceRef, SolutionKind};
use welldom::reductions::{
    self, NeighborhoodMode, SizeCounterexample, SizeRelation, TotalDominationVariant,
};
use welldom::{chain, classes, gen, io, wellness, WellnessProperty};

fn value_err(err: welldom::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn enumerator(cap: Option<usize>) -> Enumerator {
    match cap {
        Some(cap) => Enumerator::with_cap(cap),
        None => Enumerator::new(),
    }
}

fn parse_property(tag: &str) -> PyResult<WellnessProperty> {
    WellnessProperty::from_tag(tag)
        .ok_or_else(|| PyValueError::new_err(format!("unknown property {tag:?}")))
}

fn parse_kind(tag: &str) -> PyResult<SolutionKind> {
    SolutionKind::from_tag(tag)
        .or_else(|| SolutionKind::from_tag(tag.trim_end_matches('s')))
        .ok_or_else(|| PyValueError::new_err(format!("unknown family kind {tag:?}")))
}

fn parse_variant(tag: &str) -> PyResult<TotalDominationVariant> {
    TotalDominationVariant::from_tag(tag)
        .ok_or_else(|| PyValueError::new_err(format!("unknown variant {tag:?}")))
}

fn parse_mode(tag: &str) -> PyResult<NeighborhoodMode> {
    NeighborhoodMode::from_tag(tag)
        .ok_or_else(|| PyValueError::new_err(format!("unknown mode {tag:?}")))
}

/// A simple undirected graph over vertex ids 0..n.
#[pyclass(eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: welldom::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize) -> Self {
        Graph {
            inner: welldom::Graph::new(n),
        }
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: welldom::Graph::from_edges(n, edges).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: io::parse_graph(text).map_err(value_err)?,
        })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.n()
    }

    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<()> {
        self.inner.add_edge(u, v).map_err(value_err)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn open_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.open_neighborhood(v).map_err(value_err)?.into_vec())
    }

    fn closed_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.closed_neighborhood(v).map_err(value_err)?.into_vec())
    }

    fn isolated_vertices(&self) -> Vec<usize> {
        self.inner.isolated_vertices()
    }

    fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        self.inner
            .bipartition()
            .map(|(a, b)| (a.into_vec(), b.into_vec()))
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_split(&self) -> bool {
        self.inner.is_split()
    }

    fn degeneracy(&self) -> usize {
        self.inner.degeneracy()
    }

    fn is_connected(&self) -> PyResult<bool> {
        self.inner.is_connected().map_err(value_err)
    }

    fn label(&self, v: usize) -> Option<String> {
        self.inner.label(v).map(str::to_string)
    }

    fn set_label(&mut self, v: usize, label: &str) -> PyResult<()> {
        self.inner.set_label(v, label).map_err(value_err)
    }

    fn to_text(&self) -> String {
        io::write_graph(&self.inner)
    }

    fn fingerprint(&self) -> String {
        self.inner.fingerprint()
    }

    /// Decide a wellness property, e.g. "well-dominated".
    #[pyo3(signature = (property, cap=None))]
    fn check(&self, property: &str, cap: Option<usize>) -> PyResult<WellnessReport> {
        let property = parse_property(property)?;
        let report = wellness::check(property, InstanceRef::Graph(&self.inner), &enumerator(cap))
            .map_err(value_err)?;
        Ok(WellnessReport { inner: report })
    }

    /// Enumerate one solution family, e.g. "minimal-dominating-sets".
    #[pyo3(signature = (kind, cap=None))]
    fn family(&self, kind: &str, cap: Option<usize>) -> PyResult<SolutionFamily> {
        let kind = parse_kind(kind)?;
        let family = enumerator(cap)
            .family(kind, InstanceRef::Graph(&self.inner))
            .map_err(value_err)?;
        Ok(SolutionFamily { inner: family })
    }

    #[pyo3(signature = (cap=None))]
    fn chain_parameters(&self, cap: Option<usize>) -> PyResult<ChainParameters> {
        let params = chain::chain_parameters(&self.inner, &enumerator(cap)).map_err(value_err)?;
        Ok(ChainParameters { inner: params })
    }

    #[pyo3(signature = (cap=None))]
    fn is_very_well_covered(&self, cap: Option<usize>) -> PyResult<bool> {
        chain::is_very_well_covered(&self.inner, &enumerator(cap)).map_err(value_err)
    }

    #[pyo3(signature = (cap=None))]
    fn is_very_well_dominated(&self, cap: Option<usize>) -> PyResult<bool> {
        chain::is_very_well_dominated(&self.inner, &enumerator(cap)).map_err(value_err)
    }

    /// Polynomial recognizer for connected bipartite graphs.
    fn recognize_bipartite_well_dominated(&self) -> PyResult<bool> {
        chain::recognize_bipartite_well_dominated(&self.inner).map_err(value_err)
    }

    fn corona_with_k1(&self) -> Graph {
        Graph {
            inner: chain::corona_with_k1(&self.inner),
        }
    }

    fn is_corona_with_k1(&self) -> Option<Graph> {
        chain::is_corona_with_k1(&self.inner).map(|inner| Graph { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// A hypergraph: named universe plus a family of non-empty subsets.
#[pyclass(eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Hypergraph {
    inner: welldom::Hypergraph,
}

#[pymethods]
impl Hypergraph {
    #[new]
    fn new(universe: Vec<String>, sets: Vec<Vec<String>>) -> PyResult<Self> {
        Ok(Hypergraph {
            inner: welldom::Hypergraph::new(universe, sets).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Hypergraph {
            inner: io::parse_hypergraph(text).map_err(value_err)?,
        })
    }

    #[getter]
    fn universe(&self) -> Vec<String> {
        self.inner.universe().to_vec()
    }

    #[getter]
    fn universe_size(&self) -> usize {
        self.inner.universe_size()
    }

    #[getter]
    fn set_count(&self) -> usize {
        self.inner.set_count()
    }

    fn sets(&self) -> Vec<Vec<String>> {
        (0..self.inner.set_count())
            .map(|j| self.inner.set_members(j))
            .collect()
    }

    fn set_name(&self, set: usize) -> PyResult<String> {
        if set >= self.inner.set_count() {
            return Err(PyValueError::new_err(format!("set {set} out of range")));
        }
        Ok(self.inner.set_name(set))
    }

    fn warnings(&self) -> Vec<String> {
        self.inner.warnings()
    }

    fn dual(&self) -> PyResult<Hypergraph> {
        Ok(Hypergraph {
            inner: self.inner.dual().map_err(value_err)?,
        })
    }

    /// The bipartite incidence graph plus one role string per vertex,
    /// "element:<name>" or "set:<name>".
    fn incidence_graph(&self) -> (Graph, Vec<String>) {
        let (g, roles) = self.inner.incidence_graph();
        let tags = roles
            .iter()
            .map(|role| match role {
                welldom::IncidenceRole::Element(e) => {
                    format!("element:{}", self.inner.element_name(*e))
                }
                welldom::IncidenceRole::Set(j) => format!("set:{}", self.inner.set_name(*j)),
            })
            .collect();
        (Graph { inner: g }, tags)
    }

    fn to_text(&self) -> String {
        io::write_hypergraph(&self.inner)
    }

    fn fingerprint(&self) -> String {
        self.inner.fingerprint()
    }

    #[pyo3(signature = (property, cap=None))]
    fn check(&self, property: &str, cap: Option<usize>) -> PyResult<WellnessReport> {
        let property = parse_property(property)?;
        let report = wellness::check(
            property,
            InstanceRef::Hypergraph(&self.inner),
            &enumerator(cap),
        )
        .map_err(value_err)?;
        Ok(WellnessReport { inner: report })
    }

    #[pyo3(signature = (kind, cap=None))]
    fn family(&self, kind: &str, cap: Option<usize>) -> PyResult<SolutionFamily> {
        let kind = parse_kind(kind)?;
        let family = enumerator(cap)
            .family(kind, InstanceRef::Hypergraph(&self.inner))
            .map_err(value_err)?;
        Ok(SolutionFamily { inner: family })
    }

    fn greedy_minimal_hitting_set(&self) -> Vec<String> {
        reductions::greedy_minimal_hitting_set(&self.inner)
            .names()
            .to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(universe={}, sets={})",
            self.inner.universe_size(),
            self.inner.set_count()
        )
    }
}

/// A complete solution family, sorted by (cardinality, lexicographic ids).
#[pyclass]
struct SolutionFamily {
    inner: welldom::SolutionFamily,
}

#[pymethods]
impl SolutionFamily {
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().tag()
    }

    #[getter]
    fn fingerprint(&self) -> String {
        self.inner.fingerprint().to_string()
    }

    #[getter]
    fn solutions(&self) -> Vec<Vec<usize>> {
        self.inner.solutions().to_vec()
    }

    #[getter]
    fn sizes(&self) -> Vec<usize> {
        self.inner.sizes()
    }

    #[getter]
    fn size_values(&self) -> Vec<usize> {
        self.inner.size_values().into_iter().collect()
    }

    fn membership_fraction(&self, element: usize) -> f64 {
        self.inner.membership_fraction(element)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "SolutionFamily(kind={}, solutions={})",
            self.inner.kind().tag(),
            self.inner.len()
        )
    }
}

/// Verdict plus certificate: the common size, or a witness pair of minimal
/// solutions of different sizes.
#[pyclass]
struct WellnessReport {
    inner: wellness::WellnessReport,
}

type WitnessTuple = (String, Vec<usize>, Vec<String>);

fn witness_tuple(w: &wellness::Witness) -> WitnessTuple {
    (w.kind.tag().to_string(), w.members.clone(), w.display.clone())
}

#[pymethods]
impl WellnessReport {
    #[getter]
    fn property(&self) -> &'static str {
        self.inner.property.tag()
    }

    #[getter]
    fn verdict(&self) -> &'static str {
        self.inner.verdict.tag()
    }

    fn is_well(&self) -> bool {
        self.inner.is_well()
    }

    #[getter]
    fn common_size(&self) -> Option<usize> {
        self.inner.common_size
    }

    #[getter]
    fn solution_count(&self) -> usize {
        self.inner.solution_count
    }

    /// On a no-instance: two (kind, members, display) triples, smaller first.
    #[getter]
    fn witness(&self) -> Option<(WitnessTuple, WitnessTuple)> {
        self.inner
            .witness
            .as_ref()
            .map(|(a, b)| (witness_tuple(a), witness_tuple(b)))
    }

    fn record_line(&self) -> String {
        self.inner.record_line()
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// The four domination-chain parameters.
#[pyclass]
struct ChainParameters {
    inner: chain::ChainParameters,
}

#[pymethods]
impl ChainParameters {
    #[getter]
    fn lower_domination(&self) -> usize {
        self.inner.lower_domination
    }

    #[getter]
    fn upper_domination(&self) -> usize {
        self.inner.upper_domination
    }

    #[getter]
    fn independent_domination(&self) -> usize {
        self.inner.independent_domination
    }

    #[getter]
    fn independence(&self) -> usize {
        self.inner.independence
    }

    fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (
            self.inner.lower_domination,
            self.inner.upper_domination,
            self.inner.independent_domination,
            self.inner.independence,
        )
    }

    fn record_line(&self) -> String {
        self.inner.record_line()
    }

    fn __repr__(&self) -> String {
        format!("ChainParameters({})", self.inner.record_line())
    }
}

/// A constructed gadget with its role table and declared structure.
#[pyclass]
struct ReductionOutput {
    inner: reductions::ReductionOutput,
}

#[pymethods]
impl ReductionOutput {
    #[getter]
    fn graph(&self) -> Graph {
        Graph {
            inner: self.inner.graph.clone(),
        }
    }

    /// One (role, source) pair per vertex id.
    #[getter]
    fn roles(&self) -> Vec<(String, String)> {
        self.inner
            .roles
            .iter()
            .map(|r| (r.role.tag(), r.source.clone()))
            .collect()
    }

    #[getter]
    fn guarantees(&self) -> Vec<String> {
        self.inner.guarantees.iter().map(|g| g.to_string()).collect()
    }

    #[getter]
    fn k(&self) -> Option<usize> {
        self.inner.k
    }

    #[getter]
    fn variant(&self) -> Option<&'static str> {
        self.inner.variant.map(TotalDominationVariant::tag)
    }

    fn role_table(&self) -> String {
        self.inner.role_table()
    }

    fn __repr__(&self) -> String {
        format!("ReductionOutput(n={})", self.inner.graph.n())
    }
}

/// Size comparison between the two sides of a reduction.
#[pyclass]
struct CorrespondenceReport {
    inner: reductions::CorrespondenceReport,
}

#[pymethods]
impl CorrespondenceReport {
    #[getter]
    fn matched(&self) -> bool {
        self.inner.matched
    }

    #[getter]
    fn shift(&self) -> i64 {
        self.inner.relation.shift()
    }

    #[getter]
    fn extra(&self) -> Option<usize> {
        match self.inner.relation {
            SizeRelation::ShiftWithExtra { extra, .. } => Some(extra),
            SizeRelation::Shift(_) => None,
        }
    }

    #[getter]
    fn source_sizes(&self) -> Vec<usize> {
        self.inner.source_sizes.clone()
    }

    #[getter]
    fn target_sizes(&self) -> Vec<usize> {
        self.inner.target_sizes.clone()
    }

    fn source_well(&self) -> bool {
        self.inner.source_well()
    }

    fn target_well(&self) -> bool {
        self.inner.target_well()
    }

    /// (side, size, solution) of the first unmatched size, if any.
    #[getter]
    fn counterexample(&self) -> Option<(String, usize, Vec<usize>)> {
        self.inner.counterexample.as_ref().map(|c| match c {
            SizeCounterexample::UnmatchedTarget { size, solution } => {
                ("target".to_string(), *size, solution.clone())
            }
            SizeCounterexample::UnmatchedSource { size, solution, .. } => {
                ("source".to_string(), *size, solution.clone())
            }
        })
    }

    fn record_line(&self) -> String {
        self.inner.record_line()
    }

    fn __repr__(&self) -> String {
        self.inner.record_line()
    }
}

#[pyfunction]
#[pyo3(signature = (h, variant="plain"))]
fn hitting_set_to_total_domination(h: &Hypergraph, variant: &str) -> PyResult<ReductionOutput> {
    let variant = parse_variant(variant)?;
    Ok(ReductionOutput {
        inner: reductions::hitting_set_to_total_domination(&h.inner, variant)
            .map_err(value_err)?,
    })
}

#[pyfunction]
fn hitting_set_to_domination(h: &Hypergraph, k: usize) -> PyResult<ReductionOutput> {
    Ok(ReductionOutput {
        inner: reductions::hitting_set_to_domination(&h.inner, k).map_err(value_err)?,
    })
}

#[pyfunction]
fn vertex_cover_to_hitting_set(g: &Graph) -> PyResult<Hypergraph> {
    Ok(Hypergraph {
        inner: reductions::vertex_cover_to_hitting_set(&g.inner).map_err(value_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (g, mode="closed"))]
fn domination_to_hitting_set(g: &Graph, mode: &str) -> PyResult<Hypergraph> {
    let mode = parse_mode(mode)?;
    Ok(Hypergraph {
        inner: reductions::domination_to_hitting_set(&g.inner, mode).map_err(value_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (h, variant="plain", cap=48))]
fn verify_total_domination_reduction(
    h: &Hypergraph,
    variant: &str,
    cap: usize,
) -> PyResult<CorrespondenceReport> {
    let variant = parse_variant(variant)?;
    Ok(CorrespondenceReport {
        inner: reductions::verify_total_domination_reduction(
            &h.inner,
            variant,
            &Enumerator::with_cap(cap),
        )
        .map_err(value_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (h, k, cap=48))]
fn verify_well_domination_reduction(
    h: &Hypergraph,
    k: usize,
    cap: usize,
) -> PyResult<CorrespondenceReport> {
    Ok(CorrespondenceReport {
        inner: reductions::verify_well_domination_reduction(
            &h.inner,
            k,
            &Enumerator::with_cap(cap),
        )
        .map_err(value_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (seed, trial=0, max_universe=7, max_sets=6))]
fn random_hypergraph(seed: u64, trial: u64, max_universe: usize, max_sets: usize) -> Hypergraph {
    let mut rng = gen::trial_rng(seed, trial);
    Hypergraph {
        inner: gen::random_hypergraph(&mut rng, max_universe, max_sets),
    }
}

#[pyfunction]
#[pyo3(signature = (seed, n, edge_prob=0.5, trial=0))]
fn random_graph(seed: u64, n: usize, edge_prob: f64, trial: u64) -> PyResult<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(PyValueError::new_err("edge_prob must lie in [0, 1]"));
    }
    let mut rng = gen::trial_rng(seed, trial);
    Ok(Graph {
        inner: gen::random_graph(&mut rng, n, edge_prob),
    })
}

#[pyfunction]
fn path(n: usize) -> Graph {
    Graph {
        inner: classes::path(n),
    }
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<Graph> {
    if n < 3 {
        return Err(PyValueError::new_err("a cycle needs at least 3 vertices"));
    }
    Ok(Graph {
        inner: classes::cycle(n),
    })
}

#[pyfunction]
fn complete(n: usize) -> Graph {
    Graph {
        inner: classes::complete(n),
    }
}

#[pyfunction]
fn star(leaves: usize) -> Graph {
    Graph {
        inner: classes::star(leaves),
    }
}

#[pymodule]
fn welldom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Graph>()?;
    m.add_class::<Hypergraph>()?;
    m.add_class::<SolutionFamily>()?;
    m.add_class::<WellnessReport>()?;
    m.add_class::<ChainParameters>()?;
    m.add_class::<ReductionOutput>()?;
    m.add_class::<CorrespondenceReport>()?;
    m.add_function(wrap_pyfunction!(hitting_set_to_total_domination, m)?)?;
    m.add_function(wrap_pyfunction!(hitting_set_to_domination, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_cover_to_hitting_set, m)?)?;
    m.add_function(wrap_pyfunction!(domination_to_hitting_set, m)?)?;
    m.add_function(wrap_pyfunction!(verify_total_domination_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(verify_well_domination_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(random_hypergraph, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    Ok(())
}
