//! The six wellness deciders. Each returns a verdict together with a
//! verifiable certificate: the common size on a yes-instance, or a pair of
//! minimal (resp. maximal) solutions of different sizes on a no-instance.
//!
//! Checkers short-circuit: enumeration stops as soon as two distinct sizes
//! have been seen. The witness pair is the lexicographically first pair
//! realizing (min size, max size) among the solutions examined, so reports
//! are deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use crate::enumerate::{Enumerator, InstanceRef, SolutionKind};
use crate::error::Result;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WellnessProperty {
    WellCovered,
    WellDominated,
    WellTotallyDominated,
    WellHittingSet,
    WellSetCover,
    WellHittingSetCover,
}

impl WellnessProperty {
    pub const ALL: [WellnessProperty; 6] = [
        WellnessProperty::WellCovered,
        WellnessProperty::WellDominated,
        WellnessProperty::WellTotallyDominated,
        WellnessProperty::WellHittingSet,
        WellnessProperty::WellSetCover,
        WellnessProperty::WellHittingSetCover,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            WellnessProperty::WellCovered => "well-covered",
            WellnessProperty::WellDominated => "well-dominated",
            WellnessProperty::WellTotallyDominated => "well-total-dominated",
            WellnessProperty::WellHittingSet => "well-hitting-set",
            WellnessProperty::WellSetCover => "well-set-cover",
            WellnessProperty::WellHittingSetCover => "well-hitting-set-cover",
        }
    }

    pub fn from_tag(tag: &str) -> Option<WellnessProperty> {
        WellnessProperty::ALL.iter().copied().find(|p| p.tag() == tag)
    }

    pub fn on_graphs(self) -> bool {
        matches!(
            self,
            WellnessProperty::WellCovered
                | WellnessProperty::WellDominated
                | WellnessProperty::WellTotallyDominated
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Well,
    NotWell,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Well => "well",
            Verdict::NotWell => "not-well",
        }
    }
}

/// One side of a no-certificate: a feasible, minimal (resp. maximal)
/// solution, carried both as ground indices and as display strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: SolutionKind,
    pub members: Vec<usize>,
    pub display: Vec<String>,
}

impl Witness {
    fn new(kind: SolutionKind, members: Vec<usize>, name: &dyn Fn(usize) -> String) -> Self {
        let display = members.iter().map(|&i| name(i)).collect();
        Witness {
            kind,
            members,
            display,
        }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    fn display_joined(&self) -> String {
        if self.display.is_empty() {
            "{}".to_string()
        } else {
            self.display.join(",")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WellnessReport {
    pub property: WellnessProperty,
    pub verdict: Verdict,
    /// Present iff the verdict is well.
    pub common_size: Option<usize>,
    /// Present iff the verdict is not-well: two solutions of distinct sizes,
    /// smaller first.
    pub witness: Option<(Witness, Witness)>,
    /// Number of minimal solutions examined before the verdict was fixed.
    pub solution_count: usize,
}

impl WellnessReport {
    pub fn is_well(&self) -> bool {
        self.verdict == Verdict::Well
    }

    /// The fixed-order machine-readable record:
    /// `<property> <verdict> <size|size1,size2> <witness1> <witness2>`.
    /// Witness fields are `-` on yes-instances; for the combined
    /// hitting-set/set-cover property they carry an `hs:`/`sc:` prefix.
    pub fn record_line(&self) -> String {
        let prefixed = self.property == WellnessProperty::WellHittingSetCover;
        match (&self.verdict, &self.witness) {
            (Verdict::Well, _) => format!(
                "{} well {} - -",
                self.property.tag(),
                self.common_size.expect("well reports carry a common size"),
            ),
            (Verdict::NotWell, Some((a, b))) => {
                let render = |w: &Witness| {
                    if prefixed {
                        let tag = match w.kind {
                            SolutionKind::MinimalSetCover => "sc",
                            _ => "hs",
                        };
                        format!("{tag}:{}", w.display_joined())
                    } else {
                        w.display_joined()
                    }
                };
                format!(
                    "{} not-well {},{} {} {}",
                    self.property.tag(),
                    a.size(),
                    b.size(),
                    render(a),
                    render(b),
                )
            }
            (Verdict::NotWell, None) => unreachable!("not-well reports carry a witness pair"),
        }
    }
}

impl fmt::Display for WellnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.verdict, &self.witness) {
            (Verdict::Well, _) => write!(
                f,
                "{}: well (every solution has size {}; {} solutions)",
                self.property.tag(),
                self.common_size.unwrap(),
                self.solution_count,
            ),
            (Verdict::NotWell, Some((a, b))) => write!(
                f,
                "{}: not well (witness sizes {} and {}: {{{}}} vs {{{}}}; {} solutions examined)",
                self.property.tag(),
                a.size(),
                b.size(),
                a.display_joined(),
                b.display_joined(),
                self.solution_count,
            ),
            (Verdict::NotWell, None) => unreachable!(),
        }
    }
}

/// Streams one family, stopping once two distinct sizes are seen.
struct Examination {
    kind: SolutionKind,
    examined: Vec<Vec<usize>>,
    sizes: BTreeSet<usize>,
}

impl Examination {
    fn run(
        enumerator: &Enumerator,
        kind: SolutionKind,
        instance: InstanceRef<'_>,
        prior_sizes: &BTreeSet<usize>,
    ) -> Result<Examination> {
        let mut examined = Vec::new();
        let mut sizes = prior_sizes.clone();
        enumerator.stream(kind, instance, |s| {
            examined.push(s.to_vec());
            sizes.insert(s.len());
            if sizes.len() >= 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        Ok(Examination {
            kind,
            examined,
            sizes,
        })
    }

    /// Lexicographically first examined solution of the given size.
    fn representative(&self, size: usize) -> Option<Vec<usize>> {
        self.examined
            .iter()
            .filter(|s| s.len() == size)
            .min()
            .cloned()
    }
}

fn single_family_report(
    enumerator: &Enumerator,
    property: WellnessProperty,
    kind: SolutionKind,
    instance: InstanceRef<'_>,
    name: &dyn Fn(usize) -> String,
) -> Result<WellnessReport> {
    let exam = Examination::run(enumerator, kind, instance, &BTreeSet::new())?;
    let count = exam.examined.len();
    if exam.sizes.len() <= 1 {
        let common = exam.sizes.iter().next().copied();
        debug_assert!(common.is_some(), "families are never empty");
        return Ok(WellnessReport {
            property,
            verdict: Verdict::Well,
            common_size: common,
            witness: None,
            solution_count: count,
        });
    }
    let min = *exam.sizes.iter().next().unwrap();
    let max = *exam.sizes.iter().next_back().unwrap();
    let small = Witness::new(kind, exam.representative(min).unwrap(), name);
    let large = Witness::new(kind, exam.representative(max).unwrap(), name);
    Ok(WellnessReport {
        property,
        verdict: Verdict::NotWell,
        common_size: None,
        witness: Some((small, large)),
        solution_count: count,
    })
}

fn decimal(i: usize) -> String {
    i.to_string()
}

/// Well iff all maximal independent sets (equivalently all minimal vertex
/// covers) share one size. Edgeless graphs are well by convention: the
/// vertex set is the unique maximal independent set.
pub fn check_well_covered(g: &Graph, enumerator: &Enumerator) -> Result<WellnessReport> {
    single_family_report(
        enumerator,
        WellnessProperty::WellCovered,
        SolutionKind::MaximalIndependentSet,
        g.into(),
        &decimal,
    )
}

pub fn check_well_dominated(g: &Graph, enumerator: &Enumerator) -> Result<WellnessReport> {
    single_family_report(
        enumerator,
        WellnessProperty::WellDominated,
        SolutionKind::MinimalDominatingSet,
        g.into(),
        &decimal,
    )
}

/// Errors on graphs with an isolated vertex, which admit no total
/// dominating set at all.
pub fn check_well_totally_dominated(g: &Graph, enumerator: &Enumerator) -> Result<WellnessReport> {
    single_family_report(
        enumerator,
        WellnessProperty::WellTotallyDominated,
        SolutionKind::MinimalTotalDominatingSet,
        g.into(),
        &decimal,
    )
}

pub fn check_well_hitting_set(h: &Hypergraph, enumerator: &Enumerator) -> Result<WellnessReport> {
    let name = |i: usize| h.element_name(i).to_string();
    single_family_report(
        enumerator,
        WellnessProperty::WellHittingSet,
        SolutionKind::MinimalHittingSet,
        h.into(),
        &name,
    )
}

pub fn check_well_set_cover(h: &Hypergraph, enumerator: &Enumerator) -> Result<WellnessReport> {
    single_family_report(
        enumerator,
        WellnessProperty::WellSetCover,
        SolutionKind::MinimalSetCover,
        h.into(),
        &decimal,
    )
}

/// Well iff the union of the hitting-set and set-cover size multisets is a
/// single value; the witness pair may combine one solution of each kind.
pub fn check_well_hitting_set_cover(
    h: &Hypergraph,
    enumerator: &Enumerator,
) -> Result<WellnessReport> {
    let property = WellnessProperty::WellHittingSetCover;
    // Surface the coverability precondition before any enumeration runs.
    h.dual()?;
    let hitting = Examination::run(
        enumerator,
        SolutionKind::MinimalHittingSet,
        h.into(),
        &BTreeSet::new(),
    )?;
    let covering = if hitting.sizes.len() >= 2 {
        None
    } else {
        Some(Examination::run(
            enumerator,
            SolutionKind::MinimalSetCover,
            h.into(),
            &hitting.sizes,
        )?)
    };
    let sizes = covering.as_ref().map_or(&hitting.sizes, |c| &c.sizes);
    let count = hitting.examined.len() + covering.as_ref().map_or(0, |c| c.examined.len());
    if sizes.len() <= 1 {
        return Ok(WellnessReport {
            property,
            verdict: Verdict::Well,
            common_size: sizes.iter().next().copied(),
            witness: None,
            solution_count: count,
        });
    }
    let min = *sizes.iter().next().unwrap();
    let max = *sizes.iter().next_back().unwrap();
    let hs_name = |i: usize| h.element_name(i).to_string();
    // Prefer the hitting-set stream, then covers, mirroring examination order.
    let pick = |size: usize| -> Witness {
        if let Some(members) = hitting.representative(size) {
            Witness::new(hitting.kind, members, &hs_name)
        } else {
            let exam = covering.as_ref().expect("size seen only in cover stream");
            Witness::new(exam.kind, exam.representative(size).unwrap(), &decimal)
        }
    };
    Ok(WellnessReport {
        property,
        verdict: Verdict::NotWell,
        common_size: None,
        witness: Some((pick(min), pick(max))),
        solution_count: count,
    })
}

/// Dispatch by property tag; graph properties need a graph instance and the
/// rest a hypergraph.
pub fn check(
    property: WellnessProperty,
    instance: InstanceRef<'_>,
    enumerator: &Enumerator,
) -> Result<WellnessReport> {
    match property {
        WellnessProperty::WellCovered
        | WellnessProperty::WellDominated
        | WellnessProperty::WellTotallyDominated => {
            let kind = match property {
                WellnessProperty::WellCovered => SolutionKind::MaximalIndependentSet,
                WellnessProperty::WellDominated => SolutionKind::MinimalDominatingSet,
                _ => SolutionKind::MinimalTotalDominatingSet,
            };
            single_family_report(enumerator, property, kind, instance, &decimal)
        }
        WellnessProperty::WellHittingSet => match instance {
            InstanceRef::Hypergraph(h) => check_well_hitting_set(h, enumerator),
            InstanceRef::Graph(_) => Err(crate::error::Error::KindMismatch {
                expected: "hypergraph",
                found: "graph",
            }),
        },
        WellnessProperty::WellSetCover => match instance {
            InstanceRef::Hypergraph(h) => check_well_set_cover(h, enumerator),
            InstanceRef::Graph(_) => Err(crate::error::Error::KindMismatch {
                expected: "hypergraph",
                found: "graph",
            }),
        },
        WellnessProperty::WellHittingSetCover => match instance {
            InstanceRef::Hypergraph(h) => check_well_hitting_set_cover(h, enumerator),
            InstanceRef::Graph(_) => Err(crate::error::Error::KindMismatch {
                expected: "hypergraph",
                found: "graph",
            }),
        },
    }
}
