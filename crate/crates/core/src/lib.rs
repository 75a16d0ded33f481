//! Enumeration, checking, and empirical verification of "wellness"
//! properties: does every minimal (or maximal) solution of an instance have
//! the same size? Covers dominating sets, total dominating sets, vertex
//! covers / independent sets, hitting sets, and set covers, together with
//! the gadget constructions that carry hitting-set structure into
//! domination problems and the domination-chain parameters.

pub mod chain;
pub mod classes;
pub mod enumerate;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod reductions;
pub mod wellness;

mod fingerprint;

pub use enumerate::{Engine, Enumerator, InstanceRef, SolutionFamily, SolutionKind};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use hypergraph::{ElementSet, Hypergraph, IncidenceRole};
pub use wellness::{Verdict, WellnessProperty, WellnessReport};
