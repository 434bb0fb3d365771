//! Signed graphs, walk-powers and the extremal planar constructions that
//! lower-bound the size of homomorphism bounds for planar graphs of given
//! odd girth and planar signed bipartite graphs of given unbalanced girth.
//!
//! The main entry points:
//!
//! * [`walk_power`], [`signed_bipartite_power`], [`refined_odd_power`]
//! * [`projective_cube`], [`signed_projective_cube`]
//! * [`odd_construction`], [`signed_construction`], [`degree_gadget`]
//! * [`find_graph_hom`], [`find_signed_hom`], [`packing_to_spc`]
//! * [`max_clique`], [`is_clique`]

pub mod clique;
pub mod construct;
pub mod cube;
pub mod error;
pub mod format;
pub mod girth;
pub mod graph;
pub mod hom;
pub mod power;
pub mod signed;

pub use clique::{is_clique, max_clique, min_degree, CliqueCertificate, CliqueSearch};
pub use construct::{
    clique_size_formula, degree_gadget, odd_construction, signed_construction, subdivided_k4,
    verify_subdivided_k4_power, Case, DegreeGadget, PathLengths, PlaneConstruction, SubdividedK4,
    Thread,
};
pub use cube::{projective_cube, signed_projective_cube, CubeSpec};
pub use error::{Error, Result};
pub use girth::{odd_girth, unbalanced_girth, Girth};
pub use graph::{Cycle, Edge, Graph, Sign, SignedGraph, SwitchSet};
pub use hom::{
    find_graph_hom, find_signed_hom, find_signed_hom_to, packing_to_spc, verify_graph_hom,
    verify_hom, verify_hom_to, verify_packing, HomWitness, PackingWitness, SearchOutcome,
    SearchResult, SignedTarget,
};
pub use power::{refined_odd_power, signed_bipartite_power, walk_power};
pub use signed::{
    bipartition, classify_consistency, cycle_sign, signatures_equivalent, switch, ConsistencyClass,
    CycleSign,
};
