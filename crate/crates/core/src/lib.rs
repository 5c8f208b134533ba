//! Exhaustive machinery for (2,3)-cordial labellings of directed graphs.
//!
//! A (0,1) vertex labelling `f` is *friendly* when its two label classes
//! differ in size by at most one. On a digraph, `f` induces an arc labelling
//! `g(u -> v) = f(v) - f(u)` with values in `{+1, -1, 0}`; the digraph is
//! *(2,3)-cordial* when some friendly labelling makes the three arc-label
//! counts pairwise differ by at most one. An undirected graph is
//! *(2,3)-orientable* when at least one orientation of it is (2,3)-cordial.
//!
//! The crate provides:
//!
//! - value types for digraphs, graphs, and tournaments, plus the generators
//!   for the families the theory discusses ([`graph`], [`families`]);
//! - canonical forms for small-order isomorphism testing ([`canonical`]);
//! - labelling primitives, friendly-labelling enumeration, and small
//!   quasigroup utilities ([`labelling`]);
//! - exhaustive decision procedures with deterministic, re-checkable
//!   witnesses ([`decide`], [`extremal`]);
//! - closed-form constructions for 5-tournaments, wheels, and fans, each
//!   self-validating ([`construct`]);
//! - text/DOT/JSON serialization ([`io`]) and the claim-verification harness
//!   behind the `cordial verify` command ([`harness`]).

pub mod canonical;
pub mod construct;
pub mod decide;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod labelling;

pub use canonical::{canonical_form, canonical_form_graph, CanonicalForm};
pub use decide::{
    brute_force_orientable_oracle, cordial_feasible_triple, is_23_cordial, is_23_orientable,
    tournament_census, CensusReport, Verdict, Witness,
};
pub use extremal::{max_arcs, verify_extremal_bound};
pub use graph::{Digraph, Graph, OutDegreeSequence, Tournament, Vertices};
pub use labelling::{
    complement_labelling, enumerate_friendly_labellings, induce_arc_labelling, is_cordial_triple,
    is_friendly, lambda, lambda_split, LambdaSplit, LambdaTriple, Scope, VertexLabelling,
};

/// Crate-wide error type.
///
/// `SizeCap` marks tractability caps on exhaustive procedures and is the one
/// variant the CLI reports with its own exit code; everything else is an
/// invalid input or, for `Falsified`, a self-check failure that would
/// contradict a verified mathematical claim.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("{what} requires order in {min}..={max}, got {order}")]
    OrderOutOfRange {
        what: &'static str,
        order: usize,
        min: usize,
        max: usize,
    },
    #[error("size cap exceeded: {what} handles at most {cap}, got {requested}")]
    SizeCap {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
    #[error("labelling covers {labelled} vertices but the host has {order}")]
    LabellingSize { labelled: usize, order: usize },
    #[error("labels must be 0 or 1, found {0}")]
    BadLabel(u8),
    #[error("not a tournament: {0}")]
    NotTournament(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-check failed: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
