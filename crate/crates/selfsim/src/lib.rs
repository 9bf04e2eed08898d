//! Finitely aligned k-graphs carrying self-similar actions of finite groups,
//! the inverse semigroup of orthogonal triples attached to such a system, and
//! decision procedures (exact where possible, depth-bounded otherwise) for
//! the structural properties of the associated tight groupoid: Hausdorffness,
//! minimality via cofinality, effectiveness via aperiodicity, and a simplicity
//! verdict combining them.
//!
//! The k-graph is presented by its colored 1-skeleton plus a complete,
//! associative table of commuting squares; everything else (morphisms, unique
//! factorization, minimal common extensions, boundary prefixes, germs) is
//! derived from that finite data.

pub mod action;
pub mod automaton;
pub mod boundary;
pub mod checkers;
pub mod degree;
pub mod error;
pub mod fixtures;
pub mod germ;
pub(crate) mod graphutil;
pub mod group;
pub mod isg;
pub mod kgraph;
pub mod parse;
pub mod path;
pub mod verdict;
pub mod zs;

pub use action::SelfSimilarSystem;
pub use degree::Degree;
pub use error::{Error, Issue, ValidationReport};
pub use group::{Group, GroupElement};
pub use isg::{ISGElement, Triple};
pub use kgraph::{Edge, EdgeId, KGraph, VertexId};
pub use path::{Path, PathSet};
pub use verdict::{Regime, Status, TriVerdict};
