//! Quivers, the trace space `HH₀ = R/[R,R]` of their path algebras, and the
//! trace pairing with finite-dimensional representations.
//!
//! Paths are written left to right as arrow sequences `a₁a₂⋯a_k` (first arrow
//! first). A representation sends such a walk to `A_k⋯A₁`, matrices applied
//! right to left, so that shapes always compose. Traces of closed walks do
//! not depend on this choice up to rotation.

mod path;
mod quiver;
mod rep;
mod trace;

use thiserror::Error;

use crate::exactalg::AlgError;

pub use path::{canonicalize_cycle, least_rotation, path_class, Chain, PathClass};
pub use quiver::{Arrow, Quiver};
pub use rep::{ho_trace, rep_moduli_chart, Representation, DEFAULT_SYMBOLIC_CAP, MAX_PARSED_DIMENSION, WALK_CONVENTION};
pub use trace::{trace_space, TraceSpace, DEFAULT_WALK_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("arrow `{label}` has an endpoint outside 1..={vertices}")]
    BadVertex { label: String, vertices: usize },
    #[error("invalid arrow label `{0}`")]
    BadLabel(String),
    #[error("duplicate arrow label `{0}`")]
    DuplicateLabel(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("path is not a closed walk")]
    NotClosed,
    #[error("chain: {0}")]
    Chain(String),
    #[error("walk enumeration visited more than {0} nodes")]
    WalkCap(usize),
    #[error("arrow `{arrow}` needs a {}x{} matrix, got {}x{}", expected.0, expected.1, got.0, got.1)]
    ShapeMismatch {
        arrow: String,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("expected {expected} vertex dimensions, got {got}")]
    DimsMismatch { expected: usize, got: usize },
    #[error("{vars} symbolic entries exceed the cap {cap}")]
    CapExceeded { vars: usize, cap: usize },
    #[error("representation: {0}")]
    Rep(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}
