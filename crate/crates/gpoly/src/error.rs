//! Error types shared across the crate.

use thiserror::Error;

/// Errors from exact ring arithmetic.
#[derive(Debug, Error)]
pub enum RingError {
    /// Division was attempted by zero or by a non-unit of the ring.
    #[error("division by zero or by a non-unit")]
    DivisionByNonUnit,
    /// An operation that requires integer coefficients received a proper
    /// rational.
    #[error("operation requires integral coefficients, got {0}")]
    NonIntegral(String),
    /// Interpolation from sample points failed (inconsistent or insufficient
    /// samples, or a non-integer result).
    #[error("interpolation failed: {0}")]
    Interpolation(String),
    /// A cyclotomic value expected to lie in the real subfield did not.
    #[error("value is not in the real subfield: {0}")]
    NotReal(String),
}

/// Errors from multigraph operations, parsing, and generation.
#[derive(Debug, Error)]
pub enum GraphError {
    /// An edge index referred outside the edge list.
    #[error("edge index {0} out of range")]
    NoSuchEdge(usize),
    /// A vertex index referred outside the vertex range.
    #[error("vertex index {0} out of range")]
    NoSuchVertex(usize),
    /// Contracting a loop is undefined.
    #[error("cannot contract a loop")]
    ContractLoop,
    /// graph6/sparse6 parse failure, with the byte offset of the problem.
    #[error("format parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// Cubic graphs exist only on positive even vertex counts.
    #[error("cubic generation needs a positive even vertex count, got {0}")]
    OddOrder(usize),
    /// A precondition on the input graph was violated.
    #[error("invalid input graph: {0}")]
    Precondition(String),
}

/// Errors from identity verification and disk-space computations.
#[derive(Debug, Error)]
pub enum CheckError {
    /// The input violated a precondition of the check (wrong degree
    /// sequence, bridge present, missing witness, ...).
    #[error("check precondition violated: {0}")]
    Precondition(String),
    /// A disk input was structurally corrupted: its expansion over the
    /// two-point basis does not exist.
    #[error("corrupted disk input: {0}")]
    CorruptedDisk(String),
    /// An underlying graph operation failed.
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// An underlying diagram operation failed.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    /// An underlying ring operation failed.
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Errors from planar-diagram operations.
#[derive(Debug, Error)]
pub enum DiagramError {
    /// The diagram structure is malformed (half-edge used twice, missing
    /// arc, wrong valence, ...).
    #[error("malformed diagram: {0}")]
    Malformed(String),
    /// The node id does not refer to a crossing.
    #[error("node {0} is not a crossing")]
    NotACrossing(usize),
    /// The node id does not exist.
    #[error("no such node {0}")]
    NoSuchNode(usize),
    /// A requested local move cannot be applied at the given site.
    #[error("invalid move site: {0}")]
    InvalidSite(String),
    /// The diagram does not describe a genus-zero (planar) embedding.
    #[error("diagram is not planar: {0}")]
    NotPlanar(String),
    /// A precondition on the diagram was violated.
    #[error("invalid input diagram: {0}")]
    Precondition(String),
    /// JSON (de)serialization failure.
    #[error("diagram JSON error: {0}")]
    Json(String),
}
