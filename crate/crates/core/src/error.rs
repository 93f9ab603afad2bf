use thiserror::Error;

/// Errors raised by sequence, transfer, tree and verification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree sequence is empty")]
    EmptySequence,
    #[error("non-positive degree {0}")]
    NonPositiveDegree(i64),
    #[error("sequence {sequence} is not tree-feasible: total {total} != 2(n-1) = {expected}")]
    NotTreeFeasible {
        sequence: String,
        total: u64,
        expected: u64,
    },
    #[error("sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("sequences have different totals ({0} vs {1})")]
    TotalMismatch(u64, u64),
    #[error("rank {rank} out of range for a sequence of length {len}")]
    RankOutOfRange { rank: usize, len: usize },
    #[error("receiver and donor ranks coincide ({0})")]
    SameRank(usize),
    #[error("donor at rank {0} has value 1 and would vanish")]
    DonorWouldVanish(usize),
    #[error("{source_seq} is not majorized by {target_seq}")]
    NotMajorized {
        source_seq: String,
        target_seq: String,
    },
    #[error("invalid plan at step {step}: {reason}")]
    InvalidPlan { step: usize, reason: String },

    #[error("a tree or graph needs at least one node")]
    NoNodes,
    #[error("node {node} out of range for {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("a tree on {n} nodes needs {expected} edges, got {got}")]
    EdgeCount { n: usize, expected: usize, got: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("target and donor are the same node ({0})")]
    TargetIsDonor(usize),
    #[error("donor {0} is a leaf")]
    DonorIsLeaf(usize),
    #[error("target {target} lies inside the branch at {donor} through {gateway}")]
    WouldDisconnect {
        donor: usize,
        gateway: usize,
        target: usize,
    },
    #[error("degree rule violated: deg({target}) = {target_degree} < deg({donor}) = {donor_degree}")]
    DegreeRuleViolation {
        donor: usize,
        target: usize,
        donor_degree: usize,
        target_degree: usize,
    },
    #[error("tree delta sequence {actual} does not match plan source {expected}")]
    SourceMismatch { expected: String, actual: String },
    #[error("malformed canonical code")]
    MalformedCode,

    #[error("n = {n} exceeds the supported bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("invalid sample graph {index}: {reason}")]
    InvalidSample { index: usize, reason: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
