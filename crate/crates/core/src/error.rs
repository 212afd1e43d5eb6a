use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the stable error names printed by the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graphs do not share the same underlying graph")]
    UnderlyingGraphMismatch,
    #[error("graph is not bicyclic: {0}")]
    NotBicyclic(String),
    #[error("signed graph is balanced")]
    Balanced,
    #[error("eigensolver did not converge within {0} iterations")]
    ConvergenceFailure(usize),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("cycle rank {0} exceeds the supported maximum of 2")]
    CycleRankTooHigh(usize),
    #[error("no real root in [{lo}, {hi}]")]
    NoRealRootInInterval { lo: f64, hi: f64 },
    #[error("edge {0}-{1} is missing")]
    EdgeMissing(usize, usize),
    #[error("edge {0}-{1} already exists or would be a loop")]
    EdgeCollision(usize, usize),
    #[error("edge {0}-{1} is not a cut edge")]
    NotCutEdge(usize, usize),
    #[error("index eigenvalue is not simple")]
    MultipleIndex,
    #[error("edge {0}-{1} is pendant")]
    PendantEdge(usize, usize),
    #[error("edge {0}-{1} lies in a triangle")]
    EdgeInTriangle(usize, usize),
    #[error("vertex {0} is not the root of an attached subtree")]
    NotSubtreeRoot(usize),
    #[error("unsupported order n = {0}")]
    UnsupportedN(usize),
    #[error("reconstruction of family {family} is ambiguous: {matches} matches")]
    ReconstructionAmbiguous { family: usize, matches: usize },
    #[error("ordering violated at n = {0}")]
    OrderingViolated(usize),
    #[error("exclusion violated: {0}")]
    ExclusionViolated(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// The variant name, used on stderr by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::SelfLoop(_) => "SelfLoop",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::UnderlyingGraphMismatch => "UnderlyingGraphMismatch",
            Error::NotBicyclic(_) => "NotBicyclic",
            Error::Balanced => "Balanced",
            Error::ConvergenceFailure(_) => "ConvergenceFailure",
            Error::TooLarge(_) => "TooLarge",
            Error::CycleRankTooHigh(_) => "CycleRankTooHigh",
            Error::NoRealRootInInterval { .. } => "NoRealRootInInterval",
            Error::EdgeMissing(..) => "EdgeMissing",
            Error::EdgeCollision(..) => "EdgeCollision",
            Error::NotCutEdge(..) => "NotCutEdge",
            Error::MultipleIndex => "MultipleIndex",
            Error::PendantEdge(..) => "PendantEdge",
            Error::EdgeInTriangle(..) => "EdgeInTriangle",
            Error::NotSubtreeRoot(_) => "NotSubtreeRoot",
            Error::UnsupportedN(_) => "UnsupportedN",
            Error::ReconstructionAmbiguous { .. } => "ReconstructionAmbiguous",
            Error::OrderingViolated(_) => "OrderingViolated",
            Error::ExclusionViolated(_) => "ExclusionViolated",
            Error::Parse { .. } => "Parse",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
