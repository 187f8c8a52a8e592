use thiserror::Error;

/// Errors shared by the solvers and graph constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("input graph is not chordal")]
    NonChordalInput,

    /// The solver would need more than `2^m` colors. Signals that `m` is
    /// below the termination threshold for this instance.
    #[error("more than 2^{m} colors needed")]
    ColorsExhausted { m: u32 },

    /// Estimated work exceeds the configured cap. Reported, never silently
    /// truncated; lower `m`, `n`, or raise the budget.
    #[error("estimated work {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    /// Two vertices that cannot be intervened on share an edge, so no
    /// separating system has finite cost.
    #[error("infinite-weight vertices {u} and {v} are adjacent; no finite-cost design exists")]
    InfeasibleInfiniteCosts { u: usize, v: usize },

    #[error("coloring is not proper: adjacent vertices {u} and {v} share a color")]
    ImproperColoring { u: usize, v: usize },

    #[error("vertex id {id} out of range (n = {n})")]
    UnknownVertex { id: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, SolveError>;
