use std::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug)]
pub enum Error {
    /// Structurally invalid input (bad ids, bad weights, unparsable lines).
    MalformedInput(String),
    /// A demand whose bound is below the shortest-path distance, or whose
    /// target is unreachable. Carries the offending pair.
    InfeasibleDemand {
        s: usize,
        t: usize,
        dist: Option<u64>,
        shortest: Option<u64>,
    },
    /// A solution edge that is not a candidate (closure \ input) edge.
    ForeignEdge { u: usize, v: usize },
    /// An exhaustive oracle was asked to run above its configured cap.
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    /// No path satisfies the (length, hop) budgets.
    NoFeasiblePath,
    /// A constraint-generation loop failed to settle within its cap.
    IterationLimit { what: &'static str, limit: usize },
    /// Exact arithmetic gave up (should not happen with big rationals).
    NumericalFailure(String),
    /// Hopbound-2 rounding invoked with beta != 2.
    WrongHopbound { expected: usize, actual: usize },
    /// Min-Rep reduction invoked with beta < 3.
    BadHopbound { min: usize, actual: usize },
    /// A claimed REP-cover that leaves some superedge uncovered.
    InvalidCover(String),
    /// A shortcut edge outside the canonical form where one was required.
    NotCanonical { u: usize, v: usize },
    /// A junction tree violating the arborescence/layer discipline.
    MalformedTree(String),
    /// No junction tree settles even a single demand.
    NoTree,
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedInput(msg) => write!(f, "malformed input: {msg}"),
            Error::InfeasibleDemand { s, t, dist, shortest } => {
                write!(f, "infeasible demand ({s},{t}): bound {dist:?}, shortest {shortest:?}")
            }
            Error::ForeignEdge { u, v } => write!(f, "edge ({u},{v}) is not a candidate edge"),
            Error::CapExceeded { what, limit, actual } => {
                write!(f, "{what} cap exceeded: {actual} > {limit}")
            }
            Error::NoFeasiblePath => write!(f, "no path satisfies the budgets"),
            Error::IterationLimit { what, limit } => {
                write!(f, "{what} did not converge within {limit} iterations")
            }
            Error::NumericalFailure(msg) => write!(f, "numerical failure: {msg}"),
            Error::WrongHopbound { expected, actual } => {
                write!(f, "hopbound must be {expected}, got {actual}")
            }
            Error::BadHopbound { min, actual } => {
                write!(f, "hopbound must be at least {min}, got {actual}")
            }
            Error::InvalidCover(msg) => write!(f, "invalid REP-cover: {msg}"),
            Error::NotCanonical { u, v } => write!(f, "shortcut edge ({u},{v}) is not canonical"),
            Error::MalformedTree(msg) => write!(f, "malformed junction tree: {msg}"),
            Error::NoTree => write!(f, "no junction tree settles any demand"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
