use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The input document does not match the graph schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// The document parsed but describes an invalid measured weighted graph.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// No finite curvature value was found inside the expanded bracket.
    #[error("no finite curvature at vertex `{vertex}`: {reason}")]
    NoFiniteCurvature { vertex: String, reason: String },

    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The ground state eigenvector is not strictly positive.
    #[error("Perron-Frobenius failure: {0}")]
    Perron(String),

    /// Exhaustive enumeration was requested on a graph with too many vertices.
    #[error("graph too large: {vertices} vertices (limit {limit})")]
    TooLarge { vertices: usize, limit: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Input or validation problems, as opposed to numerical ones.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Schema(_)
                | Error::Invariant(_)
                | Error::UnknownVertex(_)
                | Error::Domain(_)
                | Error::TooLarge { .. }
                | Error::Io(_)
        )
    }

    /// Short machine-readable tag used in CLI error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Schema(_) => "schema",
            Error::Invariant(_) => "invariant",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::Domain(_) => "domain",
            Error::NoFiniteCurvature { .. } => "no_finite_curvature",
            Error::Numerical(_) => "numerical",
            Error::Perron(_) => "perron",
            Error::TooLarge { .. } => "too_large",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
