use thiserror::Error;

/// Errors raised when constructing or parsing the crate's objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {u}-{v} has zero multiplicity")]
    ZeroMultiplicity { u: usize, v: usize },
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("list size {h} at vertex {vertex} is outside 0..={max}")]
    ListSizeOutOfRange { vertex: usize, h: usize, max: usize },
    #[error("list-size function has {got} entries, graph has {expected} vertices")]
    ListSizeLength { expected: usize, got: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph must be simple")]
    NotSimple,
    #[error("special set undefined: every pendent edge-block is a cut edge")]
    UndefinedSpecialSet,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: {
                let full = e.to_string();
                let suffix = format!(" at line {} column {}", e.line(), e.column());
                full.strip_suffix(&suffix)
                    .map(str::to_owned)
                    .unwrap_or(full)
            },
        }
    }
}
