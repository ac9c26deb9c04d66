use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty text")]
    EmptyText,

    #[error("symbol {symbol} at position {pos} outside alphabet [1..{sigma}]")]
    SymbolOutOfRange { pos: usize, symbol: u32, sigma: u32 },

    #[error("sentinel must occur exactly once, as the last and smallest symbol")]
    BadSentinel,

    #[error("position {pos} outside [1..{n}]")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("attractor positions must be strictly increasing (at {pos})")]
    UnsortedPositions { pos: usize },

    #[error("attractor was built for length {expected}, text has length {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("k = {k} outside [1..{n}]")]
    BadK { k: usize, n: usize },

    #[error("not a valid attractor: {0}")]
    InvalidAttractor(String),

    #[error("phrase {index} references text before it is defined")]
    ForwardReference { index: usize },

    #[error("malformed BWT: {0}")]
    MalformedBwt(String),

    #[error("undecodable macro scheme: position {pos} never resolved")]
    Undecodable { pos: usize },

    #[error("macro scheme assigns conflicting symbols at position {pos}")]
    ConflictingAssignment { pos: usize },

    #[error("malformed macro scheme: {0}")]
    MalformedScheme(String),

    #[error("collage system has a cycle through rule {id}")]
    CollageCycle { id: u32 },

    #[error("collage rule {id}: {reason}")]
    BadRule { id: u32, reason: String },

    #[error("bidirectional parse does not terminate (position {pos})")]
    NonTerminating { pos: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("universe element {element} cannot be covered")]
    Uncoverable { element: u32 },

    #[error("invalid set-cover instance: {0}")]
    BadInstance(String),

    #[error("not a set cover: element {element} uncovered")]
    NotACover { element: u32 },

    #[error("invalid graph: {0}")]
    BadGraph(String),

    #[error("query [{pos}, +{len}) outside text of length {n}")]
    BadQuery { pos: usize, len: usize, n: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("index format: {0}")]
    Format(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
