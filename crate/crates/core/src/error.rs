use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid instance: {0}")]
    Instance(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("ground set of size {size} exceeds the brute-force cap of {cap}")]
    OracleCap { size: usize, cap: usize },

    #[error("solution sink failed after {emitted} solutions: {source}")]
    Sink {
        emitted: u64,
        #[source]
        source: Box<dyn std::error::Error + Send + Sync>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
