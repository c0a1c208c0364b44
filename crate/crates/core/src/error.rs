use thiserror::Error;

/// Errors raised by parsers, constructors and solvers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid step graphon: {0}")]
    InvalidGraphon(String),

    #[error("part index {index} out of range for {parts} parts")]
    IndexOutOfRange { index: usize, parts: usize },

    #[error("{what} has size {size}, above the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graph admits no proper coloring with exactly {0} colors")]
    NoColoring(usize),

    #[error("pattern graph has no edges")]
    Edgeless,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("linear program certificate check failed: {0}")]
    Certificate(String),

    #[error("tiling number {til} differs from fractional cover number {fcov}")]
    DualityDiscrepancy { til: String, fcov: String },
}

pub type Result<T> = std::result::Result<T, Error>;
