use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("infeasible: vertex {vertex} is isolated, no {variant} dominating set exists")]
    Infeasible { variant: &'static str, vertex: usize },
    #[error("certificate width {cert} does not match graph order {graph}")]
    WidthMismatch { cert: usize, graph: usize },
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("unknown bound id: {0}")]
    UnknownBound(String),
    #[error("missing exact value required by {bound}: {value}")]
    MissingValue { bound: String, value: &'static str },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
