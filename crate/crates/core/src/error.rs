use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::tileset::Prototile;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("label table line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("label table has no complete entry for {0}")]
    Missing(Prototile),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("supertile rank must be at least 1")]
    InvalidRank,
    #[error("no tile fits cross cell [{row},{col}]")]
    CrossUnsolvable { row: usize, col: usize },
    #[error("{candidates} tiles fit cross cell [{row},{col}]")]
    CrossAmbiguous { row: usize, col: usize, candidates: usize },
}

#[derive(Debug, Error)]
pub enum GridError {
    #[error("grid dimensions must be positive, got {width}x{height}")]
    EmptyGrid { width: usize, height: usize },
    #[error("grid declares {expected} cells but holds {found}")]
    CellCount { expected: usize, found: usize },
    #[error("invalid cell {index}: {message}")]
    BadCell { index: usize, message: String },
    #[error("ascii grid line {line}: {message}")]
    Ascii { line: usize, message: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("block side {n} exceeds supertile side {side} at rank {rank}")]
    BlockTooLarge { n: usize, rank: u32, side: usize },
    #[error("block side must be at least 1")]
    EmptyBlock,
    #[error("restricted position [{row},{col}] is outside 1..={max}")]
    BadPosition { row: usize, col: usize, max: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Cache(#[from] CacheError),
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("corrupt pattern-set file at byte {offset}: {message}")]
    Corrupt { offset: u64, message: String },
    #[error("pattern-set format version {found} is not supported (expected {supported})")]
    VersionMismatch { found: u16, supported: u16 },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct DomainError(pub String);

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("render style field `{0}` must be strictly positive")]
    NonPositive(&'static str),
}
