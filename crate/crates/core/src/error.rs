use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed caller input (vertex out of range, empty sequence, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Text format violation in a graph or block-spec file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Parameter outside its admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A configured enumeration or table budget was exhausted.
    #[error("resource budget exceeded: {0}")]
    Resource(String),

    /// Block representation violates a validity clause.
    #[error("invalid block representation: {0}")]
    Blocks(#[from] BlockError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Validity clauses for block representations, one variant per way a
/// candidate can fail.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("blocks must be non-empty and pairwise disjoint, covering 0..|H|; block {block} violates this")]
    NotPartition { block: usize },

    #[error("there must be at least one non-root block")]
    NoNonRootBlock,

    #[error("block 1 must have parent 0 and parent set equal to all of block 0")]
    RootJoinMismatch,

    #[error("block {block}: parent index {parent} must satisfy 1 <= parent <= {max}")]
    ParentIndexOutOfRange { block: usize, parent: usize, max: usize },

    #[error("block {block}: parent set is not contained in block {parent}")]
    ParentSetNotInParentBlock { block: usize, parent: usize },

    #[error("block {block}: parent-set size {child} is smaller than the parent block's own parent-set size {parent}")]
    ParentSizeMonotonicity { block: usize, parent: usize, child: usize },

    #[error("block {block}: anchor position {anchor} out of range for parent block of size {size}")]
    AnchorOutOfRange { block: usize, anchor: usize, size: usize },

    #[error("block {block}: duplicate anchor position {anchor}")]
    DuplicateAnchor { block: usize, anchor: usize },

    #[error("block {block}: parent set must be non-empty")]
    EmptyParentSet { block: usize },
}
