use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("simplex contains duplicate vertex {0}")]
    DuplicateVertex(u32),
    #[error("a stacked ball needs at least one simplex")]
    EmptyBall,
    #[error("simplex {index} has {found} vertices, expected {expected}")]
    WrongSimplexSize {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("simplex {index} shares no codimension-one face with the earlier simplices")]
    AttachmentNotFound { index: usize },
    #[error("simplex {index} is glued along {face}, which is not a free face")]
    FaceNotFree { index: usize, face: Simplex },
    #[error("simplex {index} introduces {new_vertices} new vertices, expected exactly one")]
    NoNewVertex { index: usize, new_vertices: usize },
    #[error("simplex index {index} out of range for a ball with {len} simplices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("the dual tree is not a path")]
    NotLinear,
    #[error("{len} simplices starting at index {start} do not form a consecutive run of the path")]
    NotConsecutive { start: usize, len: usize },
    #[error("{pinned} pinned vertices do not fit in a facet of size {facet_size}")]
    PinnedTooLarge { pinned: usize, facet_size: usize },
    #[error("pinned vertex {0} is not in the first simplex of the block")]
    PinnedOutsideSimplex(u32),
    #[error("{0} is not a facet of the sphere")]
    FacetNotPresent(Simplex),
    #[error("{0} is not a boundary facet of the ball")]
    NotABoundaryFacet(Simplex),
    #[error("{0} is not a boundary facet of an end simplex of the path")]
    NotEndFacet(Simplex),
    #[error("cannot glue balls of dimension {left} and {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("expected dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("hypergraph has an empty edge")]
    EmptyEdge,
    #[error("edge vertex {0} is not in the vertex set")]
    UnknownVertex(u32),
    #[error("search exceeded the node limit of {limit}")]
    NodeLimit { limit: u64 },
    #[error("ball with {n} vertices is too small to split (need more than 10)")]
    TooSmall { n: usize },
    #[error("invalid block input: {0}")]
    InvalidBlock(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
