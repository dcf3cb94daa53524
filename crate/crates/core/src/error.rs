use thiserror::Error;

use crate::surface::{Side, SurfaceType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 0..{degree}: {images:?}")]
    NotAPermutation { images: Vec<usize>, degree: usize },

    #[error("permutations must have degree at least 1")]
    EmptyPermutation,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("face index {index} out of range for degree {degree}")]
    FaceOutOfRange { index: usize, degree: usize },

    #[error("degree-{0} permutations have no faces")]
    NoFaces(usize),

    #[error("side must be 1 or 2, got {0}")]
    InvalidSide(u8),

    #[error("surface {surface} has too few boundary components for side {side}")]
    TooFewBoundaries { surface: SurfaceType, side: Side },

    #[error("genus deficit: {perm} on side {side} is not realizable at genus {genus}")]
    GenusDeficit {
        perm: String,
        side: Side,
        genus: u32,
    },

    #[error("gluing {op} is undefined on {surface}")]
    GluingUndefined { op: String, surface: SurfaceType },

    #[error("ambient genus must be at least {required}, got {genus}")]
    GenusTooSmall { genus: u32, required: u32 },

    #[error("chain complex has no boundary matrix at degree {0}")]
    MissingDegree(usize),

    #[error("matrix index ({row}, {col}) out of range for {rows}x{cols}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("malformed matrix file: {0}")]
    MalformedMatrix(String),

    #[error("gluing pair ({l}, {m}) is not one of (1,0), (0,1), (1,-1)")]
    InvalidGluingPair { l: i32, m: i32 },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
