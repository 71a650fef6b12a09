use thiserror::Error;

/// Errors raised when constructing or querying the combinatorial objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least {min}, got {n}")]
    RankTooSmall { n: usize, min: usize },

    #[error("polygon size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("({a},{b}) is not a diagonal of the {m}-gon")]
    InvalidDiagonal { m: usize, a: usize, b: usize },

    #[error("expected {expected} diagonals, got {found}")]
    DiagonalCount { expected: usize, found: usize },

    #[error("diagonal ({a},{b}) appears twice")]
    DuplicateDiagonal { a: usize, b: usize },

    #[error("diagonals ({0},{1}) and ({2},{3}) cross")]
    Crossing(usize, usize, usize, usize),

    #[error("index {j} outside 1..={n}")]
    IndexOutOfRange { j: usize, n: usize },

    #[error("invalid up-set: {0}")]
    InvalidOrientation(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("orientation with up-set {{{up}}} is not symmetric")]
    NotSymmetric { up: String },

    #[error("central symmetry needs an even polygon, got a {m}-gon")]
    OddPolygon { m: usize },

    #[error("empty point set")]
    EmptyPointSet,

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("set of {len} triangulations is not closed under the dihedral action")]
    NotAnOrbit { len: usize },

    #[error("labeling inconsistency: {0}")]
    Labeling(String),

    #[error("export failed: {0}")]
    Export(String),
}

pub type Result<T> = std::result::Result<T, Error>;
