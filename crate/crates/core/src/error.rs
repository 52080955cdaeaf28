use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("lattice is not even")]
    OddLattice,
    #[error("discriminant group is not 2-elementary")]
    NotTwoElementary,
    #[error("basis columns are linearly dependent")]
    DependentBasis,
    #[error("matrix is not an isometry of the lattice")]
    NotIsometry,
    #[error("map is not an anti-isometry of discriminant forms")]
    NotAntiIsometry,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("unknown lattice kind `{0}`")]
    UnknownKind(String),
    #[error("vector is not a root (norm -2, orthogonal to k)")]
    NotRoot,
    #[error("class is not one of the 56 exceptional classes")]
    NotExceptional,
    #[error("not a bijection on {degree} points")]
    NotBijection { degree: usize },
    #[error("permutation is not an element of the group")]
    NotMember,
    #[error("discriminant group rank {rank} exceeds the search limit {limit}")]
    RankTooLarge { rank: usize, limit: usize },
    #[error("graph has {n} vertices, above the limit {limit}")]
    GraphTooLarge { n: usize, limit: usize },
    #[error("isometry does not square to minus the identity")]
    NotComplexStructure,
    #[error("basis does not generate the lattice over Z[i] (index {index})")]
    NotGenerating { index: String },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("internal consistency check failed: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
