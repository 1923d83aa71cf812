//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible in the cyclotomic field")]
    NotInvertible,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("map is not a homomorphism")]
    NotAHomomorphism,
    #[error("map is not bijective")]
    NotBijective,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("group order {actual} exceeds the supported bound {limit} for this operation")]
    SizeBound { limit: usize, actual: usize },
    #[error("group mismatch: {0}")]
    Mismatch(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("table shape does not match the group")]
    ShapeMismatch,
    #[error("cocycles live on different groups")]
    GroupMismatch,
    #[error("table is not a normalized 3-cocycle: {0}")]
    InvalidCocycle(String),
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("map is not an automorphism")]
    NotAnAutomorphism,
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DoubleError {
    #[error("elements belong to different parent doubles")]
    ParentMismatch,
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("matrix dimensions do not match the doubles: {0}")]
    DimensionMismatch(String),
    #[error("map is not an isomorphism")]
    NotAnIsomorphism,
    #[error(transparent)]
    Double(#[from] DoubleError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComponentsError {
    #[error("image of the group-like part at x={0} is not a pure tensor (rank > 1)")]
    NotPureTensor(String),
    #[error("coefficient support of the Hopf part is not of subgroup-pair shape: {0}")]
    BadSupport(String),
    #[error("scaled coefficient at ({0}, {1}) is not a root of unity")]
    NotRootOfUnity(String, String),
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("subgroups have different orders")]
    OrderMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("component is not recognizable as a map: {0}")]
    RecognitionFailure(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("closure exceeded the bound of {0} elements")]
    ClosureBound(usize),
    #[error(transparent)]
    Components(#[from] ComponentsError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}
