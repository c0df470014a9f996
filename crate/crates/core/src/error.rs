use alloc::string::String;

/// Every failure the kernels can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation requires a field, got the integers")]
    DomainNotField,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("entry {0} is not representable in {1}")]
    NotRepresentable(String, String),
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix has non-integer entries")]
    NotIntegral,

    #[error("morphisms are not composable: {0}")]
    ObjectMismatch(String),
    #[error("word is not composable at position {0}")]
    NonComposableWord(usize),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("cyclic identities requested on a set without cyclic operators")]
    CyclicModeOnNonCyclic,
    #[error("input is not a cyclic object")]
    NotCyclic,

    #[error("truncation {0} is too small for this construction")]
    TruncationTooSmall(usize),
    #[error("degree {0} lies outside the complex")]
    RangeExceedsComplex(i64),
    #[error("boundary does not square to zero in degree {0}")]
    NotAComplex(i64),
    #[error("bicomplex differentials fail the sign rule at ({0}, {1})")]
    SignCheckFailed(i64, i64),
    #[error("map does not commute with the differentials in degree {0}")]
    NotAChainMap(i64),
    #[error("maps are not composable: {0} vs {1}")]
    BasisMismatch(usize, usize),
    #[error("simplicial modules have different truncations: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("structure constants are not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector is not a two-sided unit")]
    NoUnit,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("basis of size {needed} exceeds the budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("pipelines disagree: {0}")]
    MatrixMismatch(String),
    #[error("operation needs characteristic zero")]
    PositiveCharacteristic,

    #[error("cyclic relation fails: {0}")]
    RelationFailure(String),
    #[error("module carries no extra degeneracy")]
    NoUnitStructure,
    #[error("column window {0} is too small for degree {1}")]
    WindowTooSmall(usize, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
