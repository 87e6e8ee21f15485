use thiserror::Error;

use crate::symcore::Basis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal {0:?}")]
    Rational(String),
    #[error("invalid partition {0:?}: {1}")]
    Partition(String, String),
    #[error("unknown series name {0:?}")]
    SeriesName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("basis mismatch: {0:?} vs {1:?}")]
    BasisMismatch(Basis, Basis),
    #[error("expected a function in the {expected:?} basis, found {found:?}")]
    WrongBasis { expected: Basis, found: Basis },
    #[error("not divisible by e1")]
    NotDivisible,
    #[error("coefficient table overflow at degree {0}")]
    TableOverflow(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation mismatch: {0} vs {1}")]
    TruncMismatch(usize, usize),
    #[error("order {order} is beyond the truncation {trunc}")]
    OrderBeyondTruncation { order: usize, trunc: usize },
    #[error("coefficient at order {order} still carries 1/e1^{power}")]
    NonIntegralCoefficient { order: usize, power: u32 },
    #[error("constant term is not a unit multiple of a power of e1")]
    NonInvertibleConstantTerm,
    #[error("specialization needs an e1-free coefficient, found 1/e1^{0}")]
    LocalizedSpecialization(u32),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("inner partition {inner} does not fit inside outer partition {outer}")]
    NotContained { outer: String, inner: String },
    #[error("type has size {type_size} but the shape has {shape_size} boxes")]
    SizeMismatch { type_size: u32, shape_size: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("degree mismatch: {lhs} != {rhs} ({detail})")]
    DegreeMismatch { lhs: i64, rhs: i64, detail: String },
    #[error("genus {genus} exceeds the configured limit {limit} for {space}")]
    GenusOutOfRange {
        space: &'static str,
        genus: u32,
        limit: u32,
    },
    #[error("invalid genus pair g={g}, k={k}: need 1 <= k <= g")]
    InvalidGenus { g: u32, k: u32 },
    #[error("negative powers of beta survived: {0}")]
    ResidualBetaDenominator(String),
    #[error("the printed formula must be requested explicitly")]
    AsPrintedNotRequested,
    #[error("invalid index {0}")]
    InvalidIndex(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Mod2Error {
    #[error("pairing {0} is not an integer; parity undefined")]
    InternalParityFault(String),
    #[error("coefficient {0} has an even denominator")]
    EvenDenominator(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error(transparent)]
    Pairing(#[from] PairingError),
}
