use thiserror::Error;

use crate::weight::Weight;

/// Errors raised by the library. Every variant has a stable machine name
/// (see [`Error::name`]) used by the command line error reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system family `{0}` (expected one of A, B, C, D)")]
    UnsupportedFamily(String),
    #[error("rank {rank} is too small for type {family} (minimum {min})")]
    RankTooSmall {
        family: char,
        rank: usize,
        min: usize,
    },
    #[error("weight {0} has the wrong number of coordinates (expected {1})")]
    DimensionMismatch(Weight, usize),
    #[error("{0} is not a root")]
    NotARoot(Weight),
    #[error("{0} is not a positive root")]
    NotAPositiveRoot(Weight),
    #[error("weight is not integral: {0}")]
    NonIntegralWeight(String),
    #[error("reversal degree {degree} is smaller than the polynomial degree {actual}")]
    DegreeTooSmall { degree: usize, actual: usize },
    #[error("{0} is not in the Weyl group orbit of the base simple root {1}")]
    NotInOrbit(Weight, usize),
    #[error("weights {0} and {1} lie in different cosets of the root lattice")]
    IncomparableLattice(Weight, Weight),
    #[error("{0} is not a dominant weight")]
    NotDominant(Weight),
    #[error("spin weight {0} is not supported by the vector-representation crystal model")]
    SpinWeightUnsupported(Weight),
    #[error("partition {0} has more rows than the alphabet allows ({1})")]
    TooManyRows(Weight, usize),
    #[error("crystal exceeded the vertex budget of {0}")]
    BudgetExceeded(usize),
    #[error("tableau is already a single row")]
    AlreadyRowTableau,
    #[error("tableau content {0:?} is not a partition")]
    NonDominantContent(Vec<usize>),
    #[error("cyclage did not reach the row tableau within {0} steps")]
    CyclageDiverged(usize),
    #[error("sizes differ: |lambda| = {0}, |mu| = {1}")]
    SizeMismatch(usize, usize),
    #[error("enumeration bound exceeded: height {height} > bound {bound}")]
    BoundExceeded { height: i64, bound: i64 },
    #[error("operation requires a type A root system")]
    NotTypeA,
    #[error("the modified crystal graph does not give an atomic decomposition")]
    NotAtomic,
    #[error("unknown export format `{0}`")]
    UnknownFormat(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("cocovers outside the W-orbit of the base root: {0}")]
    StableRangeViolation(String),
    #[error("minimal conjugators disagree on {0}")]
    ConjugatorDisagreement(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

impl Error {
    /// Stable identifier of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnsupportedFamily(_) => "UnsupportedFamily",
            Error::RankTooSmall { .. } => "RankTooSmall",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::NotARoot(_) => "NotARoot",
            Error::NotAPositiveRoot(_) => "NotAPositiveRoot",
            Error::NonIntegralWeight(_) => "NonIntegralWeight",
            Error::DegreeTooSmall { .. } => "DegreeTooSmall",
            Error::NotInOrbit(..) => "NotInOrbit",
            Error::IncomparableLattice(..) => "IncomparableLattice",
            Error::NotDominant(_) => "NotDominant",
            Error::SpinWeightUnsupported(_) => "SpinWeightUnsupported",
            Error::TooManyRows(..) => "TooManyRows",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::AlreadyRowTableau => "AlreadyRowTableau",
            Error::NonDominantContent(_) => "NonDominantContent",
            Error::CyclageDiverged(_) => "CyclageDiverged",
            Error::SizeMismatch(..) => "SizeMismatch",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NotTypeA => "NotTypeA",
            Error::NotAtomic => "NotAtomic",
            Error::UnknownFormat(_) => "UnknownFormat",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::StableRangeViolation(_) => "StableRangeViolation",
            Error::ConjugatorDisagreement(_) => "ConjugatorDisagreement",
            Error::InvalidTableau(_) => "InvalidTableau",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
