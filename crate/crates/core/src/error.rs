use thiserror::Error;

use crate::weyl::Family;

/// Every failure the engine can report.
///
/// Several variants are "should never happen" signals: they mark a broken
/// invariant (length additivity, exact division, conjugation symmetry) rather
/// than bad user input, and are surfaced instead of panicking so the CLI can
/// report them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-integral exponent q^({num}/{den}) at evaluation")]
    NonIntegralExponent { num: i64, den: u32 },
    #[error("evaluation at q = 0 of a term with negative exponent")]
    ZeroBase,
    #[error("asymmetric root multiplicities: imaginary part does not cancel")]
    AsymmetricRootMultiplicities,
    #[error("not a polynomial: division is not exact")]
    NotAPolynomial,
    #[error("unsupported root order {0}; only 1, 2, 3, 4 are implemented")]
    UnsupportedRootOrder(u32),
    #[error("cannot combine cyclotomic values of orders {0} and {1}")]
    IncompatibleOrders(u32, u32),

    #[error("unsupported root system {family}{rank}")]
    UnsupportedRootSystem { family: Family, rank: usize },
    #[error("label {label} is not a node of {family}{rank}")]
    UnknownLabel { family: Family, rank: usize, label: usize },
    #[error("not a simple conjugate: w s_{0} w^-1 is not a simple reflection")]
    NotSimpleConjugate(usize),
    #[error("type pair must have distinct labels, got ({0},{0})")]
    EqualLabels(usize),

    #[error("length additivity violated: running sum {running} overshoots target {target}")]
    LengthAdditivityViolated { running: usize, target: usize },
    #[error("Luo product identity failed for orbit starting at ({0},{1})")]
    ProductIdentityFailed(usize, usize),
    #[error("shift property s_i^w_S = s_(i+m) failed at index {0}")]
    ShiftFailed(usize),
    #[error("cross-check failure: half_period gives m = {half_period}, u-sequence gives m = {u_sequence}")]
    CrossCheckFailed { half_period: usize, u_sequence: usize },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(u32, u32),
    #[error("symbol parameter k = {k} too small, need k >= {min}")]
    SymbolTooSmall { k: usize, min: usize },

    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("split parity violated for {0}")]
    SplitParityViolated(String),
    #[error("type-A balanced split has no unique solution for K = {0}")]
    AmbiguousSplit(u64),
    #[error("no closed formula in scope for family {0}")]
    NoClosedFormula(Family),
    #[error("needs concrete q")]
    NeedsConcreteQ,
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("predicted closed-walk count is not a nonnegative integer: {0}")]
    NonIntegralCount(String),

    #[error("prime fields only: {0} is not prime")]
    PrimeFieldsOnly(u64),
    #[error("oracle size out of supported range: {0}")]
    OracleSizeOutOfRange(String),
    #[error("not an edge of the 1-skeleton")]
    NotAnEdge,
    #[error("integer overflow while counting closed walks")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
