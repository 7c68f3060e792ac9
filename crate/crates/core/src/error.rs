use thiserror::Error;

use crate::pointlab::ProjPoint;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("not ACM-consistent: {0}")]
    NotAcmConsistent(String),

    #[error("inconsistent pair: {0}")]
    InconsistentPair(String),

    #[error("invalid liaison degree: entry {index} would be {value}, below the ambient minimum {minimum}")]
    InvalidLiaisonDegree {
        index: usize,
        value: i64,
        minimum: i64,
    },

    #[error("non-integral bound {0}; parenthesization bug")]
    NonIntegralBound(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus mismatch: expected p={expected}, found p={found}")]
    ModulusMismatch { expected: u64, found: u64 },

    #[error("point {0} does not lie on the curve")]
    NotOnCurve(ProjPoint),

    #[error("duplicate point {0}")]
    DuplicatePoint(ProjPoint),

    #[error("non-stabilizing: Hilbert function did not stabilize within degree {window}")]
    NonStabilizing { window: i64 },

    #[error("insufficient rational points: found {found}, requested {requested}; raise p")]
    InsufficientPoints { found: usize, requested: usize },

    #[error("improper intersection: the curves share a component")]
    ImproperIntersection,

    #[error("non-transverse or irrational intersection: {found} rational simple points, expected {expected}; re-randomize H")]
    NonTransverse { found: usize, expected: usize },

    #[error("singular-point collision at {0}")]
    SingularCollision(ProjPoint),

    #[error("rational scan infeasible for p={0}; supply a candidate pool")]
    ScanInfeasible(u64),

    #[error("hypothesis fails: phi_Y({degree}) = {phi_y} but phi_delta({degree}) = {phi_delta}")]
    HypothesisFails {
        degree: i64,
        phi_y: u64,
        phi_delta: u64,
    },

    #[error("not maximal: dim = {dim}, r(alpha) = {bound}")]
    NotMaximal { dim: i64, bound: i64 },

    #[error("maximal system without the expected certificate: {0}")]
    CertificateMissing(String),

    #[error("inadmissible addition: {0}")]
    InadmissibleAddition(String),

    #[error("inadmissible target: {0}")]
    InadmissibleTarget(String),

    #[error("realization search exhausted after {attempts} attempts; try a larger p or another seed")]
    RealizationExhausted { attempts: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
