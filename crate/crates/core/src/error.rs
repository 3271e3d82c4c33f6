use thiserror::Error;

/// Errors raised by the knotorder library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Seifert matrix: {0}")]
    MalformedSeifertMatrix(String),

    #[error("twist parameter must be at least 1, got {0}")]
    InvalidTwistParameter(i64),

    #[error("{p} does not divide the order of the branched-cover homology")]
    NoPrimaryPart { p: u64 },

    #[error("{p}-primary part is not cyclic of order {p} ({p}^2 divides the determinant)")]
    NonCyclicPrimaryPart { p: u64 },

    #[error("character is defined modulo {character} but the linking form modulo {form}")]
    PrimeMismatch { form: u64, character: u64 },

    #[error("{0} is not an odd prime")]
    NotPrime(u64),

    #[error("group ring orders differ: Z[Z_{left}] vs Z[Z_{right}]")]
    MismatchedOrder { left: usize, right: usize },

    #[error("scalar must be a unit mod p")]
    ZeroScalar,

    #[error("relation {0} shares a factor with t^q - 1 over the rationals")]
    NotCoprimeToCyclotomic(String),

    #[error("basis vectors are linearly dependent mod {p}")]
    DependentBasis { p: u64 },

    #[error("basis is not in Gauss-Jordan normal form")]
    NotNormalized,

    #[error("{0} is not congruent to 3 mod 4")]
    PrimeNotThreeMod4(u64),

    #[error("search space {size} exceeds enumeration budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },

    #[error("knot determinants are odd, got {0}")]
    EvenDeterminant(u64),

    #[error("verdict does not assert infinite order")]
    NotInfiniteOrderVerdict,

    #[error("malformed family: {0}")]
    MalformedFamily(String),

    #[error("inconsistent knot record: {0}")]
    InconsistentRecord(String),

    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
