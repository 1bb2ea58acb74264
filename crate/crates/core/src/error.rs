use serde::Serialize;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a prescribed cofactor admits no motion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NoSolutionReason {
    /// The cofactor is not a multiple of the minimal one.
    Minimality,
    /// The scaled trajectory would not be saturated.
    Saturation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("polynomial is not quadratic")]
    NotQuadratic,
    #[error("quadratic has real roots")]
    NotIrreducible,
    #[error("leading coefficient of the divisor is not invertible")]
    NonInvertibleLeadingCoefficient,
    #[error("not a motion polynomial: {0}")]
    NotAMotionPolynomial(String),
    #[error("singular Möbius transformation (αδ − βγ = 0)")]
    SingularMobius,
    #[error("vector part of the plane polynomial vanishes")]
    ZeroVectorPart,
    #[error("construction requires coefficients outside the rationals: {0}")]
    UnsupportedFieldExtension(String),
    #[error("plane polynomial is not kinematic")]
    NotKinematic,
    #[error("polynomial is not reduced")]
    NotReduced,
    #[error("coordinates are not generic: {0}")]
    GenericityFailure(String),
    #[error("dual part has no polynomial solution")]
    NoPolynomialSolution,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("no generic coordinate change found after {0} attempts")]
    GenericityExhausted(usize),
    #[error("no motion with the prescribed cofactor ({reason:?})")]
    NoSolution { reason: NoSolutionReason },
    #[error("polynomial does not divide the primal norm")]
    NotAFactor,
    #[error("factor has multiplicity other than one in the primal part")]
    MultiplicityNotOne,
    #[error("right factor does not fix the moving plane")]
    NotPlaneFixing,
    #[error("primal part has no real polynomial factor of the given kind")]
    NoRealPowerFactor,
    #[error("real factor divides the primal core")]
    NonCoprimeCore,
    #[error("plane-fixing factor has zero primal part")]
    ZeroPrimalFamily,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("could not equalize component degrees")]
    FailedToEqualize,
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Machine-readable diagnostic code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZeroPoly => "DIVISION_BY_ZERO_POLY",
            Error::BothZero => "BOTH_ZERO",
            Error::ZeroPolynomial => "ZERO_POLYNOMIAL",
            Error::NotCoprime => "NOT_COPRIME",
            Error::NotQuadratic => "NOT_QUADRATIC",
            Error::NotIrreducible => "NOT_IRREDUCIBLE",
            Error::NonInvertibleLeadingCoefficient => "NON_INVERTIBLE_LEADING_COEFFICIENT",
            Error::NotAMotionPolynomial(_) => "NOT_A_MOTION_POLYNOMIAL",
            Error::SingularMobius => "SINGULAR_MOBIUS",
            Error::ZeroVectorPart => "ZERO_VECTOR_PART",
            Error::UnsupportedFieldExtension(_) => "UNSUPPORTED_FIELD_EXTENSION",
            Error::NotKinematic => "NOT_KINEMATIC",
            Error::NotReduced => "NOT_REDUCED",
            Error::GenericityFailure(_) => "GENERICITY_FAILURE",
            Error::NoPolynomialSolution => "NO_POLYNOMIAL_SOLUTION",
            Error::PreconditionViolation(_) => "PRECONDITION_VIOLATION",
            Error::GenericityExhausted(_) => "GENERICITY_EXHAUSTED",
            Error::NoSolution { .. } => "NO_SOLUTION",
            Error::NotAFactor => "NOT_A_FACTOR",
            Error::MultiplicityNotOne => "MULTIPLICITY_NOT_ONE",
            Error::NotPlaneFixing => "NOT_PLANE_FIXING",
            Error::NoRealPowerFactor => "NO_REAL_POWER_FACTOR",
            Error::NonCoprimeCore => "NON_COPRIME_CORE",
            Error::ZeroPrimalFamily => "ZERO_PRIMAL_FAMILY",
            Error::InvariantViolation(_) => "INVARIANT_VIOLATION",
            Error::FailedToEqualize => "FAILED_TO_EQUALIZE",
            Error::Parse(_) => "PARSE_ERROR",
        }
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedFieldExtension(msg.into())
    }
}
