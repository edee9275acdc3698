use thiserror::Error;

/// Errors produced by multivector construction and the function library.
///
/// Every fallible operation reports which mathematical precondition failed
/// rather than panicking; callers can match on the variant to decide whether
/// to resample, reroute (e.g. a real scalar through `scalar_roots`), or give
/// up.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaError {
    #[error("dimension must be between 1 and 4, got {0}")]
    InvalidDim(usize),

    #[error("operands live in different dimensions ({left} vs {right})")]
    DimMismatch { left: usize, right: usize },

    #[error("expected {expected} coefficients for dimension {dim}, got {got}")]
    CoeffLength {
        dim: usize,
        expected: usize,
        got: usize,
    },

    #[error("coefficients must be finite")]
    NonFinite,

    #[error("grade {k} does not exist in dimension {dim}")]
    GradeOutOfRange { k: usize, dim: usize },

    #[error("{op} is not defined in dimension {dim}")]
    UnsupportedDim { op: &'static str, dim: usize },

    /// The amplitude |M| vanishes (relative to the input's norm), so the
    /// multivector has no inverse and no polar decomposition.
    #[error("null amplitude: the multivector is not invertible")]
    NullAmplitude,

    /// A quantity that must reduce to the scalar (or scalar + pseudoscalar)
    /// part retained a larger residual; this indicates an internal error.
    #[error("radicand has a non-scalar residual")]
    NonScalarRadicand,

    /// |F| = 0, so the direction factor F/|F| is undefined.
    #[error("the vector-plus-bivector part has zero magnitude; no direction factor exists")]
    ZeroF,

    /// |F| = 0 and the input is not a positive scalar (dims 1-2) or an
    /// invertible centre element (dim 3), so no principal logarithm exists.
    #[error("no principal logarithm: |F| = 0 and the input has no central branch")]
    ZeroFNoCentral,

    /// In dimensions 1-2 the amplitude must be real for the requested
    /// operation (exponential form, logarithm, square root, real powers).
    #[error("the amplitude is not real, which this operation requires below dimension 3")]
    NonRealAmplitude2D,

    /// A real-amplitude dim-2 multivector with a negative scalar part and a
    /// bivector-valued |F| has a trigonometric form but no exponential form.
    #[error("no exponential form: negative scalar part with hyperbolic direction factor")]
    NoExponentialForm,

    /// Square roots of real scalars are parametric families; use
    /// `scalar_roots` instead of `sqrt_mv`.
    #[error("input is a real scalar; its roots form a family, see scalar_roots")]
    RealScalarInput,

    /// The denominator of the square-root formula is zero (or, in dims 1-2,
    /// not a positive real), so the requested branch does not exist.
    #[error("square-root denominator is zero or not positive; the requested branch does not exist")]
    ZeroDenominator,

    #[error("series does not converge for this input (norm must be < 1)")]
    DivergentSeries,

    #[error("branch index is not valid for this input")]
    InvalidBranch,

    #[error("reflection axis must be a nonzero vector")]
    NonUnitVector,

    #[error("rotor must satisfy R * reversion(R) = 1")]
    NonUnitRotor,

    #[error("operand lies outside the subspace this operation acts on")]
    OutOfSubspace,

    #[error("directions must be orthonormal")]
    NonOrthonormal,

    /// `sinh_zeros` and friends need a unit direction factor with
    /// fhat * fhat = -1.
    #[error("direction factor must square to -1")]
    InvalidFhat,

    #[error("operand must lie in the even subalgebra")]
    NonEvenGrade,

    #[error("centre element must have unit modulus")]
    NonUnitCenter,

    #[error("vector operand must be nonzero")]
    ZeroVector,

    #[error("term lists must have equal length and at least one term")]
    EmptyTermList,

    #[error("unknown relation {0:?}")]
    UnknownRelation(String),
}

pub type Result<T> = std::result::Result<T, GaError>;
