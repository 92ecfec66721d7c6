//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the invariant computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameters violate `R1 > 0`, `R2 > 0` or `0 <= t <= 1`.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// The coupling lies outside the open focus-focus interval.
    #[error("t = {t} is outside the focus-focus interval ]{t_minus}, {t_plus}[")]
    OutOfFocusFocusRange { t: f64, t_minus: f64, t_plus: f64 },

    /// Elliptic modulus outside `[0, 1)`.
    #[error("elliptic modulus k^2 = {0} is outside [0, 1)")]
    ModulusOutOfRange(f64),

    /// Characteristic outside both circular regimes.
    #[error("characteristic n = {n} is not circular for k^2 = {k2}")]
    RegimeViolation { n: f64, k2: f64 },

    /// A point of the reduced phase space where `B(p2) < 0`.
    #[error("p2 = {0} is outside the physical region")]
    OutsidePhysicalRegion(f64),

    /// The reduced cubic has a pair of complex roots.
    #[error("the reduced cubic has complex roots at (l, h) = ({l}, {h})")]
    ComplexRoots { l: f64, h: f64 },

    /// The level lies on a separatrix of the reduced flow.
    #[error("(l, h) = ({l}, {h}) lies on a separatrix")]
    OnSeparatrix { l: f64, h: f64 },

    /// The level is the focus-focus value itself.
    #[error("the focus-focus fibre is singular")]
    SingularFibre,

    /// Two roots bounding a cycle coincide.
    #[error("degenerate cycle: root gap {0:e}")]
    DegenerateCycle(f64),

    /// Quadrature did not reach its tolerance.
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    /// A logarithmic series evaluated at the origin.
    #[error("series with logarithmic terms evaluated at the origin")]
    OriginSingular,

    /// Least-squares design matrix too badly conditioned.
    #[error("ill-conditioned fit: condition number {0:e}")]
    IllConditionedFit(f64),

    /// Series inversion with a vanishing linear coefficient.
    #[error("series has no invertible linear part")]
    NonInvertibleLinearPart,

    /// No polygon representative matches the sampled momentum image.
    #[error("no polygon representative with k in [{lo}, {hi}] matches the sampled image")]
    NoMatchingPolygon { lo: i32, hi: i32 },

    /// Malformed coefficient data.
    #[error("coefficient data: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameters(_)
            | Error::OutOfFocusFocusRange { .. }
            | Error::ModulusOutOfRange(_)
            | Error::RegimeViolation { .. }
            | Error::OutsidePhysicalRegion(_)
            | Error::OnSeparatrix { .. }
            | Error::SingularFibre
            | Error::OriginSingular => 2,
            _ => 3,
        }
    }
}
