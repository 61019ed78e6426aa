use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// Variants fall into two families which the CLI maps to different exit
/// codes: malformed input (`Parse`, `InvalidCharacteristic`, `NotOnCurve`,
/// ...) and mathematical hypotheses that the given data violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("division by zero in expression")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("characteristic {0} is not supported (need 0 or a prime p > 3)")]
    InvalidCharacteristic(u64),
    #[error("factorization of the zero polynomial")]
    FactorZero,
    #[error("cover map is constant")]
    ConstantCover,
    #[error("singular Weierstrass model (discriminant is zero)")]
    SingularModel,
    #[error("expected a monic cubic in x, got {0}")]
    NotMonicCubic(String),
    #[error("point not on curve: {0}")]
    NotOnCurve(String),
    #[error("operation requires a short Weierstrass model y^2 = x^3 + a4*x + a6")]
    NotShort,
    #[error("operation requires characteristic p > 3")]
    RequiresPositiveCharacteristic,
    #[error("operation requires characteristic 0")]
    RequiresCharacteristicZero,
    #[error("the zero section has no divisor")]
    ZeroSection,
    #[error("inconsistent valuations: {0}")]
    Inconsistent(String),
    #[error("intersection with the zero section of the zero point")]
    PointIsZero,
    #[error("additive reduction at {0}: the intersection rule is only used at semistable places")]
    AdditivePlace(String),
    #[error("function has a pole at the point at infinity O")]
    PoleAtInfinity,
    #[error("function has a pole at the given point")]
    PoleAtPoint,
    #[error("lambda formula a4/(18 a6) dj/j is inapplicable: {0}")]
    LambdaInapplicable(String),
    #[error("j-invariant is a p-th power (dj = 0); the descent map is undefined")]
    JIsPthPower,
    #[error("curve is isotrivial (j constant)")]
    Isotrivial,
    #[error("semistable reduction required; additive fiber of type {kodaira} at {place}")]
    NotSemistable { place: String, kodaira: String },
    #[error("p divides the component group order {m} at {place}")]
    ComponentOrderDivisibleByP { place: String, m: u64 },
    #[error("component order of the point at {place} not determined within n <= {n_max}")]
    ComponentOrderUndetermined { place: String, n_max: u64 },
    #[error("no Picard-Fuchs operator found: {0}")]
    PicardFuchsNotFound(String),
    #[error("derivation is zero")]
    ZeroDerivation,
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// True for errors caused by malformed or inconsistent input, as
    /// opposed to a mathematical hypothesis the data fails.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::DivisionByZero
                | Error::UnknownVariable(_)
                | Error::InvalidCharacteristic(_)
                | Error::NotMonicCubic(_)
                | Error::NotOnCurve(_)
                | Error::ConstantCover
                | Error::SingularModel
                | Error::Input(_)
        )
    }
}
