use thiserror::Error;

/// Errors surfaced by data-driven operations. Structural misuse
/// (mismatched signatures or scalar backends inside library code) panics
/// instead, since it is a programming error rather than an input condition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("element is not invertible")]
    NotInvertible,

    #[error("dilation factor must be a positive square of a rational in exact mode")]
    NotASquare,

    #[error("element is not a paravector")]
    NotParavector,

    #[error("matrix lies outside the paravector image")]
    OutsideParavectorImage,

    #[error("element lies outside the mapped subalgebra")]
    OutsideSubalgebra,

    #[error("point maps to infinity (zero conformal factor)")]
    AtInfinity,

    #[error("element is not unit: g * conj(g) != 1")]
    NotUnit,

    #[error("spinor must be nonzero")]
    ZeroSpinor,

    #[error("spinor is not pure")]
    NotPure,

    #[error("wrong chirality for this operation")]
    WrongChirality,

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
