use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("both inputs are constant in `{0}`")]
    ConstantInputs(String),
    #[error("square root of a negative rational")]
    NegativeSqrt,
    #[error("divisor classes live on different surfaces ({0} vs {1})")]
    SurfaceMismatch(String, String),
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
    #[error("unsupported parameter for {surface}: {detail}")]
    UnsupportedParameter { surface: String, detail: String },
    #[error("blowup of `{0}` is not in the catalogue")]
    UnsupportedBlowup(String),
    #[error("class is not pseudo-effective")]
    NotPseudoEffective,
    #[error("singular Gram system on negative support (catalogue bug)")]
    SingularGram,
    #[error("class is not big")]
    NotBig,
    #[error("class is zero")]
    ZeroClass,
    #[error("non-proper intersection: common component through the point")]
    NonProperIntersection,
    #[error("polynomial is not homogeneous{0}")]
    NotHomogeneous(String),
    #[error("no generic coordinate change found after {0} attempts")]
    GenericityFailure(usize),
    #[error("point lies on the divisor")]
    PointOnDivisor,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            msg: msg.into(),
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors that report a violated mathematical hypothesis rather
    /// than malformed input or a bug.
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(
            self,
            Error::Hypothesis(_)
                | Error::NotPseudoEffective
                | Error::NotBig
                | Error::ZeroClass
                | Error::NonProperIntersection
                | Error::PointOnDivisor
                | Error::NegativeSqrt
                | Error::ConstantInputs(_)
        )
    }
}
