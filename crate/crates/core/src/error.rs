use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Operands carry different degree caps.
    #[error("degree cap mismatch: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    /// A construction would need coefficients beyond the degree cap.
    #[error("degree overflow: {0}")]
    DegreeOverflow(String),

    #[error("point ({re}, {im}) is outside the admissible domain: {reason}")]
    Domain { re: f64, im: f64, reason: String },

    /// A quotient in an indicator or Jacobian formula has a vanishing denominator.
    #[error("singular point ({re}, {im}): {what} vanishes")]
    Singular { re: f64, im: f64, what: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(z: num_complex::Complex64, reason: impl Into<String>) -> Self {
        Error::Domain {
            re: z.re,
            im: z.im,
            reason: reason.into(),
        }
    }

    pub(crate) fn singular(z: num_complex::Complex64, what: &'static str) -> Self {
        Error::Singular {
            re: z.re,
            im: z.im,
            what,
        }
    }

    /// True for errors that a grid scan records as a skipped point.
    pub fn is_singular(&self) -> bool {
        matches!(self, Error::Singular { .. })
    }
}
