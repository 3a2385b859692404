use core::fmt;

/// Errors raised by the arithmetic tower.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExactError {
    /// A rational function or substitution produced a zero denominator.
    ZeroDenominator,
    /// A variable with a negative exponent was bound to a non-invertible value.
    NonInvertibleBinding,
    /// `gaussian_reduce` saw `I` with a negative exponent.
    NegativeImaginaryExponent,
    /// Polynomial division left a nonzero remainder.
    InexactDivision,
    /// A precondition on the inputs was violated.
    Domain(&'static str),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ZeroDenominator => write!(f, "zero denominator"),
            ExactError::NonInvertibleBinding => {
                write!(f, "non-invertible value bound to a negatively-exponentiated variable")
            }
            ExactError::NegativeImaginaryExponent => {
                write!(f, "negative exponent on the imaginary unit")
            }
            ExactError::InexactDivision => write!(f, "polynomial division left a remainder"),
            ExactError::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

pub type ExactResult<T> = Result<T, ExactError>;
