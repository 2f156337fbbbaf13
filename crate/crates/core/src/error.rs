use thiserror::Error;

/// Every failure the library can report.
///
/// The CLI maps these onto process exit codes with [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer factorization budget exhausted while factoring {0}")]
    FactorBudgetExceeded(String),
    #[error("point search budget exhausted (height {0})")]
    SearchBudgetExceeded(u64),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expected a polynomial of degree {expected}, got degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("discriminant class is {0}, expected -3 modulo squares")]
    DiscriminantClassMismatch(String),
    #[error("impossible Galois class: {0}")]
    ImpossibleClass(String),
    #[error("could not produce an even quartic model after {0} attempts")]
    EvenizeDegenerate(u32),
    #[error("singular curve: 4A^3 + 27B^2 = 0")]
    SingularCurve,
    #[error("degenerate parameter {0}")]
    DegenerateParameter(String),
    #[error("embedding problem is obstructed")]
    Obstructed,
    #[error("form vanishes at the given point")]
    AnisotropyViolated,
    #[error("unrecognized group of order {0}")]
    UnrecognizedGroup(usize),
    #[error("division by a series with zero leading part")]
    DivideByZeroSeries,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::FactorBudgetExceeded(_) | Error::SearchBudgetExceeded(_) => 2,
            Error::Obstructed => 3,
            Error::Unsupported(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
