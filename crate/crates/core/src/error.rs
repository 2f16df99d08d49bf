use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text or JSON that could not be read as the expected value.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    WrongSize { expected: usize, rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix has determinant {det}, expected {expected}")]
    Determinant { det: String, expected: String },

    #[error("matrix is not in {0}")]
    NotMember(String),

    #[error("element has finite order {0}")]
    FiniteOrder(u32),

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("relator {index} evaluates to a non-identity matrix")]
    RelatorNotIdentity { index: usize },

    #[error("no generator without eigenvalue 1 and the joint system is underdetermined")]
    Underdetermined,

    #[error("malformed window: {0}")]
    MalformedWindow(String),

    #[error("matrix lies in Bruhat cell {found}, expected {expected}")]
    WrongCell { found: String, expected: String },

    #[error("outside the supported case: {0}")]
    OutOfCase(String),

    #[error("invalid descriptor: {0}")]
    Descriptor(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    /// Malformed input as opposed to a well-formed input that violates a
    /// mathematical precondition. The CLI maps these to different exit codes.
    pub fn is_malformed(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Shape(_)
                | Error::UnknownGenerator(_)
                | Error::MalformedWindow(_)
                | Error::Descriptor(_)
                | Error::Invalid(_)
        )
    }
}
