use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation needs a polynomial of degree >= 1")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("expected degree {expected}, got {got}")]
    WrongDegree { expected: String, got: i64 },
    #[error("polynomial is not of the shape x^5 + s*x^3 + t*x + t")]
    NotHermiteShape,
    #[error("zero discriminant")]
    ZeroDiscriminant,
    #[error("prime {0} divides the leading coefficient or the discriminant")]
    BadPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree {0} is out of scope (max {1})")]
    DegreeOutOfScope(usize, usize),
    #[error("singular curve (discriminant 0)")]
    SingularCurve,
    #[error("bad reduction at {0}")]
    BadReduction(u64),
    #[error("prime {0} exceeds the enumeration bound {1}")]
    PrimeTooLarge(u64, u64),
    #[error("subgroup has order {0}, expected 120")]
    NotS5(usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("matrix does not have determinant 1")]
    NotSpecialLinear,
    #[error("empty sampling rectangle")]
    EmptyRectangle,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("missing required column `{0}`")]
    MissingColumn(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
