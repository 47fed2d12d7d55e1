use std::fmt;

/// Error type shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two scalars or elements from different coefficient rings were mixed.
    RingMismatch { left: String, right: String },
    /// Two elements from different algebras were mixed.
    AlgebraMismatch { left: String, right: String },
    /// Division by zero.
    DivisionByZero,
    /// Polynomial division left a remainder.
    InexactDivision,
    /// The scalar has no inverse in its ring (zero, or a nonconstant polynomial).
    NotInvertible(String),
    /// Division by 2 requested in characteristic 2 (Jordan constructions unavailable).
    HalfUnavailable,
    /// A parameter name is not declared in the ring.
    UnknownParameter(String),
    /// The characteristic does not satisfy a precondition of the operation.
    BadCharacteristic { expected: String, got: u64 },
    /// An operation requiring field coefficients was called on a parametric ring.
    ParametricRing(String),
    /// No specialization satisfies the nonzero constraints.
    UnsatisfiableConstraints(String),
    /// A structure constant violates grading closure: parity(k) ≠ parity(i)+parity(j).
    GradingViolation { i: usize, j: usize, k: usize },
    /// The declared unit does not satisfy the unit axiom against basis element i.
    UnitAxiom { i: usize },
    /// A product of spanning elements left the span.
    NotClosed { i: usize, j: usize },
    /// Catch-all for invalid arguments; the message names the offender.
    InvalidArgument(String),
    /// Text parse error with 1-based position.
    Parse { line: usize, col: usize, msg: String },
    /// An unknown registry case, identity spec or catalog family was requested.
    Unknown(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left} vs {right}")
            }
            Error::AlgebraMismatch { left, right } => {
                write!(f, "algebra mismatch: {left} vs {right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InexactDivision => write!(f, "inexact polynomial division"),
            Error::NotInvertible(s) => write!(f, "not invertible: {s}"),
            Error::HalfUnavailable => {
                write!(f, "division by 2 unavailable in characteristic 2")
            }
            Error::UnknownParameter(p) => write!(f, "unknown parameter: {p}"),
            Error::BadCharacteristic { expected, got } => {
                write!(f, "characteristic must be {expected}, got {got}")
            }
            Error::ParametricRing(op) => write!(
                f,
                "{op} needs field coefficients; specialize the parameters first"
            ),
            Error::UnsatisfiableConstraints(s) => {
                write!(f, "unsatisfiable specialization constraints: {s}")
            }
            Error::GradingViolation { i, j, k } => write!(
                f,
                "grading violation: product of basis {i} and {j} hits {k} with wrong parity"
            ),
            Error::UnitAxiom { i } => {
                write!(f, "declared unit fails the unit axiom on basis element {i}")
            }
            Error::NotClosed { i, j } => write!(
                f,
                "span is not closed: product of spanning elements {i} and {j} leaves the span"
            ),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            Error::Unknown(s) => write!(f, "unknown name: {s}"),
        }
    }
}

impl std::error::Error for Error {}
