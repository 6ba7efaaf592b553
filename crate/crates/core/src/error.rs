//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the polynomial kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable registries differ: [{left}] vs [{right}]")]
    RegistryMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariableName(String),
    #[error("polynomial is not univariate (registry has {0} variables)")]
    NotUnivariate(usize),
    #[error("operation requires real coefficients but `{0}` has a nonzero imaginary part")]
    NotReal(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("point has {got} coordinates, registry has {want} variables")]
    ArityMismatch { got: usize, want: usize },
    #[error("both inputs are zero")]
    ZeroInput,
    #[error("division by zero polynomial")]
    ZeroDivisor,
    #[error("polynomial division is not exact (failing quotient: {0})")]
    DivisionNotExact(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Parse failure with source position.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at line {line}, column {col}: {message} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub token: String,
    pub message: String,
}

/// Errors raised by the elimination machinery.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ElimError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("ideal must have at least one nonzero generator")]
    EmptyIdeal,
    #[error(
        "resource budget exceeded: {pairs_processed} S-pairs processed, \
         max total degree {max_degree} reached"
    )]
    BudgetExceeded { pairs_processed: usize, max_degree: u32 },
    #[error("cancelled after {pairs_processed} S-pairs")]
    Cancelled { pairs_processed: usize },
    #[error("elimination ideal is not principal: {0} generators survive")]
    NonPrincipal(usize),
    #[error("input has degree 0 in `{0}`")]
    DegreeZero(String),
    #[error("constant parametrization component")]
    ConstantInput,
    #[error("extraneous factor could not be removed: substitution residual is nonzero")]
    ExtraneousFactor,
    #[error("{0}")]
    Unsupported(String),
}

/// Errors raised by the surface layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
    #[error("m = {0} is excluded: the curve coefficients 1/(m-1), 1/m, 1/(m+1) require m outside {{-1, 0, 1}}")]
    ExcludedIndex(String),
    #[error("this operation requires an integer m >= 2, got {0}")]
    NonSymbolicIndex(String),
    #[error("p/q must be reduced with q >= 1, got {p}/{q}")]
    NonReducedRatio { p: i64, q: i64 },
    #[error("degenerate Weierstrass data: {0}")]
    DegenerateData(String),
    #[error("{0}")]
    InvalidArgument(String),
}
