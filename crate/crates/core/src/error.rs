use thiserror::Error;

/// Every failure the library reports. Variant names double as the
/// machine-readable `error` field of the CLI's JSON error object.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    Containment { outer: String, inner: String },
    #[error("|D| + |E| = {lhs} but |F| = {rhs}")]
    SizeMismatch { lhs: usize, rhs: usize },
    #[error("depth bound violated: {0}")]
    DepthExceeded(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("not a Littlewood-Richardson tableau: {0}")]
    NotLR(String),
    #[error("no LR tableau maps to the given data: {0}")]
    NoPreimage(String),
    #[error("variable {0} is not covered by the y-order")]
    UnorderedVariable(String),
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("coefficient of {0} vanished; this is an implementation bug")]
    ZeroCoefficient(String),
    #[error("{count} exponent grids share the support of the requested grid")]
    NotUnique { count: usize },
    #[error("index out of range: {0}")]
    IndexError(String),
    #[error("polynomial is not multihomogeneous: {0}")]
    NotHomogeneous(String),
    #[error("shape {shape} needs more than {nvars} variables")]
    TooFewVariables { shape: String, nvars: usize },
    #[error("polynomial is not symmetric under z[{0}] <-> z[{1}]")]
    NotSymmetric(usize, usize),
    #[error("negative coefficient {coeff} for s_{shape}")]
    NegativeCoefficient { shape: String, coeff: String },
    #[error("grading formula output is not weakly decreasing: {0}")]
    NotPartition(String),
    #[error("matrix too large for bitmask expansion: {0} rows")]
    TooLarge(usize),
}

impl Error {
    /// Short variant name, e.g. `"SizeMismatch"`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Containment { .. } => "ShapeError",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::DepthExceeded(_) => "DepthExceeded",
            Error::Parse(_) => "ParseError",
            Error::NotLR(_) => "NotLR",
            Error::NoPreimage(_) => "NoPreimage",
            Error::UnorderedVariable(_) => "UnorderedVariable",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NonSquare { .. } => "NonSquare",
            Error::MissingAssignment(_) => "MissingAssignment",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::ZeroCoefficient(_) => "ZeroCoefficient",
            Error::NotUnique { .. } => "NotUnique",
            Error::IndexError(_) => "IndexError",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::TooFewVariables { .. } => "TooFewVariables",
            Error::NotSymmetric(..) => "NotSymmetric",
            Error::NegativeCoefficient { .. } => "NegativeCoefficient",
            Error::NotPartition(_) => "NotPartition",
            Error::TooLarge(_) => "TooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
