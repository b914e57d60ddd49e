use std::fmt;

/// Errors surfaced by the exact kernel and the geometry layers on top of it.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An inversion in Q[a]/(m) hit a nontrivial common factor with the
    /// modulus. The witness is that factor; it proves m reducible.
    ZeroDivisorInModulus { witness: String },
    /// Division by the zero element of the coefficient field.
    DivisionByZero,
    /// Mixed operands from two different coefficient fields.
    FieldMismatch,
    /// Homogeneous-degree bookkeeping violated (e.g. map components of
    /// different total degree).
    DegreeMismatch { expected: usize, found: usize },
    /// Delta = -16(4A^3+27B^2) vanishes identically.
    DegenerateModel,
    /// Minimalization would strip more weight than the model carries.
    WeightUnderflow,
    /// Quadratic twist by a polynomial with a repeated factor.
    NonSquarefreeTwist,
    /// Twist whose degree bookkeeping cannot yield an integral weight.
    OddTwistImbalance,
    /// An operation that requires a minimal model got a non-minimal one.
    NotMinimal,
    /// A vanishing-order triple matching no classification row; signals
    /// non-minimal input or an upstream kernel bug.
    InconsistentOrders { v_a: String, v_b: String, v_delta: u32 },
    /// transfer_star asked to move a * off a cluster that carries none.
    NotStarred,
    /// Moebius interpolation through coincident points.
    DegeneratePoints,
    /// Expression or file syntax error.
    Parse(String),
    /// A parsed expression is not homogeneous; lists the offending monomials.
    NotHomogeneous { monomials: String },
    /// Embedded or user catalog data failed its load-time validation.
    CatalogCorrupt(String),
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisorInModulus { witness } => {
                write!(f, "zero divisor in modulus (reducible): witness {witness}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch => write!(f, "operands belong to different coefficient fields"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::DegenerateModel => write!(f, "degenerate model: discriminant is identically zero"),
            Error::WeightUnderflow => write!(f, "weight underflow during minimalization"),
            Error::NonSquarefreeTwist => write!(f, "twist polynomial has a repeated factor"),
            Error::OddTwistImbalance => {
                write!(f, "twist leaves a fractional weight (odd total degree)")
            }
            Error::NotMinimal => write!(f, "model is not minimal"),
            Error::InconsistentOrders { v_a, v_b, v_delta } => {
                write!(f, "orders (vA={v_a}, vB={v_b}, vDelta={v_delta}) match no fiber type")
            }
            Error::NotStarred => write!(f, "cluster does not carry a non-reduced fiber"),
            Error::DegeneratePoints => write!(f, "coincident points"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotHomogeneous { monomials } => {
                write!(f, "not homogeneous; offending monomials: {monomials}")
            }
            Error::CatalogCorrupt(msg) => write!(f, "catalog corrupt: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
