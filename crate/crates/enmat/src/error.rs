use thiserror::Error;

/// Errors shared across the library.
///
/// Law *failures* discovered by the validators (`validate_base`,
/// `check_category`, ...) are reported as data, not as errors; `LawViolation`
/// is only raised when an operation requires a lawful input or promised a
/// lawful output and the check fails.
#[derive(Debug, Error)]
pub enum Error {
    #[error("object set mismatch: {0}")]
    ObjSetMismatch(String),

    #[error("base mismatch: {left} vs {right}")]
    BaseMismatch { left: String, right: String },

    #[error("base {0} is not closed (no meets/residuals with a finite carrier)")]
    NotClosed(String),

    #[error("base {0} is not idempotent, so it carries no canonical order")]
    NoOrder(String),

    #[error("iteration did not converge within {iterations} steps")]
    NonConvergent { iterations: usize },

    #[error("exponent object set would have {size} elements, exceeding the cap {cap}")]
    ExponentCapExceeded { size: u128, cap: usize },

    #[error("enumeration space has {size} candidates, exceeding the budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("base {0} has no finite carrier to enumerate")]
    InfiniteCarrier(String),

    #[error("arithmetic overflow in base {0}")]
    Overflow(String),

    #[error("cell is not globular: vertical boundaries are not identities")]
    NotGlobular,

    #[error("malformed shape: {0}")]
    MalformedShape(String),

    #[error("invalid object set: {0}")]
    InvalidObjSet(String),

    #[error("invalid function: {0}")]
    InvalidFunction(String),

    #[error("{structure} laws violated: {witness}")]
    LawViolation { structure: &'static str, witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;
