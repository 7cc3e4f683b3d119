//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation is not defined for the given ring kind.
    #[error("{operation} is not supported over {domain}")]
    UnsupportedDomain {
        domain: String,
        operation: &'static str,
    },

    /// Two elements from different rings were mixed in one operation.
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    /// A 64-bit checked operation would wrap.
    #[error("arithmetic overflow in {0}")]
    ArithmeticOverflow(&'static str),

    /// gcd(0, 0) has no greatest common divisor.
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,

    #[error("zero is not a valid input here")]
    ZeroInput,

    /// The element's norm exceeds the configured factoring budget.
    #[error("factoring budget exceeded: norm {norm} > budget {budget}")]
    FactorBudgetExceeded { norm: u64, budget: u64 },

    /// Radical support is only defined for nonzero non-units.
    #[error("radical support is undefined for units and zero")]
    UndefinedSupport,

    /// The requested window would exceed the element cap.
    #[error("window would exceed {cap} elements")]
    WindowTooLarge { cap: usize },

    /// Residue systems need a nonzero non-unit modulus.
    #[error("degenerate modulus: must be nonzero and not a unit")]
    DegenerateModulus,

    /// The closure oracle is only exact when the window bound covers the
    /// element's norm.
    #[error("oracle window bound {bound} is below norm {need}")]
    OracleBoundTooSmall { bound: u64, need: u64 },

    /// The coset contains 1, so the "1 in every basic open" argument
    /// yields no witness.
    #[error("coset contains 1; no separating witness from this coset")]
    CosetContainsOne,

    /// A bounded search ran out of candidates.
    #[error("search budget exceeded while {0}")]
    SearchBudgetExceeded(String),

    /// The window cannot exhibit the required witness.
    #[error("window too small: {0}")]
    WindowTooSmall(String),

    /// An element string could not be parsed.
    #[error("invalid element: {0}")]
    InvalidElement(String),

    /// A precondition on the inputs was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
