use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A cofactor could not be split (or certified prime) within the effort
    /// budget. Callers must treat the affected answer as undetermined.
    #[error("factorization incomplete: cofactor {0} resisted the effort budget")]
    FactorizationIncomplete(BigInt),

    #[error("root search over {candidates} candidates exceeds the budget of {budget}")]
    RootSearchBudget { candidates: u128, budget: u128 },

    #[error("singular Weierstrass equation (discriminant is zero)")]
    SingularCurve,

    #[error("prime {p} is above the point-counting bound {bound}")]
    CountingBoundExceeded { p: u64, bound: u64 },

    #[error("no admissible prime found below the search cap {cap}")]
    SearchBoundExceeded { cap: u64 },

    #[error("curve does not have good reduction at {0}")]
    NotGoodReduction(u64),

    #[error("j-invariant {0} belongs to a CM curve")]
    ComplexMultiplication(BigRational),

    #[error("j-invariant is an integer; the denominator shortcut does not apply")]
    IntegralJ,

    #[error("curve has multiplicative reduction at {0}")]
    MultiplicativeReduction(BigInt),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors that mean "ran out of effort", as opposed to bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::FactorizationIncomplete(_)
                | Error::RootSearchBudget { .. }
                | Error::CountingBoundExceeded { .. }
                | Error::SearchBoundExceeded { .. }
        )
    }
}
