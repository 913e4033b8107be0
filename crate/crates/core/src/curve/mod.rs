//! Weierstrass models over the rationals.

mod cm;
mod conductor;
mod count;
pub(crate) mod minimal;
mod model;
mod tate;
mod twist;

pub use cm::{curve_from_j, is_cm_j, CM_J_INVARIANTS};
pub use conductor::{conductor, Conductor};
pub use count::{ap_good, trace_of_frobenius, TraceOfFrobenius, DEFAULT_COUNTING_BOUND};
pub use minimal::{is_minimal_at, minimal_model, minimize_at, scale_up};
pub use model::{compute_invariants, WeierstrassModel};
pub use tate::{tate_local_data, KodairaSymbol, LocalData, ReductionType};
pub use twist::quadratic_twist;
