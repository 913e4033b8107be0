//! Per-prime decisions for `ℓ ≤ 13`, the `ℓ`-adic refinement for `ℓ = 2, 3`,
//! and witness certificates for `ℓ > 13`.

mod checks;
mod families;
mod family;
mod xns11;

pub use checks::{
    certify_large, certify_large_with, check_ladic, check_mod_11, check_mod_13, check_mod_13_with, check_mod_small,
    check_mod_small_with, validate_large_witness, Certificate, PrimeStatus, Status, Witness, WitnessConfig, WitnessKind,
    DEFAULT_WITNESS_BOUND, DEFAULT_XNS11_BOUND,
};
pub use family::{all_families, families_for, family_member, family_member_with, RationalFamily};
pub use xns11::{xns11_j, xns11_search, Xns11Point};
