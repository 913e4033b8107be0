use num_bigint::BigInt;
use num_traits::Zero;

use super::model::WeierstrassModel;
use crate::{Error, Result};

/// Quadratic twist by the squarefree integer `d`.
///
/// For `a1 = a3 = 0` the twist of `y² = x³ + a2·x² + a4·x + a6` is
/// `y² = x³ + d·a2·x² + d²·a4·x + d³·a6`. Otherwise the square is completed
/// first, giving `y² = x³ + b2·x² + 8·b4·x + 16·b6`. The result is not
/// minimalized.
pub fn quadratic_twist(model: &WeierstrassModel, d: &BigInt) -> Result<WeierstrassModel> {
    if d.is_zero() {
        return Err(Error::InvalidArgument("twist by zero".into()));
    }
    let (a2, a4, a6) = if model.has_no_xy_terms() {
        (model.a2().clone(), model.a4().clone(), model.a6().clone())
    } else {
        (model.b2().clone(), 8 * model.b4(), 16 * model.b6())
    };
    let d2 = d * d;
    let d3 = &d2 * d;
    Ok(WeierstrassModel::with_invariants([
        BigInt::zero(),
        a2 * d,
        BigInt::zero(),
        a4 * d2,
        a6 * d3,
    ]))
}

impl WeierstrassModel {
    pub fn twist(&self, d: &BigInt) -> Result<WeierstrassModel> {
        quadratic_twist(self, d)
    }
}
