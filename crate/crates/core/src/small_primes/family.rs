use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::families::FAMILIES;
use crate::numtheory::{rational_roots_with, RationalPolynomial, RootBudget};
use crate::Result;

/// `constant · ∏ fᵢ^eᵢ` with integer coefficients, lowest degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Factored {
    pub constant: i64,
    pub factors: &'static [(&'static [i64], u32)],
}

impl Factored {
    #[cfg(test)]
    fn expand(&self) -> RationalPolynomial {
        let factors: Vec<(RationalPolynomial, u32)> = self
            .factors
            .iter()
            .map(|(c, e)| (RationalPolynomial::from_ints(c), *e))
            .collect();
        RationalPolynomial::product(BigRational::from_integer(self.constant.into()), &factors)
    }

    fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.constant != 1 || self.factors.is_empty() {
            parts.push(format!("{}", self.constant));
        }
        for (coeffs, e) in self.factors {
            let f = RationalPolynomial::from_ints(coeffs);
            let alone = self.constant == 1 && self.factors.len() == 1 && *e == 1;
            let base = if alone || coeffs == &[0, 1] { format!("{f}") } else { format!("({f})") };
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        parts.join("*")
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct FamilyData {
    pub label: &'static str,
    pub ell: u64,
    /// Only relevant to the ℓ-adic question, not to the mod-ℓ one.
    pub adic_only: bool,
    pub numerator: &'static [i64],
    pub denominator: &'static [i64],
    pub numerator_factored: Factored,
    pub denominator_factored: Factored,
}

/// A one-parameter family `t ↦ numerator(t) / denominator(t)` of
/// j-invariants, numerator and denominator coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFamily {
    pub label: &'static str,
    pub ell: u64,
    pub adic_only: bool,
    pub numerator: RationalPolynomial,
    pub denominator: RationalPolynomial,
    factored: (Factored, Factored),
}

impl RationalFamily {
    /// The family in factored form, e.g. `256*(t + 1)^3 / t`.
    pub fn formula(&self) -> String {
        let (num, den) = &self.factored;
        if den.factors.is_empty() && den.constant == 1 {
            num.render()
        } else {
            format!("{} / {}", num.render(), den.render())
        }
    }

    fn from_data(d: &FamilyData) -> Self {
        RationalFamily {
            label: d.label,
            ell: d.ell,
            adic_only: d.adic_only,
            numerator: RationalPolynomial::from_ints(d.numerator),
            denominator: RationalPolynomial::from_ints(d.denominator),
            factored: (d.numerator_factored, d.denominator_factored),
        }
    }

    /// `None` at poles.
    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let den = self.denominator.eval(t);
        (!den.is_zero()).then(|| self.numerator.eval(t) / den)
    }
}

/// Every stored family, in a fixed order.
pub fn all_families() -> Vec<RationalFamily> {
    FAMILIES.iter().map(RationalFamily::from_data).collect()
}

/// The families deciding the mod-ℓ question (`adic = false`) or the extra
/// families for the ℓ-adic one (`adic = true`).
pub fn families_for(ell: u64, adic: bool) -> Vec<RationalFamily> {
    FAMILIES
        .iter()
        .filter(|d| d.ell == ell && d.adic_only == adic)
        .map(RationalFamily::from_data)
        .collect()
}

pub fn family_member(j: &BigRational, fam: &RationalFamily) -> Result<Option<BigRational>> {
    family_member_with(j, fam, &RootBudget::default())
}

/// The least `t` with `fam(t) = j`, if any.
pub fn family_member_with(j: &BigRational, fam: &RationalFamily, budget: &RootBudget) -> Result<Option<BigRational>> {
    let f = &fam.numerator - &fam.denominator.scale(j);
    if f.is_zero() {
        // constant family equal to j: any non-pole works
        return Ok((0i64..)
            .map(|t| BigRational::from_integer(t.into()))
            .find(|t| !fam.denominator.eval(t).is_zero()));
    }
    let roots = rational_roots_with(&f, budget)?;
    Ok(roots.into_iter().find(|t| fam.eval(t).as_ref() == Some(j)))
}

#[cfg(test)]
fn factored_forms() -> Vec<(&'static str, RationalPolynomial, RationalPolynomial, RationalFamily)> {
    FAMILIES
        .iter()
        .map(|d| {
            (
                d.label,
                d.numerator_factored.expand(),
                d.denominator_factored.expand(),
                RationalFamily::from_data(d),
            )
        })
        .collect()
}
