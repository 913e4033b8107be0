//! Exceptional primes for the mod-ℓ Galois representations of a non-CM
//! elliptic curve over the rationals.
//!
//! Given a curve `E/Q` this crate computes a finite set `S` of primes such
//! that `ρ_{E,ℓ}` is surjective for every `ℓ ∉ S`, either by the quadratic
//! residue rank loop over traces of Frobenius (integral `j`) or from the
//! shape of the denominator of `j` (non-integral `j`), and then decides each
//! `ℓ ∈ S` individually with explicit certificates.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact:
//! integers and rationals are arbitrary precision and no decision depends
//! on floating point.
//!
//! Module map:
//!
//! * [`numtheory`]: factorization, valuations, Legendre symbols, F₂ linear
//!   algebra and rational roots of polynomials.
//! * [`curve`]: Weierstrass models, minimal models, twists, Tate's
//!   algorithm, point counting, conductors and CM detection.
//! * [`sieve`]: the rank loop producing the candidate set `S`.
//! * [`nonintegral`]: the denominator shortcut and its closed-form bounds.
//! * [`bounds`]: conductor-based bounds.
//! * [`small_primes`]: per-prime surjectivity certificates.
//! * [`pipeline`]: orchestration and the batch conjecture check.

#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod curve;
mod error;
pub mod nonintegral;
pub mod numtheory;
pub mod pipeline;
pub mod sieve;
pub mod small_primes;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational number; always kept in lowest terms with positive denominator.
pub type Rational = BigRational;
