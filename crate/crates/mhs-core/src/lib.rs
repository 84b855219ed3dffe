//! Exact-arithmetic toolkit for multiple harmonic sums.
//!
//! The crate evaluates strict, non-strict (star), alternating, and "odd"
//! multiple harmonic sums over exact rationals, residue rings `Z/p^N`, and a
//! truncated p-adic approximation ring, and ships two machine-checked suites
//! on top of the evaluators:
//!
//! - [`identities`]: finite binomial identities (including WZ-pair
//!   certificates) verified by exact rational equality;
//! - [`congruences`]: prime-power congruence claims whose right-hand sides
//!   live in the Bernoulli / Euler / Fermat-quotient basis, swept over prime
//!   ranges.
//!
//! [`series`] cross-checks the infinite-series content (Apéry-type binomial
//! series, zeta-star closed forms) with error-tracked fixed-point numerics.

pub mod arith;
pub mod congruences;
pub mod decimal;
pub mod identities;
pub mod mhs;
pub mod modring;
pub mod primes;
pub mod series;
pub mod special;

pub use arith::{binomial, factorial, shifted_factorial, Int, Rat};
pub use mhs::{Composition, SumKind};
pub use modring::{FermatQuotient, Mod, ModInt, PAdic};
