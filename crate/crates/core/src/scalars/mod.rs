//! Exact scalar arithmetic.
//!
//! Everything in this crate is computed over `Q(i)`, the Gaussian rationals,
//! or over the polynomial ring `Q(i)[z]` for algebraic families. Real
//! algebras use Gaussian rationals whose imaginary part is zero.

mod gaussian;
mod poly;

pub use gaussian::GaussianRational;
pub use poly::Polynomial;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring with identity, as used for structure constants.
///
/// Implemented by [`GaussianRational`] (fields of constants of a Lie algebra)
/// and by [`Polynomial`] (structure constants of an algebraic family).
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// `self += x·y`; overridden to avoid clones in hot loops.
    fn add_product(&mut self, x: &Self, y: &Self) {
        *self = self.clone() + x.clone() * y.clone();
    }
}

impl Ring for GaussianRational {
    fn add_product(&mut self, x: &Self, y: &Self) {
        *self += &(x * y);
    }
}

impl Ring for Polynomial {
    fn add_product(&mut self, x: &Self, y: &Self) {
        *self = &*self + &(x * y);
    }
}

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
///
/// Returns the non-negative root.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Parses `a`, `a/b`, `+a/b` or `-a/b` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, crate::Error> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    let bad = || crate::Error::Parse(format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(crate::Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}
