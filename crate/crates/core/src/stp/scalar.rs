//! Numeric carriers for matrix entries.
//!
//! Two modes exist: exact rationals ([`Rational`]) and `f64`. The mode is
//! fixed per matrix by its type parameter, so a single matrix can never mix
//! modes. Every zero test in float mode goes through [`float_tolerance`].

use std::fmt::{Debug, Display};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Default zero tolerance for float mode.
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-9;

static FLOAT_TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Current zero tolerance used by every float-mode comparison.
pub fn float_tolerance() -> f64 {
    f64::from_bits(FLOAT_TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Replaces the process-wide float tolerance. Non-positive or non-finite
/// values are ignored.
pub fn set_float_tolerance(tol: f64) {
    if tol.is_finite() && tol > 0.0 {
        FLOAT_TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
    }
}

/// Which numeric mode a matrix lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumericMode {
    Rational,
    Float,
}

/// Field operations needed by the matrix kernels.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    const MODE: NumericMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Exact zero in rational mode, `|x| < tol` in float mode.
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Caller guarantees `rhs` is not zero.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Magnitude used to pick elimination pivots.
    fn magnitude(&self) -> f64;
    /// Parses one textual entry (`"3"`, `"-2/5"`, and in float mode `"0.25"`).
    fn parse_entry(s: &str) -> Result<Self, String>;

    /// Equality under the mode's zero test.
    fn approx_eq(&self, rhs: &Self) -> bool {
        self.sub(rhs).is_zero()
    }
}

impl Scalar for Rational {
    const MODE: NumericMode = NumericMode::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn parse_entry(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.contains(['.', 'e', 'E']) {
            return Err(format!("decimal entry `{s}` is only allowed in float mode"));
        }
        let parsed = match s.split_once('/') {
            Some((num, den)) => {
                let num = BigInt::from_str(num.trim()).map_err(|_| format!("bad numerator in `{s}`"))?;
                let den = BigInt::from_str(den.trim()).map_err(|_| format!("bad denominator in `{s}`"))?;
                if den.is_zero() {
                    return Err(format!("zero denominator in `{s}`"));
                }
                Rational::new(num, den)
            }
            None => Rational::from_integer(BigInt::from_str(s).map_err(|_| format!("bad number `{s}`"))?),
        };
        Ok(parsed)
    }
}

impl Scalar for f64 {
    const MODE: NumericMode = NumericMode::Float;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn is_zero(&self) -> bool {
        self.abs() < float_tolerance()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn parse_entry(s: &str) -> Result<Self, String> {
        let s = s.trim();
        match s.split_once('/') {
            Some((num, den)) => {
                let num: f64 = num.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
                let den: f64 = den.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
                if den == 0.0 {
                    return Err(format!("zero denominator in `{s}`"));
                }
                Ok(num / den)
            }
            None => s.parse().map_err(|_| format!("bad number `{s}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerance_bits() {
        assert_eq!(f64::from_bits(0x3E11_2E0B_E826_D695), DEFAULT_FLOAT_TOLERANCE);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(Rational::parse_entry("-2/4").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(Rational::parse_entry("7").unwrap(), Rational::from_i64(7));
        assert!(Rational::parse_entry("0.5").is_err());
        assert!(Rational::parse_entry("1/0").is_err());
        assert!(Rational::parse_entry("x").is_err());
    }

    #[test]
    fn float_parsing_and_zero_test() {
        assert_eq!(f64::parse_entry("1/4").unwrap(), 0.25);
        assert_eq!(f64::parse_entry("-0.5").unwrap(), -0.5);
        assert!(Scalar::is_zero(&1e-12));
        assert!(!Scalar::is_zero(&1e-3));
    }
}
