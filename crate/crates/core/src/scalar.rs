//! Scalar field abstraction.
//!
//! Every computation in the crate is generic over [`Scalar`]. Two
//! implementations ship: [`Rational`] (arbitrary precision, exact equality)
//! and `f64` (zero tests go through an explicit [`Tolerance`]).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational number.
pub type Rational = BigRational;

/// Absolute tolerance used by float arithmetic when deciding whether a
/// value vanishes. Exact arithmetic ignores it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Arithmetic mode selected for a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    Float,
}

impl fmt::Display for Arithmetic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arithmetic::Exact => f.write_str("exact"),
            Arithmetic::Float => f.write_str("float"),
        }
    }
}

impl FromStr for Arithmetic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Arithmetic::Exact),
            "float" => Ok(Arithmetic::Float),
            other => Err(Error::Parse(format!("unknown arithmetic mode `{other}`"))),
        }
    }
}

pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// `true` when equality is exact and tolerances are ignored.
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }

    fn abs_value(&self) -> Self;

    /// Zero test. Exact scalars compare against zero literally.
    fn is_negligible(&self, tol: Tolerance) -> bool;

    /// Square root when it exists in the field; exact rationals only have
    /// roots when numerator and denominator are perfect squares.
    fn sqrt_checked(&self) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// Serialized form used in reports: `p/q` for rationals.
    fn render(&self) -> String;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn is_negligible(&self, _tol: Tolerance) -> bool {
        self.is_zero()
    }

    fn sqrt_checked(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn is_negligible(&self, tol: Tolerance) -> bool {
        self.abs() <= tol.0
    }

    fn sqrt_checked(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format!("{self:e}")
    }
}

/// Parses `"p/q"`, `"p"` or a decimal literal such as `"-0.25"` into an
/// exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let bad = || Error::Parse(format!("malformed rational literal `{text}`"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let negative = int_part.starts_with('-');
        let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac_part.len());
        let r = BigRational::new(n, d);
        return Ok(if negative { -r } else { r });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Shorthand for building rationals in code and tests.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_literal_shapes() {
        assert_eq!(parse_rational("3/6").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), q(-7, 1));
        assert_eq!(parse_rational("-0.25").unwrap(), q(-1, 4));
        assert_eq!(parse_rational(" 12 / -8 ").unwrap(), q(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(q(9, 4).sqrt_checked(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt_checked(), None);
        assert_eq!(q(-1, 1).sqrt_checked(), None);
    }

    #[test]
    fn float_zero_test_uses_tolerance() {
        assert!(1e-12_f64.is_negligible(Tolerance::DEFAULT));
        assert!(!1e-6_f64.is_negligible(Tolerance::DEFAULT));
        assert!(1e-6_f64.is_negligible(Tolerance(1e-5)));
    }

    #[test]
    fn render_is_p_over_q() {
        assert_eq!(q(-6, 4).render(), "-3/2");
        assert_eq!(q(0, 5).render(), "0/1");
    }
}
