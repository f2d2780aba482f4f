//! Exact rational arithmetic for strategy weights and ratios.
//!
//! [`Rational`] wraps `num_rational::Ratio<i64>` and fixes the conventions
//! used throughout the crate: `Display` prints integers bare and everything
//! else as `p/q`, [`Rational::to_decimal`] prints terminating decimal
//! expansions exactly (and refuses non-terminating ones), and parsing accepts
//! exactly the `p` and `p/q` forms the certificate file format uses.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// An exact rational number, always in lowest terms.
///
/// Backed by `i64` numerator and denominator. All quantities in this crate
/// are dyadic-ish weights and ratios on graphs with well under a hundred
/// vertices, so the value range is never close to overflow.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

/// Errors from constructing or parsing a [`Rational`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    /// The denominator was zero.
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    /// The text was not a bare integer or a `p/q` fraction.
    #[error("invalid rational literal {0:?}")]
    InvalidLiteral(String),
}

impl Rational {
    /// Zero.
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    /// One.
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: i64, denom: i64) -> Result<Rational, RationalError> {
        if denom == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Rational(Ratio::new(numer, denom)))
    }

    /// The integer `n` as a rational.
    pub const fn from_int(n: i64) -> Rational {
        Rational(Ratio::new_raw(n, 1))
    }

    /// `2^exp`, for any (possibly negative) exponent.
    ///
    /// Panics if `|exp|` is 62 or more; weights in this crate stay far below
    /// that.
    pub fn pow2(exp: i32) -> Rational {
        assert!(exp.unsigned_abs() < 62, "2^{exp} is out of supported range");
        if exp >= 0 {
            Rational::from_int(1i64 << exp)
        } else {
            Rational(Ratio::new(1, 1i64 << (-exp)))
        }
    }

    /// Numerator of the reduced form (carries the sign).
    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    /// Denominator of the reduced form (always positive).
    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Largest integer `≤ self`.
    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    /// True if the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True if the value is zero.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True if the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True if the value is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// The smaller of two rationals.
    pub fn min(self, other: Rational) -> Rational {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// The larger of two rationals.
    pub fn max(self, other: Rational) -> Rational {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// The exact decimal expansion, when it terminates.
    ///
    /// Returns `Some` exactly when the reduced denominator has no prime
    /// factors besides 2 and 5; the expansion carries no trailing zeros.
    pub fn to_decimal(&self) -> Option<String> {
        let mut den = self.denom();
        let mut twos = 0u32;
        while den % 2 == 0 {
            den /= 2;
            twos += 1;
        }
        let mut fives = 0u32;
        while den % 5 == 0 {
            den /= 5;
            fives += 1;
        }
        if den != 1 {
            return None;
        }
        let digits = twos.max(fives);
        if digits == 0 {
            return Some(self.numer().to_string());
        }
        // numer / (2^twos 5^fives) == numer·2^(digits-twos)·5^(digits-fives) / 10^digits
        let scale = 2i128.pow(digits - twos) * 5i128.pow(digits - fives);
        let scaled = i128::from(self.numer()) * scale;
        let ten_pow = 10i128.pow(digits);
        let sign = if scaled < 0 { "-" } else { "" };
        let abs = scaled.unsigned_abs();
        let int_part = abs / ten_pow.unsigned_abs();
        let frac_part = abs % ten_pow.unsigned_abs();
        Some(format!(
            "{sign}{int_part}.{frac_part:0width$}",
            width = digits as usize
        ))
    }

    /// Human-preferred rendering: exact decimal when it terminates, `p/q`
    /// otherwise.
    pub fn to_display_string(&self) -> String {
        self.to_decimal().unwrap_or_else(|| self.to_string())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Rational, RationalError> {
        let bad = || RationalError::InvalidLiteral(s.to_string());
        match s.split_once('/') {
            None => {
                let n: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Rational::from_int(n))
            }
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(RationalError::ZeroDenominator);
                }
                Ok(Rational(Ratio::new(p, q)))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_int(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Mul<i64> for Rational {
    type Output = Rational;
    fn mul(self, rhs: i64) -> Rational {
        Rational(self.0 * rhs)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}
