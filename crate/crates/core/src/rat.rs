//! Exact rational scalars.
//!
//! `Rat` wraps an arbitrary-precision reduced fraction with positive
//! denominator. The canonical text form is `p/q`, or just `p` when `q = 1`;
//! that form is bit-exact and is what every file format uses.

use alloc::string::String;
use alloc::string::ToString;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number: reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// `num/den`. Panics if `den == 0`; sign is normalized onto the numerator.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "rational with zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Parses the canonical `p/q` (or `p`) form.
    pub fn parse(s: &str) -> Result<Rat, ParseRatError> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = BigInt::from_str(num_s.trim()).map_err(|_| ParseRatError(s.to_string()))?;
        let den = match den_s {
            Some(d) => BigInt::from_str(d.trim()).map_err(|_| ParseRatError(s.to_string()))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ParseRatError(s.to_string()));
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a rational: {:?}", self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        Rat::parse(s)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

/// Shorthand for tests and builders: `rat(1, 3)` is `1/3`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

/// Shorthand for integers.
pub fn ri(n: i64) -> Rat {
    Rat::int(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -3), rat(-1, 3));
        assert_eq!(format!("{}", rat(-2, 6)), "-1/3");
        assert_eq!(format!("{}", rat(8, 4)), "2");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-7", "2/5", "-3/7", "22/7"] {
            let r = Rat::parse(s).unwrap();
            assert_eq!(format!("{}", r), s);
        }
        assert!(Rat::parse("1/0").is_err());
        assert!(Rat::parse("x").is_err());
        assert_eq!(Rat::parse(" 4/6 ").unwrap(), rat(2, 3));
    }

    #[test]
    fn exact_arithmetic() {
        let x = rat(1, 3) + rat(1, 6);
        assert_eq!(x, rat(1, 2));
        assert_eq!(rat(2, 5) * rat(5, 2), ri(1));
        assert_eq!(&rat(1, 3) - &rat(2, 3), rat(-1, 3));
        assert_eq!(rat(1, 3) / rat(2, 9), rat(3, 2));
    }

    #[test]
    fn ordering() {
        assert!(rat(1, 3) < rat(2, 5));
        assert!(ri(-1) < Rat::zero());
        assert_eq!(rat(3, 9).max(rat(1, 4)), rat(1, 3));
    }
}
