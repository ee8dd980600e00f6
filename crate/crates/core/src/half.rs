//! Half-integers: the only exponents that ever appear on `z`, `q` or `t`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Rational64;

use crate::error::{Error, Result};

/// An exact element of `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const ONE: Half = Half(2);

    pub const fn int(n: i64) -> Half {
        Half(2 * n)
    }

    pub const fn from_twice(t: i64) -> Half {
        Half(t)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Integer value, if any.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.0, 2)
    }

    /// Panics if `r` has a denominator other than 1 or 2: the exponent
    /// bound is a fixed property of the representation.
    pub fn from_rational(r: Rational64) -> Half {
        Half::try_from_rational(r)
            .unwrap_or_else(|| panic!("exponent {r} exceeds the denominator bound 2"))
    }

    pub fn try_from_rational(r: Rational64) -> Option<Half> {
        match *r.denom() {
            1 => Some(Half(2 * r.numer())),
            2 => Some(Half(*r.numer())),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<Half> {
        let r: Rational64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {s:?}")))?;
        Half::try_from_rational(r).ok_or_else(|| Error::Parse(format!("exponent {s} is not in 1/2 Z")))
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, o: Half) {
        self.0 += o.0;
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl Mul<i64> for Half {
    type Output = Half;
    fn mul(self, k: i64) -> Half {
        Half(self.0 * k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        assert_eq!(Half::from_twice(3).to_string(), "3/2");
        assert_eq!(Half::int(-2).to_string(), "-2");
        assert_eq!(Half::parse("-1/2").unwrap(), Half::from_twice(-1));
        assert_eq!(Half::parse("4/2").unwrap(), Half::int(2));
        assert!(Half::parse("1/3").is_err());
    }

    #[test]
    #[should_panic(expected = "denominator bound")]
    fn thirds_are_rejected() {
        Half::from_rational(Rational64::new(1, 3));
    }
}
