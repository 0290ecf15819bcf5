//! Virtual representations `a + bσ` of the group of order two.
//!
//! Every degree is stored in the basis `{1, σ}`, so there is exactly one
//! `(a, b)` pair per degree and no reduction by `σ² = 1` is ever needed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// A degree `a + bσ` in RO(C₂).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RODegree {
    pub a: BigInt,
    pub b: BigInt,
}

/// The exponent `(a+b)/2` does not exist because `a+b` is odd.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("degree {0} has odd underlying dimension")]
pub struct ParityError(pub RODegree);

impl RODegree {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        RODegree {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        RODegree::default()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `n(1+σ)`.
    pub fn diagonal(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        RODegree { a: n.clone(), b: n }
    }

    /// `n(1-σ)`.
    pub fn antidiagonal(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        RODegree { a: n.clone(), b: -n }
    }

    /// Total dimension `a + b` of the underlying non-equivariant degree.
    pub fn underlying_degree(&self) -> BigInt {
        &self.a + &self.b
    }

    pub fn half_total(&self) -> Result<BigInt, ParityError> {
        let (q, r) = self.underlying_degree().div_rem(&BigInt::from(2));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ParityError(self.clone()))
        }
    }

    /// Small-integer view used when indexing charts.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.a.to_i64()?, self.b.to_i64()?))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        RODegree {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl From<(i64, i64)> for RODegree {
    fn from((a, b): (i64, i64)) -> Self {
        RODegree::new(a, b)
    }
}

impl Add for RODegree {
    type Output = RODegree;
    fn add(self, rhs: RODegree) -> RODegree {
        RODegree {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Add<&RODegree> for &RODegree {
    type Output = RODegree;
    fn add(self, rhs: &RODegree) -> RODegree {
        RODegree {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&RODegree> for &RODegree {
    type Output = RODegree;
    fn sub(self, rhs: &RODegree) -> RODegree {
        RODegree {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for RODegree {
    type Output = RODegree;
    fn neg(self) -> RODegree {
        RODegree {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &RODegree {
    type Output = RODegree;
    fn neg(self) -> RODegree {
        RODegree {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul<i64> for &RODegree {
    type Output = RODegree;
    fn mul(self, k: i64) -> RODegree {
        self.scale(&BigInt::from(k))
    }
}

pub fn add(d1: &RODegree, d2: &RODegree) -> RODegree {
    d1 + d2
}

pub fn negate(d: &RODegree) -> RODegree {
    -d
}

pub fn underlying_degree(d: &RODegree) -> BigInt {
    d.underlying_degree()
}

pub fn half_total(d: &RODegree) -> Result<BigInt, ParityError> {
    d.half_total()
}

/// Canonical form `a+bs` / `a-bs`, e.g. `3-1s`.
///
/// The alternate flag (`{:#}`) prints `σ` instead of `s`.
impl fmt::Display for RODegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let sigma = if f.alternate() { "σ" } else { "s" };
        write!(f, "{}{}{}{}", self.a, sign, self.b.abs(), sigma)
    }
}

impl FromStr for RODegree {
    type Err = Error;

    /// Accepts `a+bs`, `a-bs`, `a+bσ`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("malformed degree `{s}`, expected a{{+|-}}bs"),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = t
            .strip_suffix('s')
            .or_else(|| t.strip_suffix('σ'))
            .ok_or_else(bad)?;
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(bad)?;
        let (a_txt, b_txt) = body.split_at(split);
        let a: BigInt = a_txt.parse().map_err(|_| bad())?;
        let b_txt = b_txt.strip_prefix('+').unwrap_or(b_txt);
        let b: BigInt = b_txt.parse().map_err(|_| bad())?;
        Ok(RODegree { a, b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(a: i64, b: i64) -> RODegree {
        RODegree::new(a, b)
    }

    #[test]
    fn add_examples() {
        assert_eq!(add(&d(1, 1), &d(3, 3)), d(4, 4));
        assert_eq!(add(&d(0, 0), &d(7, -2)), d(7, -2));
        assert_eq!(add(&d(2, -2), &d(2, -2)), d(4, -4));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(negate(&d(1, 1)), d(-1, -1));
        assert_eq!(negate(&d(0, 0)), d(0, 0));
        assert_eq!(negate(&d(4, -4)), d(-4, 4));
    }

    #[test]
    fn underlying_and_half() {
        assert_eq!(underlying_degree(&d(1, 1)), 2.into());
        assert_eq!(underlying_degree(&d(2, -2)), 0.into());
        assert_eq!(underlying_degree(&d(3, 3)), 6.into());
        assert_eq!(half_total(&d(1, 1)), Ok(1.into()));
        assert!(half_total(&d(0, -1)).is_err());
        assert_eq!(half_total(&d(4, -4)), Ok(0.into()));
        assert_eq!(half_total(&d(-3, 1)), Ok((-1).into()));
    }

    #[test]
    fn text_form() {
        assert_eq!(d(3, -1).to_string(), "3-1s");
        assert_eq!(d(0, 0).to_string(), "0+0s");
        assert_eq!(format!("{:#}", d(1, 1)), "1+1σ");
        assert_eq!("0-1s".parse::<RODegree>().unwrap(), d(0, -1));
        assert_eq!("-4+4σ".parse::<RODegree>().unwrap(), d(-4, 4));
        assert_eq!(" 12 - 12 s".parse::<RODegree>().unwrap(), d(12, -12));
        assert!("12".parse::<RODegree>().is_err());
        assert!("1+s".parse::<RODegree>().is_err());
    }

    #[test]
    fn no_overflow_on_deep_degrees() {
        let big = d(i64::MAX, i64::MAX);
        let s = add(&big, &big);
        assert_eq!(s.underlying_degree(), BigInt::from(i64::MAX) * 4);
    }

    proptest! {
        #[test]
        fn grading_monoid(a1 in -1000i64..1000, b1 in -1000i64..1000,
                          a2 in -1000i64..1000, b2 in -1000i64..1000,
                          a3 in -1000i64..1000, b3 in -1000i64..1000) {
            let (x, y, z) = (d(a1, b1), d(a2, b2), d(a3, b3));
            prop_assert_eq!(add(&x, &y), add(&y, &x));
            prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
            prop_assert_eq!(negate(&negate(&x)), x.clone());
            prop_assert!(add(&x, &negate(&x)).is_zero());
            prop_assert_eq!(underlying_degree(&add(&x, &y)),
                            underlying_degree(&x) + underlying_degree(&y));
            prop_assert_eq!(half_total(&x).is_ok(), (a1 + b1) % 2 == 0);
            prop_assert_eq!(x.to_string().parse::<RODegree>().unwrap(), x);
        }
    }
}
