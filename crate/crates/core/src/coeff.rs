//! Exact coefficients: rationals whose denominators only involve inverted
//! primes, i.e. elements of ℤ[1/N] for the presentation's inverted set.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// `k^e` for any integer `e`; `k` must be nonzero when `e < 0`.
pub fn pow(k: i64, e: &BigInt) -> Coeff {
    let base = int(k);
    let mag: u64 = e
        .abs()
        .try_into()
        .expect("exponent magnitude exceeds u64");
    let p = num_traits::pow::Pow::pow(&base, mag);
    if e.is_negative() {
        p.recip()
    } else {
        p
    }
}

/// Image of `c ∈ ℤ_(2)` in ℤ/2, or `None` when `c` has even denominator.
pub fn mod2(c: &Coeff) -> Option<bool> {
    if c.denom().is_even() {
        return None;
    }
    Some(c.numer().is_odd())
}

/// 2-adic valuation of a nonzero coefficient.
pub fn two_adic(c: &Coeff) -> i64 {
    debug_assert!(!c.is_zero());
    fn val(n: &BigInt) -> i64 {
        n.trailing_zeros().map(|z| z as i64).unwrap_or(0)
    }
    val(c.numer()) - val(c.denom())
}

pub fn prime_factors(n: i64) -> Vec<i64> {
    let mut n = n.unsigned_abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p as i64);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n as i64);
    }
    out
}

/// True when every prime in the denominator of `c` is listed in `primes`.
pub fn denominator_allowed(c: &Coeff, primes: &[i64]) -> bool {
    let mut d = c.denom().clone();
    for &p in primes {
        let p = BigInt::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    d.is_one()
}

/// Coefficient text: `3`, `-1/27`.
pub fn format(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod2_of_fractions() {
        assert_eq!(mod2(&int(3)), Some(true));
        assert_eq!(mod2(&int(-4)), Some(false));
        assert_eq!(mod2(&(int(1) / int(27))), Some(true));
        assert_eq!(mod2(&(int(2) / int(3))), Some(false));
        assert_eq!(mod2(&(int(1) / int(2))), None);
    }

    #[test]
    fn powers() {
        assert_eq!(pow(3, &BigInt::from(4)), int(81));
        assert_eq!(pow(-1, &BigInt::from(3)), int(-1));
        assert_eq!(pow(2, &BigInt::from(-3)), int(1) / int(8));
        assert_eq!(pow(5, &BigInt::from(0)), int(1));
    }

    #[test]
    fn denominators() {
        assert_eq!(prime_factors(12), vec![2, 3]);
        assert_eq!(prime_factors(-7), vec![7]);
        assert!(prime_factors(1).is_empty());
        assert!(denominator_allowed(&(int(5) / int(9)), &[3]));
        assert!(!denominator_allowed(&(int(5) / int(6)), &[3]));
        assert_eq!(two_adic(&(int(12) / int(5))), 2);
        assert_eq!(two_adic(&(int(3) / int(8))), -3);
    }
}
