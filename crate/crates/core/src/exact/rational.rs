//! Arbitrary-precision rationals.
//!
//! `BigRational` already maintains the invariants we need (always reduced,
//! positive denominator, canonical zero), so the coefficient field is a type
//! alias plus a few constructors and the canonical `num/den` string form used
//! by the interchange format.

use alloc::string::String;
use alloc::string::ToString;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_zero() -> Rational {
    Rational::zero()
}

pub fn rat_one() -> Rational {
    Rational::one()
}

/// 2^k for k possibly negative.
pub fn rat_pow2(k: i32) -> Rational {
    let two = rat_int(2);
    let mut acc = rat_one();
    for _ in 0..k.unsigned_abs() {
        acc *= &two;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Canonical coefficient string: always `num/den` with `den > 0`, e.g. `-3/1`.
pub fn coeff_string(r: &Rational) -> String {
    let mut s = r.numer().to_string();
    s.push('/');
    s.push_str(&r.denom().to_string());
    s
}

/// Parse `num/den` or a bare integer.
pub fn parse_coeff(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// gcd of two rationals, normalized positive: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
pub fn rat_gcd(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    Rational::new(n, d).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coeff_string_round_trips() {
        for r in [rat(3, 4), rat(-7, 2), rat_zero(), rat_int(5)] {
            assert_eq!(parse_coeff(&coeff_string(&r)).unwrap(), r);
        }
        assert_eq!(coeff_string(&rat(-6, 4)), "-3/2");
        assert_eq!(parse_coeff("4"), Some(rat_int(4)));
        assert_eq!(parse_coeff("1/0"), None);
    }

    #[test]
    fn gcd_of_rationals() {
        assert_eq!(rat_gcd(&rat(4, 3), &rat(2, 9)), rat(2, 9));
        assert_eq!(rat_gcd(&rat_zero(), &rat(-5, 2)), rat(5, 2));
    }
}
