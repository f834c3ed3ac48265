//! Exact integer and rational helpers shared by the counting and bound code.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

pub type Rational = BigRational;

/// Binomial coefficient, zero when `r > n`.
pub fn binom(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Binomial coefficient with signed arguments, zero outside `0 <= r <= n`.
pub fn binom_i(n: i64, r: i64) -> BigUint {
    if n < 0 || r < 0 || r > n {
        BigUint::zero()
    } else {
        binom(n as usize, r as usize)
    }
}

pub fn pow(base: usize, exp: usize) -> BigUint {
    Pow::pow(BigUint::from(base), exp)
}

/// Smallest `t` with `base^t >= x`, by integer comparison.
pub fn ceil_log(base: usize, x: usize) -> usize {
    assert!(base >= 2, "logarithm base must be at least 2");
    let x = BigUint::from(x);
    let b = BigUint::from(base);
    let mut t = 0;
    let mut p = BigUint::one();
    while p < x {
        p *= &b;
        t += 1;
    }
    t
}

pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_u(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `(a/b)^e` for natural exponent.
pub fn rat_pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Closest-below and closest-above rationals bracketing `sqrt(num/den)` with
/// denominators `2^bits`.
pub fn sqrt_bracket(num: &BigUint, den: &BigUint, bits: u32) -> (Rational, Rational) {
    // sqrt(num/den) = sqrt(num*den*4^bits) / (den*2^bits)
    let scale = BigUint::one() << (2 * bits as usize);
    let r = (num * den * scale).sqrt();
    let d = den * (BigUint::one() << bits as usize);
    let lo = Rational::new(BigInt::from(r.clone()), BigInt::from(d.clone()));
    let hi = Rational::new(BigInt::from(r + 1u32), BigInt::from(d));
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert_eq!(binom(0, 0), BigUint::one());
        assert_eq!(binom(3, 4), BigUint::zero());
        assert_eq!(binom_i(-1, 0), BigUint::zero());
        assert_eq!(binom(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn ceil_logs_at_powers() {
        assert_eq!(ceil_log(2, 1), 0);
        assert_eq!(ceil_log(2, 2), 1);
        assert_eq!(ceil_log(2, 3), 2);
        assert_eq!(ceil_log(2, 4), 2);
        assert_eq!(ceil_log(2, 5), 3);
        assert_eq!(ceil_log(3, 9), 2);
        assert_eq!(ceil_log(3, 10), 3);
        assert_eq!(ceil_log(3, 18), 3);
    }

    #[test]
    fn sqrt_bracket_contains_root() {
        let (lo, hi) = sqrt_bracket(&BigUint::from(2u32), &BigUint::one(), 40);
        let two = rat_int(2);
        assert!(&lo * &lo <= two);
        assert!(&hi * &hi > two);
        let (lo, hi) = sqrt_bracket(&BigUint::from(64u32), &BigUint::from(1u32), 10);
        assert_eq!(lo, rat_int(8));
        assert!(hi > rat_int(8));
    }

    #[test]
    fn floors() {
        assert_eq!(floor(&rat(81, 13)), BigInt::from(6));
        assert_eq!(floor(&rat(-1, 2)), BigInt::from(-1));
    }
}
