//! Exact rationals and binomial coefficients.

use num::{BigInt, BigRational, One, Zero};

/// Exact rational in lowest terms (arbitrary precision).
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` as a machine integer; saturates at `u128::MAX` (never reached for `n <= 64`).
pub fn binom_u128(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// `x^e` for a rational base.
pub fn pow(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Generalized binomial `x(x-1)...(x-k+1)/k!` for an integer `x`, exact.
pub fn gen_binomial_exact(x: i64, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k as i64 {
        acc = acc * rat_int(x - i) / rat_int(i + 1);
    }
    acc
}

/// Generalized binomial for real `x` in double precision.
pub fn gen_binomial(x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (x - i as f64) / (i as f64 + 1.0);
    }
    acc
}

pub fn to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(6, 3), BigInt::from(20));
        assert_eq!(binom(5, 7), BigInt::zero());
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom_u128(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn generalized_binomial_examples() {
        assert!((gen_binomial(2.5, 2) - 1.875).abs() < 1e-12);
        assert_eq!(gen_binomial(7.3, 0), 1.0);
        assert_eq!(gen_binomial_exact(3, 2), rat(3, 1));
        assert_eq!(gen_binomial_exact(-2, 3), rat(-4, 1));
        for n in 0..10i64 {
            for k in 0..10u32 {
                assert_eq!(gen_binomial_exact(n, k), rat_int(binom(n, k as i64)));
            }
        }
    }
}
