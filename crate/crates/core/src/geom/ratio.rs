//! The scalar field: arbitrary-precision rationals, always in lowest terms
//! with a positive denominator. `num_rational::BigRational` maintains both
//! invariants after every operation, so it is used directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Ratio = num_rational::BigRational;

/// `n/d` as a `Ratio`, reduced. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Ratio {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a `Ratio`.
pub fn int(n: i64) -> Ratio {
    Ratio::from_integer(BigInt::from(n))
}

/// `1 / 2^k`.
pub fn inv_pow2(k: u32) -> Ratio {
    Ratio::new(BigInt::one(), BigInt::one() << k)
}

/// Smallest nonnegative integer `D` with `D^2 >= x`; 0 for `x <= 0`.
///
/// There is never an integer square strictly between a non-integer `x` and
/// `ceil(x)`, so the answer equals `ceil(sqrt(ceil(x)))`, computed exactly.
pub fn sqrt_ceil(x: &Ratio) -> BigInt {
    if !x.is_positive() {
        return BigInt::zero();
    }
    let q = x.numer().div_ceil(x.denom());
    let mut d = q.sqrt();
    while &d * &d < q {
        d += 1;
    }
    d
}

/// Smallest integer `k >= 0` with `2^k >= x`.
pub fn ceil_log2(x: &Ratio) -> u32 {
    assert!(x.is_positive(), "ceil_log2 of a non-positive ratio");
    let mut k = 0u32;
    let mut pow = Ratio::one();
    let two = int(2);
    while &pow < x {
        pow *= &two;
        k += 1;
    }
    k
}

/// Nearest multiple of `1/2^k` (ties round away from zero toward +inf).
pub fn round_dyadic(x: &Ratio, k: u32) -> Ratio {
    let scaled = x * Ratio::from_integer(BigInt::one() << k);
    let two = BigInt::from(2);
    let n = (scaled.numer() * &two + scaled.denom()).div_floor(&(scaled.denom() * &two));
    Ratio::new(n, BigInt::one() << k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_is_reduced_with_positive_denominator() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let s = ratio(1, 3) + ratio(1, 6);
        assert_eq!(s, ratio(1, 2));
    }

    #[test]
    fn sqrt_ceil_cases() {
        assert_eq!(sqrt_ceil(&int(0)), BigInt::zero());
        assert_eq!(sqrt_ceil(&int(-3)), BigInt::zero());
        assert_eq!(sqrt_ceil(&int(1)), BigInt::from(1));
        assert_eq!(sqrt_ceil(&int(4)), BigInt::from(2));
        assert_eq!(sqrt_ceil(&int(5)), BigInt::from(3));
        assert_eq!(sqrt_ceil(&ratio(5, 1)), BigInt::from(3));
        assert_eq!(sqrt_ceil(&ratio(1, 4)), BigInt::from(1));
        assert_eq!(sqrt_ceil(&ratio(9, 1)), BigInt::from(3));
        assert_eq!(sqrt_ceil(&ratio(82, 9)), BigInt::from(4));
    }

    #[test]
    fn ceil_log2_cases() {
        assert_eq!(ceil_log2(&ratio(1, 8)), 0);
        assert_eq!(ceil_log2(&int(1)), 0);
        assert_eq!(ceil_log2(&ratio(3, 2)), 1);
        assert_eq!(ceil_log2(&int(9)), 4);
    }

    #[test]
    fn round_dyadic_cases() {
        assert_eq!(round_dyadic(&ratio(1, 3), 3), ratio(3, 8));
        assert_eq!(round_dyadic(&ratio(-1, 3), 3), ratio(-3, 8));
        assert_eq!(round_dyadic(&ratio(7, 16), 2), ratio(1, 2)); // tie: toward +inf
        assert_eq!(round_dyadic(&int(5), 4), int(5));
    }
}
