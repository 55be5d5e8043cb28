//! Coefficient ring abstraction and small exact-integer helpers.
//!
//! The polynomial and series containers in this crate are generic over a
//! commutative coefficient ring.  [`Coeff`] collects the `num-traits` bounds
//! they need plus one extra operation: multiplication by an exact rational
//! scalar, which is how formal logarithms and exponential generating
//! functions divide by integers without leaving the ring's representation.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring usable as the coefficient domain of polynomials and
/// truncated power series.  Implemented by `BigRational` and by the
/// polynomial and rational-function types of this crate.
pub trait Coeff:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Multiplies by an exact rational scalar.
    fn scale(&self, factor: &BigRational) -> Self;
}

impl Coeff for BigRational {
    fn scale(&self, factor: &BigRational) -> Self {
        self * factor
    }
}

/// `n` as a `BigInt`.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `n` as a `BigRational`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as a `BigInt`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= int(i as i64);
    }
    acc
}

/// Binomial coefficient with the convention `C(a, b) = 0` whenever
/// `b < 0` or `b > a`; `a` itself may be any integer (so `C(2, -1) = 0`
/// but `C(-1, 2) = 1` never arises in this crate's call sites, which all
/// have `a >= 0`).
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * int(a - i) / int(i + 1);
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-t+1)` with `t` factors.
pub fn falling(x: i64, t: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..t as i64 {
        acc *= int(x - i);
    }
    acc
}

/// Moebius function, by trial factorization.  Zero on non-squarefree input.
pub fn moebius(n: u64) -> i64 {
    assert!(n > 0, "moebius is defined on positive integers");
    let mut n = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut ds: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    ds.sort_unstable();
    ds
}

/// gcd of a slice of nonnegative integers; zero entries are ignored.
/// Returns 0 only when every entry is zero.
pub fn gcd_all(values: &[u32]) -> u32 {
    values
        .iter()
        .fold(0u32, |acc, &v| num_integer::gcd(acc, v))
}

/// True when the rational is an integer.
pub fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

/// Extracts an integer from a rational, panicking when it is not one.
/// Used where integrality has already been verified or is asserted.
pub fn to_integer(r: &BigRational) -> BigInt {
    assert!(is_integer(r), "expected an integer, got {r}");
    r.numer().clone()
}

/// True when the rational is a nonnegative integer.
pub fn is_count(r: &BigRational) -> bool {
    is_integer(r) && !r.is_negative()
}
