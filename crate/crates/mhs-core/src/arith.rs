//! Arbitrary-precision integer/rational primitives: generalized binomial
//! coefficients, factorials, and shifted factorials.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator, so equality of values is plain
//! structural equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Binomial coefficient `C(r, k)` with an arbitrary (possibly negative)
/// integer upper index: the falling-factorial product
/// `r(r-1)...(r-k+1)/k!` for `k >= 0`, and `0` for `k < 0`.
pub fn binomial(r: i64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    if k == 0 {
        return Int::one();
    }
    // For r >= 0 and k > r the product hits zero; the loop handles it.
    let mut num = Int::one();
    for i in 0..k {
        num *= int(r - i);
        if num.is_zero() {
            return num;
        }
    }
    let den = factorial(k as u64);
    // A product of k consecutive integers is divisible by k!.
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero());
    q
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= int(i as i64);
    }
    acc
}

/// Shifted factorial `(c)_k = c(c+1)...(c+k-1)`, with `(c)_0 = 1`.
pub fn shifted_factorial(c: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= c + rat(i as i64);
    }
    acc
}

/// `base^exp` for a signed exponent; `exp < 0` requires `base != 0`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let mut acc = Rat::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(x: &Int, p: u64) -> u32 {
    assert!(!x.is_zero());
    let p = int(p as i64);
    let mut v = 0;
    let mut cur = x.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&cur, &p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

/// p-adic valuation of a nonzero rational (negative when p divides the
/// denominator).
pub fn rat_valuation(x: &Rat, p: u64) -> i64 {
    assert!(!x.is_zero());
    int_valuation(x.numer(), p) as i64 - int_valuation(x.denom(), p) as i64
}
