//! Arithmetic in `Z/p^N` and in a truncated p-adic approximation ring.
//!
//! [`ModInt`] is a residue in `Z/p^N` for a prime `p` and `N <= 3` (the
//! deepest congruence checked anywhere is mod `p^3`). [`PAdic`] represents a
//! value `p^v * u` with `u` a unit known to some relative precision; additions
//! track the surviving absolute precision so that a verdict "``= 0 mod p^k``"
//! can fail loudly when fewer than `k` digits survived, instead of passing
//! silently.
//!
//! Sums whose terms contain `1/C(2k,k)` pick up valuation `-1` for
//! `(p-1)/2 < k <= p-1`; everything else in the crate stays p-integral.

use crate::arith::{int, int_valuation, Int, Rat};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ModError {
    #[error("p = {p} divides a denominator: value is not p-integral")]
    NotPIntegral { p: u64 },
    #[error("{x} is not a unit modulo {modulus}")]
    NotUnit { x: u64, modulus: u64 },
    #[error("mismatched moduli: {0} vs {1}")]
    MixedModuli(u64, u64),
    #[error("p-adic precision exhausted: need {need} digits, have {have}")]
    PrecisionExhausted { need: i64, have: i64 },
    #[error("division by (approximate) zero")]
    DivisionByZero,
}

/// A fixed modulus `p^nexp`. Operations on raw `u64` residues.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Mod {
    pub p: u64,
    pub nexp: u32,
    pub modulus: u64,
}

impl Mod {
    pub fn new(p: u64, nexp: u32) -> Self {
        assert!(nexp >= 1, "modulus exponent must be >= 1");
        let mut modulus = 1u64;
        for _ in 0..nexp {
            modulus = modulus.checked_mul(p).expect("p^nexp overflows u64");
        }
        Mod { p, nexp, modulus }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - b + a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by extended Euclid; errors when `gcd(x, p) != 1`.
    pub fn inv(&self, x: u64) -> Result<u64, ModError> {
        let (mut r0, mut r1) = (self.modulus as i128, (x % self.modulus) as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 != 1 {
            return Err(ModError::NotUnit {
                x,
                modulus: self.modulus,
            });
        }
        let m = self.modulus as i128;
        Ok(((s0 % m + m) % m) as u64)
    }

    pub fn inv_int(&self, k: i64) -> Result<u64, ModError> {
        self.inv(self.reduce_i64(k))
    }

    #[inline]
    pub fn reduce_i64(&self, x: i64) -> u64 {
        let m = self.modulus as i128;
        ((x as i128 % m + m) % m) as u64
    }

    pub fn reduce_int(&self, x: &Int) -> u64 {
        let m = int(self.modulus as i64);
        let r = x.mod_floor(&m);
        r.to_u64().expect("residue fits u64")
    }

    /// Residue of a p-integral rational; errors when `p` divides the
    /// denominator.
    pub fn reduce_rat(&self, x: &Rat) -> Result<u64, ModError> {
        let den = self.reduce_int(x.denom());
        if den % self.p == 0 {
            return Err(ModError::NotPIntegral { p: self.p });
        }
        let num = self.reduce_int(x.numer());
        Ok(self.mul(num, self.inv(den)?))
    }
}

/// A residue in `Z/p^nexp` carrying its modulus.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ModInt {
    pub residue: u64,
    pub m: Mod,
}

impl ModInt {
    pub fn new(residue: u64, m: Mod) -> Self {
        ModInt {
            residue: residue % m.modulus,
            m,
        }
    }

    fn same(&self, other: &ModInt) -> Result<(), ModError> {
        if self.m != other.m {
            return Err(ModError::MixedModuli(self.m.modulus, other.m.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModInt) -> Result<ModInt, ModError> {
        self.same(other)?;
        Ok(ModInt::new(self.m.add(self.residue, other.residue), self.m))
    }

    pub fn sub(&self, other: &ModInt) -> Result<ModInt, ModError> {
        self.same(other)?;
        Ok(ModInt::new(self.m.sub(self.residue, other.residue), self.m))
    }

    pub fn mul(&self, other: &ModInt) -> Result<ModInt, ModError> {
        self.same(other)?;
        Ok(ModInt::new(self.m.mul(self.residue, other.residue), self.m))
    }

    pub fn inv(&self) -> Result<ModInt, ModError> {
        Ok(ModInt::new(self.m.inv(self.residue)?, self.m))
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.m.modulus)
    }
}

/// Reduction of a p-integral rational into `Z/p^nexp`.
pub fn reduce_rational(r: &Rat, p: u64, nexp: u32) -> Result<ModInt, ModError> {
    let m = Mod::new(p, nexp);
    Ok(ModInt::new(m.reduce_rat(r)?, m))
}

/// Element of the truncated p-adic ring.
///
/// `Unit { v, unit, rel }` represents `p^v * (unit + O(p^rel))` with
/// `p ∤ unit`, i.e. the value is known to absolute precision `v + rel`.
/// `ApproxZero { abs }` means only `value = O(p^abs)` is known. `ExactZero`
/// is the distinguished exact zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PAdic {
    ExactZero {
        p: u64,
    },
    ApproxZero {
        p: u64,
        abs: i64,
    },
    Unit {
        p: u64,
        v: i64,
        unit: u64,
        rel: u32,
    },
}

impl PAdic {
    pub fn prime(&self) -> u64 {
        match *self {
            PAdic::ExactZero { p } | PAdic::ApproxZero { p, .. } | PAdic::Unit { p, .. } => p,
        }
    }

    pub fn exact_zero(p: u64) -> Self {
        PAdic::ExactZero { p }
    }

    fn require_same_prime(&self, other: &PAdic) -> Result<(), ModError> {
        if self.prime() != other.prime() {
            return Err(ModError::MixedModuli(self.prime(), other.prime()));
        }
        Ok(())
    }

    /// Known lower bound on the valuation.
    pub fn valuation_at_least(&self) -> Option<i64> {
        match *self {
            PAdic::ExactZero { .. } => None, // infinite
            PAdic::ApproxZero { abs, .. } => Some(abs),
            PAdic::Unit { v, .. } => Some(v),
        }
    }

    pub fn is_zero_like(&self) -> bool {
        !matches!(self, PAdic::Unit { .. })
    }

    pub fn add(&self, other: &PAdic) -> Result<PAdic, ModError> {
        self.require_same_prime(other)?;
        let p = self.prime();
        match (self, other) {
            (PAdic::ExactZero { .. }, x) | (x, PAdic::ExactZero { .. }) => Ok(x.clone()),
            (PAdic::ApproxZero { abs: a, .. }, PAdic::ApproxZero { abs: b, .. }) => {
                Ok(PAdic::ApproxZero {
                    p,
                    abs: (*a).min(*b),
                })
            }
            (PAdic::ApproxZero { abs, .. }, PAdic::Unit { v, unit, rel, .. })
            | (PAdic::Unit { v, unit, rel, .. }, PAdic::ApproxZero { abs, .. }) => {
                if *v >= *abs {
                    // the unknown O(p^abs) part swamps the unit
                    Ok(PAdic::ApproxZero { p, abs: *abs })
                } else {
                    let rel = (*rel as i64).min(abs - v) as u32;
                    Ok(PAdic::Unit {
                        p,
                        v: *v,
                        unit: *unit % pow_u64(p, rel),
                        rel,
                    })
                }
            }
            (
                PAdic::Unit {
                    v: v1,
                    unit: u1,
                    rel: r1,
                    ..
                },
                PAdic::Unit {
                    v: v2,
                    unit: u2,
                    rel: r2,
                    ..
                },
            ) => {
                let (v1, u1, r1, v2, u2, r2) = if v1 <= v2 {
                    (*v1, *u1, *r1, *v2, *u2, *r2)
                } else {
                    (*v2, *u2, *r2, *v1, *u1, *r1)
                };
                let abs = (v1 + r1 as i64).min(v2 + r2 as i64);
                let window = (abs - v1) as u32; // >= 1 since v2 >= v1
                let m = pow_u64(p, window);
                let shift = (v2 - v1) as u32;
                let shifted = if shift >= window {
                    0
                } else {
                    ((u2 as u128 * pow_u64(p, shift) as u128) % m as u128) as u64
                };
                let s = ((u1 % m) + shifted) % m;
                if s == 0 {
                    return Ok(PAdic::ApproxZero { p, abs });
                }
                let t = trailing_p(s, p);
                Ok(PAdic::Unit {
                    p,
                    v: v1 + t as i64,
                    unit: (s / pow_u64(p, t)) % pow_u64(p, window - t),
                    rel: window - t,
                })
            }
        }
    }

    pub fn neg(&self) -> PAdic {
        match *self {
            PAdic::Unit { p, v, unit, rel } => {
                let m = pow_u64(p, rel);
                PAdic::Unit {
                    p,
                    v,
                    unit: m - unit,
                    rel,
                }
            }
            ref z => z.clone(),
        }
    }

    pub fn sub(&self, other: &PAdic) -> Result<PAdic, ModError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PAdic) -> Result<PAdic, ModError> {
        self.require_same_prime(other)?;
        let p = self.prime();
        match (self, other) {
            (PAdic::ExactZero { .. }, _) | (_, PAdic::ExactZero { .. }) => {
                Ok(PAdic::ExactZero { p })
            }
            (PAdic::ApproxZero { abs: a, .. }, PAdic::ApproxZero { abs: b, .. }) => {
                Ok(PAdic::ApproxZero { p, abs: a + b })
            }
            (PAdic::ApproxZero { abs, .. }, PAdic::Unit { v, .. })
            | (PAdic::Unit { v, .. }, PAdic::ApproxZero { abs, .. }) => Ok(PAdic::ApproxZero {
                p,
                abs: abs + v,
            }),
            (
                PAdic::Unit {
                    v: v1,
                    unit: u1,
                    rel: r1,
                    ..
                },
                PAdic::Unit {
                    v: v2,
                    unit: u2,
                    rel: r2,
                    ..
                },
            ) => {
                let rel = (*r1).min(*r2);
                let m = pow_u64(p, rel);
                Ok(PAdic::Unit {
                    p,
                    v: v1 + v2,
                    unit: ((*u1 as u128 * *u2 as u128) % m as u128) as u64,
                    rel,
                })
            }
        }
    }

    pub fn inv(&self) -> Result<PAdic, ModError> {
        match *self {
            PAdic::Unit { p, v, unit, rel } => {
                let m = Mod::new(p, rel);
                Ok(PAdic::Unit {
                    p,
                    v: -v,
                    unit: m.inv(unit)?,
                    rel,
                })
            }
            _ => Err(ModError::DivisionByZero),
        }
    }

    /// Multiply by an exact nonzero rational (cheap scalar path).
    pub fn mul_rat(&self, x: &Rat, rel: u32) -> Result<PAdic, ModError> {
        self.mul(&to_padic(x, self.prime(), rel))
    }

    /// Residue mod `p^k`, defined when the value is p-integral and known to
    /// at least `k` digits.
    pub fn residue(&self, k: u32) -> Result<u64, ModError> {
        let p = self.prime();
        let m = pow_u64(p, k);
        match *self {
            PAdic::ExactZero { .. } => Ok(0),
            PAdic::ApproxZero { abs, .. } => {
                if abs >= k as i64 {
                    Ok(0)
                } else {
                    Err(ModError::PrecisionExhausted {
                        need: k as i64,
                        have: abs,
                    })
                }
            }
            PAdic::Unit { v, unit, rel, .. } => {
                if v < 0 {
                    return Err(ModError::NotPIntegral { p });
                }
                if v + (rel as i64) < k as i64 {
                    return Err(ModError::PrecisionExhausted {
                        need: k as i64,
                        have: v + rel as i64,
                    });
                }
                if v >= k as i64 {
                    return Ok(0);
                }
                Ok(((unit as u128 * pow_u64(p, v as u32) as u128) % m as u128) as u64)
            }
        }
    }

    /// Whether the value is `0 mod p^k`; errors when fewer than `k` digits
    /// are known.
    pub fn is_zero_mod(&self, k: u32) -> Result<bool, ModError> {
        match *self {
            PAdic::ExactZero { .. } => Ok(true),
            PAdic::ApproxZero { abs, .. } => {
                if abs >= k as i64 {
                    Ok(true)
                } else {
                    Err(ModError::PrecisionExhausted {
                        need: k as i64,
                        have: abs,
                    })
                }
            }
            PAdic::Unit { v, rel, .. } => {
                if v >= k as i64 {
                    Ok(true)
                } else if v + (rel as i64) >= k as i64 || v < 0 {
                    // enough digits to see a nonzero unit below p^k
                    Ok(false)
                } else {
                    Err(ModError::PrecisionExhausted {
                        need: k as i64,
                        have: v + rel as i64,
                    })
                }
            }
        }
    }
}

impl fmt::Display for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PAdic::ExactZero { .. } => write!(f, "0"),
            PAdic::ApproxZero { p, abs } => write!(f, "O({p}^{abs})"),
            PAdic::Unit { p, v, unit, rel } => {
                if v == 0 {
                    write!(f, "{unit} + O({p}^{rel})")
                } else {
                    write!(f, "{p}^{v}*{unit} + O({p}^{})", v + rel as i64)
                }
            }
        }
    }
}

fn pow_u64(p: u64, e: u32) -> u64 {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc.checked_mul(p).expect("p^e overflows u64");
    }
    acc
}

fn trailing_p(mut x: u64, p: u64) -> u32 {
    let mut t = 0;
    while x % p == 0 {
        x /= p;
        t += 1;
    }
    t
}

/// Exact rational -> truncated p-adic with full relative precision `rel`.
pub fn to_padic(r: &Rat, p: u64, rel: u32) -> PAdic {
    if r.is_zero() {
        return PAdic::ExactZero { p };
    }
    let vn = int_valuation(r.numer(), p) as i64;
    let vd = int_valuation(r.denom(), p) as i64;
    let pk = int(p as i64);
    let mut num = r.numer().clone();
    for _ in 0..vn {
        num /= &pk;
    }
    let mut den = r.denom().clone();
    for _ in 0..vd {
        den /= &pk;
    }
    let m = Mod::new(p, rel);
    let u = m.mul(
        m.reduce_int(&num),
        m.inv(m.reduce_int(&den)).expect("stripped denominator"),
    );
    PAdic::Unit {
        p,
        v: vn - vd,
        unit: u,
        rel,
    }
}

/// Lift a residue known mod `p^k` into the p-adic ring (absolute precision
/// `k`, valuation read off the residue).
pub fn padic_from_residue(residue: u64, p: u64, k: u32) -> PAdic {
    if residue == 0 {
        return PAdic::ApproxZero { p, abs: k as i64 };
    }
    let t = trailing_p(residue, p);
    PAdic::Unit {
        p,
        v: t as i64,
        unit: residue / pow_u64(p, t),
        rel: k - t,
    }
}

/// Fermat quotient `q_p(2) = (2^{p-1} - 1)/p`, stored mod `p^2`.
///
/// Invariant: `p * value ≡ 2^{p-1} - 1 (mod p^3)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct FermatQuotient {
    pub p: u64,
    pub value: u64,
}

/// `q_p(2) mod p^k` computed from `2^{p-1} mod p^{k+1}` by exact division.
pub fn fermat_quotient_mod(p: u64, k: u32) -> u64 {
    assert!(p % 2 == 1 && p > 2, "odd prime required");
    let big = Mod::new(p, k + 1);
    let pow = big.pow(2, p - 1);
    debug_assert_eq!(pow % p, 1);
    (pow - 1) / p
}

pub fn fermat_quotient(p: u64) -> FermatQuotient {
    FermatQuotient {
        p,
        value: fermat_quotient_mod(p, 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn reduce_rational_examples() {
        // 30 ≡ 2 (mod 7), 2^{-1} = 4, -4 ≡ 3
        assert_eq!(reduce_rational(&ratio(-1, 30), 7, 1).unwrap().residue, 3);
        assert_eq!(reduce_rational(&rat(0), 5, 2).unwrap().residue, 0);
        // 2*5 = 10 ≡ 1 (mod 9)
        assert_eq!(reduce_rational(&ratio(1, 2), 3, 2).unwrap().residue, 5);
        assert_eq!(
            reduce_rational(&ratio(1, 10), 5, 1),
            Err(ModError::NotPIntegral { p: 5 })
        );
    }

    #[test]
    fn reduce_rational_is_ring_hom() {
        let m = Mod::new(13, 2);
        let samples = [ratio(3, 7), ratio(-5, 11), ratio(22, 9), rat(4)];
        for a in &samples {
            for b in &samples {
                let lhs = m.reduce_rat(&(a + b)).unwrap();
                let rhs = m.add(m.reduce_rat(a).unwrap(), m.reduce_rat(b).unwrap());
                assert_eq!(lhs, rhs);
                let lhs = m.reduce_rat(&(a * b)).unwrap();
                let rhs = m.mul(m.reduce_rat(a).unwrap(), m.reduce_rat(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn to_padic_examples() {
        // 3/50 = 5^{-2} * 3/2, 3*inv(2) = 3*13 = 39 ≡ 14 (mod 25)
        assert_eq!(
            to_padic(&ratio(3, 50), 5, 2),
            PAdic::Unit {
                p: 5,
                v: -2,
                unit: 14,
                rel: 2
            }
        );
        assert_eq!(
            to_padic(&rat(7), 7, 2),
            PAdic::Unit {
                p: 7,
                v: 1,
                unit: 1,
                rel: 2
            }
        );
        assert_eq!(to_padic(&rat(0), 11, 1), PAdic::ExactZero { p: 11 });
    }

    #[test]
    fn padic_mul_and_add() {
        let a = PAdic::Unit {
            p: 5,
            v: -1,
            unit: 2,
            rel: 2,
        };
        let b = PAdic::Unit {
            p: 5,
            v: 1,
            unit: 3,
            rel: 2,
        };
        assert_eq!(
            a.mul(&b).unwrap(),
            PAdic::Unit {
                p: 5,
                v: 0,
                unit: 6,
                rel: 2
            }
        );

        let one = PAdic::Unit {
            p: 5,
            v: 0,
            unit: 1,
            rel: 2,
        };
        assert_eq!(one.add(&PAdic::ExactZero { p: 5 }).unwrap(), one);

        // cancellation: 5^{-1}(1 + 24) = 5^{-1} * 25 -> only O(5^1) is known
        let x = PAdic::Unit {
            p: 5,
            v: -1,
            unit: 1,
            rel: 2,
        };
        let y = PAdic::Unit {
            p: 5,
            v: -1,
            unit: 24,
            rel: 2,
        };
        assert_eq!(x.add(&y).unwrap(), PAdic::ApproxZero { p: 5, abs: 1 });
    }

    #[test]
    fn padic_partial_cancellation_tracks_precision() {
        // 7^0*(1+O(7^3)) + 7^0*(48+O(7^3)) = 49 = 7^2 * 1 with rel = 1
        let x = PAdic::Unit {
            p: 7,
            v: 0,
            unit: 1,
            rel: 3,
        };
        let y = PAdic::Unit {
            p: 7,
            v: 0,
            unit: 48,
            rel: 3,
        };
        assert_eq!(
            x.add(&y).unwrap(),
            PAdic::Unit {
                p: 7,
                v: 2,
                unit: 1,
                rel: 1
            }
        );
    }

    #[test]
    fn padic_inverse_roundtrip() {
        for q in [ratio(3, 50), ratio(-7, 4), rat(11), ratio(125, 6)] {
            let x = to_padic(&q, 5, 3);
            let xi = to_padic(&q.recip(), 5, 3);
            let prod = x.mul(&xi).unwrap();
            assert_eq!(prod.residue(3).unwrap(), 1);
            // and via PAdic::inv
            let prod2 = x.mul(&x.inv().unwrap()).unwrap();
            assert_eq!(prod2.residue(3).unwrap(), 1);
        }
    }

    #[test]
    fn padic_consistent_with_reduce_rational() {
        // p-integral values: residue extraction must agree with reduce_rational
        for q in [ratio(3, 7), ratio(22, 9), rat(49), ratio(-1, 30)] {
            for nexp in 1..=3u32 {
                let direct = reduce_rational(&q, 13, nexp).unwrap().residue;
                let via_padic = to_padic(&q, 13, nexp).residue(nexp).unwrap();
                assert_eq!(direct, via_padic);
            }
        }
        // positive valuation: p^v * u at relative precision N determines the
        // value mod p^{v+k} for every k <= N
        for (q, p) in [(ratio(49, 3), 7u64), (ratio(-50, 7), 5), (rat(121), 11)] {
            for nexp in 1..=3u32 {
                let pad = to_padic(&q, p, nexp);
                let v = match pad {
                    PAdic::Unit { v, .. } => v as u32,
                    _ => panic!("expected unit"),
                };
                for k in 1..=(v + nexp) {
                    let direct = reduce_rational(&q, p, k).unwrap().residue;
                    assert_eq!(pad.residue(k).unwrap(), direct, "q={q} p={p} k={k}");
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn prop_padic_ring_homomorphism(
            an in -40i64..=40, ad in 1i64..=40, bn in -40i64..=40, bd in 1i64..=40
        ) {
            let p = 7u64;
            let a = crate::arith::ratio(an, ad);
            let b = crate::arith::ratio(bn, bd);
            let pa = to_padic(&a, p, 3);
            let pb = to_padic(&b, p, 3);
            let sum = pa.add(&pb).unwrap();
            let prod = pa.mul(&pb).unwrap();
            let exact_sum = to_padic(&(&a + &b), p, 3);
            let exact_prod = to_padic(&(&a * &b), p, 3);
            // compare every residue both sides can produce
            for k in 1..=3u32 {
                if let (Ok(x), Ok(y)) = (sum.residue(k), exact_sum.residue(k)) {
                    proptest::prop_assert_eq!(x, y, "add at k={}", k);
                }
                if let (Ok(x), Ok(y)) = (prod.residue(k), exact_prod.residue(k)) {
                    proptest::prop_assert_eq!(x, y, "mul at k={}", k);
                }
            }
        }
    }

    #[test]
    fn residue_precision_guard() {
        let x = PAdic::ApproxZero { p: 5, abs: 1 };
        assert_eq!(x.residue(1), Ok(0));
        assert_eq!(
            x.residue(2),
            Err(ModError::PrecisionExhausted { need: 2, have: 1 })
        );
        // a zero-mod verdict past the retained digits must error, not pass
        assert_eq!(x.is_zero_mod(1), Ok(true));
        assert_eq!(
            x.is_zero_mod(2),
            Err(ModError::PrecisionExhausted { need: 2, have: 1 })
        );
        let u = PAdic::Unit { p: 5, v: 1, unit: 2, rel: 1 };
        assert_eq!(u.is_zero_mod(1), Ok(true));
        assert_eq!(u.is_zero_mod(2), Ok(false));
        assert_eq!(
            u.is_zero_mod(3),
            Err(ModError::PrecisionExhausted { need: 3, have: 2 })
        );
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(7).value, 9); // (2^6-1)/7 = 9
        assert_eq!(fermat_quotient(3).value, 1); // (4-1)/3 = 1
        assert_eq!(fermat_quotient(5).value, 3); // (16-1)/5 = 3
    }

    #[test]
    fn fermat_quotient_invariant() {
        for p in crate::primes::primes_in(3, 100) {
            let q = fermat_quotient(p);
            let m3 = Mod::new(p, 3);
            let lhs = m3.mul(p % m3.modulus, q.value % m3.modulus);
            let rhs = m3.sub(m3.pow(2, p - 1), 1);
            assert_eq!(lhs, rhs, "invariant failed at p={p}");
        }
    }
}
