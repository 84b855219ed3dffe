//! Scaled-integer high-precision reals with conservative error tracking.
//!
//! A [`FixedDecimal`] is `mant * 10^{-scale}` together with an error bound in
//! units of the last place. Every operation grows the bound conservatively;
//! comparisons must state the tracked bounds, so nothing is ever compared
//! "to machine precision" implicitly.

use crate::arith::{int, Int, Rat};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct FixedDecimal {
    pub mant: Int,
    pub scale: u32,
    /// `|true value - mant*10^-scale| <= err * 10^-scale`
    pub err: Int,
}

fn pow10(e: u32) -> Int {
    int(10).pow(e)
}

impl FixedDecimal {
    pub fn zero(scale: u32) -> Self {
        FixedDecimal {
            mant: Int::zero(),
            scale,
            err: Int::zero(),
        }
    }

    /// Rounds a rational to the scale; the bound notes the (at most one-ulp)
    /// rounding, or is zero when the value is exactly representable.
    pub fn from_rat(q: &Rat, scale: u32) -> Self {
        let scaled = q * Rat::from_integer(pow10(scale));
        let (quot, rem) = scaled.numer().div_rem(scaled.denom());
        let two_rem = rem.abs() * int(2);
        let mut mant = quot;
        if two_rem >= *scaled.denom() {
            if scaled.numer().is_negative() {
                mant -= 1;
            } else {
                mant += 1;
            }
        }
        let err = if rem.is_zero() { Int::zero() } else { Int::from(1) };
        FixedDecimal { mant, scale, err }
    }

    pub fn add(&self, other: &FixedDecimal) -> FixedDecimal {
        assert_eq!(self.scale, other.scale, "mixed scales");
        FixedDecimal {
            mant: &self.mant + &other.mant,
            scale: self.scale,
            err: &self.err + &other.err,
        }
    }

    pub fn sub(&self, other: &FixedDecimal) -> FixedDecimal {
        assert_eq!(self.scale, other.scale, "mixed scales");
        FixedDecimal {
            mant: &self.mant - &other.mant,
            scale: self.scale,
            err: &self.err + &other.err,
        }
    }

    pub fn neg(&self) -> FixedDecimal {
        FixedDecimal {
            mant: -&self.mant,
            scale: self.scale,
            err: self.err.clone(),
        }
    }

    pub fn mul(&self, other: &FixedDecimal) -> FixedDecimal {
        assert_eq!(self.scale, other.scale, "mixed scales");
        let unit = pow10(self.scale);
        let prod = &self.mant * &other.mant;
        let mant = round_div(&prod, &unit);
        // |a| eb + |b| ea + ea eb, rescaled, plus the rounding ulp
        let raw =
            self.mant.abs() * &other.err + other.mant.abs() * &self.err + &self.err * &other.err;
        let err = raw.div_ceil(&unit) + 1;
        FixedDecimal {
            mant,
            scale: self.scale,
            err,
        }
    }

    /// Multiply by an exact rational.
    pub fn mul_rat(&self, q: &Rat) -> FixedDecimal {
        let num = &self.mant * q.numer();
        let mant = round_div(&num, q.denom());
        let qa = q.abs();
        let err_raw = &self.err * qa.numer();
        let err = err_raw.div_ceil(qa.denom()) + 1;
        FixedDecimal {
            mant,
            scale: self.scale,
            err,
        }
    }

    /// Widens the error bound by `extra` ulps (tail bounds, truncation).
    pub fn add_err(&mut self, extra: Int) {
        assert!(!extra.is_negative());
        self.err += extra;
    }

    /// Widens the error bound by a rational amount (in value units).
    pub fn add_err_value(&mut self, bound: &Rat) {
        assert!(!bound.is_negative());
        let ulps = bound * Rat::from_integer(pow10(self.scale));
        self.err += ulps.numer().div_ceil(ulps.denom());
    }

    /// `|self - other| <= 10^{-digits}` with both tracked bounds charged
    /// against the tolerance. Also returns `(diff + bounds)/tolerance`.
    pub fn agrees_to(&self, other: &FixedDecimal, digits: u32) -> (bool, Rat) {
        assert_eq!(self.scale, other.scale);
        assert!(digits <= self.scale);
        let diff = (&self.mant - &other.mant).abs() + &self.err + &other.err;
        let tol = pow10(self.scale - digits);
        let achieved = Rat::new(diff.clone(), tol.clone());
        (diff <= tol, achieved)
    }

    /// Approximate value for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal_string(self.scale.min(17))
            .parse()
            .unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` fractional digits (truncating guard
    /// digits, not the tracked error).
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let digits = digits.min(self.scale);
        let drop = self.scale - digits;
        let scaled = round_div(&self.mant, &pow10(drop));
        let unit = pow10(digits);
        let (ip, fp) = scaled.abs().div_rem(&unit);
        let sign = if scaled.is_negative() { "-" } else { "" };
        let frac = fp.to_string();
        let pad = "0".repeat(digits as usize - frac.len());
        format!("{sign}{ip}.{pad}{frac}")
    }

    /// Error bound as a short decimal string in value units.
    pub fn err_string(&self) -> String {
        let e = self.err.to_f64().unwrap_or(f64::INFINITY);
        format!("{:.2e}", e * 10f64.powi(-(self.scale as i32)))
    }
}

fn round_div(num: &Int, den: &Int) -> Int {
    let (q, r) = num.div_rem(den);
    let two_r = r.abs() * int(2);
    if two_r >= den.abs() {
        if num.is_negative() != den.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn from_rat_rounding() {
        let x = FixedDecimal::from_rat(&ratio(1, 3), 5);
        assert_eq!(x.mant, int(33333));
        assert_eq!(x.err, int(1));
        let y = FixedDecimal::from_rat(&ratio(1, 4), 4);
        assert_eq!(y.mant, int(2500));
        assert_eq!(y.err, int(0));
        let z = FixedDecimal::from_rat(&ratio(-2, 3), 3);
        assert_eq!(z.mant, int(-667));
    }

    #[test]
    fn arithmetic_tracks_errors() {
        let a = FixedDecimal::from_rat(&ratio(1, 3), 10);
        let b = FixedDecimal::from_rat(&ratio(1, 6), 10);
        let s = a.add(&b);
        let half = FixedDecimal::from_rat(&ratio(1, 2), 10);
        let (ok, _) = s.agrees_to(&half, 9);
        assert!(ok);

        let p = a.mul(&b);
        let exact = FixedDecimal::from_rat(&ratio(1, 18), 10);
        let (ok, _) = p.agrees_to(&exact, 9);
        assert!(ok);
    }

    #[test]
    fn disagreement_detected() {
        let a = FixedDecimal::from_rat(&ratio(1, 3), 12);
        let b = FixedDecimal::from_rat(&(ratio(1, 3) + ratio(1, 100000)), 12);
        let (ok, _) = a.agrees_to(&b, 8);
        assert!(!ok);
    }

    #[test]
    fn rendering() {
        let x = FixedDecimal::from_rat(&ratio(355, 113), 12);
        assert!(x.to_decimal_string(6).starts_with("3.14159"));
        let y = FixedDecimal::from_rat(&ratio(-1, 8), 6);
        assert_eq!(y.to_decimal_string(3), "-0.125");
    }
}
