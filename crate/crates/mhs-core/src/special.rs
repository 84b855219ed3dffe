//! Bernoulli and Euler numbers: exact values, a fast mod-p path via power
//! sums, and the von Staudt-Clausen denominator.
//!
//! The exact tables are append-only caches behind a mutex; fills are
//! idempotent so concurrent readers are fine. Exact Bernoulli numbers are
//! only ever needed up to index ~60 (desk-scale identities); every
//! congruence right-hand side goes through the mod-p power-sum route.

use crate::arith::{int, rat, Int, Rat};
use crate::modring::Mod;
use crate::primes;
use num_traits::{One, Zero};
use std::sync::Mutex;

static BERNOULLI: Mutex<Vec<Rat>> = Mutex::new(Vec::new());
static EULER: Mutex<Vec<Int>> = Mutex::new(Vec::new());

/// Exact `B_k` from the recurrence `sum_{j=0}^{n} C(n+1, j) B_j = 0`.
pub fn bernoulli_exact(k: u64) -> Rat {
    let mut table = BERNOULLI.lock().unwrap();
    if table.is_empty() {
        table.push(Rat::one());
    }
    while table.len() <= k as usize {
        let n = table.len() as i64;
        if n > 1 && n % 2 == 1 {
            table.push(Rat::zero());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += Rat::from_integer(crate::arith::binomial(n + 1, j as i64)) * b;
            }
        }
        table.push(-acc / rat(n + 1));
    }
    table[k as usize].clone()
}

/// Exact Euler number `E_{2m}` from `sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0`.
pub fn euler_exact(two_m: u64) -> Int {
    assert!(two_m % 2 == 0, "Euler numbers are indexed by even integers");
    let m = (two_m / 2) as usize;
    let mut table = EULER.lock().unwrap();
    if table.is_empty() {
        table.push(Int::one());
    }
    while table.len() <= m {
        let n = table.len() as i64;
        let mut acc = Int::zero();
        for (j, e) in table.iter().enumerate() {
            acc += crate::arith::binomial(2 * n, 2 * j as i64) * e;
        }
        table.push(-acc);
    }
    table[m].clone()
}

/// Denominator of `B_{2m}`: the product of primes `q` with `(q-1) | 2m`.
pub fn von_staudt_denominator(two_m: u64) -> Int {
    assert!(two_m >= 2 && two_m % 2 == 0);
    let mut acc = Int::one();
    for q in primes::primes_in(2, two_m + 1) {
        if two_m % (q - 1) == 0 {
            acc *= int(q as i64);
        }
    }
    acc
}

/// `B_m mod p` for even `2 <= m <= p-3`, via the power sum
/// `S = sum_{a=1}^{p-1} a^m mod p^2`, which satisfies `S ≡ p B_m (mod p^2)`.
///
/// Independent of [`bernoulli_exact`]: the two are cross-checked as oracles.
pub fn bernoulli_mod_p(p: u64, m: u64) -> Result<u64, &'static str> {
    if m % 2 != 0 || m < 2 || m > p.saturating_sub(3) {
        return Err("index must be even with 2 <= m <= p-3");
    }
    let m2 = Mod::new(p, 2);
    let mut s = 0u64;
    for a in 1..p {
        s = m2.add(s, m2.pow(a, m));
    }
    debug_assert_eq!(s % p, 0, "power sum must be divisible by p");
    Ok(s / p)
}

/// `B_{p-m} mod p` for odd `m` with `3 <= m <= p-2`; `B_1 = -1/2` when
/// `m = p-1` (the only non-even index a claim can reach).
pub fn bernoulli_top_mod_p(p: u64, m: u64) -> Result<u64, &'static str> {
    assert!(m < p, "B_{{p-m}} needs m < p");
    let idx = p - m;
    if idx == 1 {
        // B_1 = -1/2
        let m1 = Mod::new(p, 1);
        return Ok(m1.neg(m1.inv(2).map_err(|_| "p = 2")?));
    }
    if idx % 2 == 1 {
        return Ok(0); // B_odd = 0 for odd index > 1
    }
    bernoulli_mod_p(p, idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::modring::reduce_rational;
    use num_traits::Signed;

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli_exact(0), rat(1));
        assert_eq!(bernoulli_exact(1), ratio(-1, 2));
        assert_eq!(bernoulli_exact(2), ratio(1, 6));
        assert_eq!(bernoulli_exact(4), ratio(-1, 30));
        assert_eq!(bernoulli_exact(7), rat(0));
        assert_eq!(bernoulli_exact(12), ratio(-691, 2730));
    }

    #[test]
    fn euler_small_values() {
        assert_eq!(euler_exact(0), int(1));
        assert_eq!(euler_exact(2), int(-1));
        assert_eq!(euler_exact(4), int(5));
        assert_eq!(euler_exact(6), int(-61));
        assert_eq!(euler_exact(8), int(1385));
    }

    #[test]
    fn euler_signs_alternate() {
        for m in 0..=15u64 {
            let e = euler_exact(2 * m);
            assert_eq!(e.is_negative(), m % 2 == 1, "sign of E_{}", 2 * m);
        }
    }

    #[test]
    fn von_staudt_examples() {
        assert_eq!(von_staudt_denominator(2), int(6));
        assert_eq!(von_staudt_denominator(4), int(30));
        assert_eq!(von_staudt_denominator(12), int(2730));
    }

    #[test]
    fn von_staudt_matches_exact_denominators() {
        for two_m in (2..=60u64).step_by(2) {
            assert_eq!(
                bernoulli_exact(two_m).denom().clone(),
                von_staudt_denominator(two_m),
                "denominator of B_{two_m}"
            );
        }
    }

    #[test]
    fn power_sum_examples() {
        // sum a^4 over 1..=6 is 2275 = 49*46 + 21, and 21/7 = 3
        assert_eq!(bernoulli_mod_p(7, 4), Ok(3));
        let b8 = reduce_rational(&bernoulli_exact(8), 11, 1).unwrap().residue;
        assert_eq!(bernoulli_mod_p(11, 8), Ok(b8));
        assert_eq!(bernoulli_mod_p(5, 2), Ok(1)); // 1/6 ≡ 1 (mod 5)
    }

    #[test]
    fn power_sum_agrees_with_exact_reduction() {
        // the two independent algorithms agree on a broad sample
        for p in primes::primes_in(5, 60) {
            for m in (2..=(p - 3).min(40)).step_by(2) {
                let fast = bernoulli_mod_p(p, m).unwrap();
                let slow = reduce_rational(&bernoulli_exact(m), p, 1).unwrap().residue;
                assert_eq!(fast, slow, "p={p} m={m}");
            }
        }
    }

    #[test]
    fn top_index_edge_cases() {
        // B_{p-(p-1)} = B_1 = -1/2
        let m1 = Mod::new(7, 1);
        let half_neg = m1.neg(m1.inv(2).unwrap());
        assert_eq!(bernoulli_top_mod_p(7, 6), Ok(half_neg));
        // odd index > 1 vanishes
        assert_eq!(bernoulli_top_mod_p(11, 8), Ok(0));
    }
}
