//! Prime generation for sweep ranges.

/// Primes in `lo..=hi`, ascending, via a plain sieve.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for q in 2..=n {
        if !composite[q] {
            if (q as u64) >= lo {
                out.push(q as u64);
            }
            let mut m = q * q;
            while m <= n {
                composite[m] = true;
                m += q;
            }
        }
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_in(5, 300);
        let trial: Vec<u64> = (5..=300).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
        assert_eq!(sieved.len(), 60);
    }

    #[test]
    fn inclusive_bounds() {
        assert_eq!(primes_in(11, 13), vec![11, 13]);
        assert!(primes_in(24, 28).is_empty());
    }
}
