//! Euler's φ for single values and in bulk.

use super::factor::factorize;
use crate::error::{Error, MemoryBudget, Result};
use crate::prime::{isqrt, sieve_primes};

/// φ(n) via the factorization of `n`.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("φ(0) is undefined"));
    }
    Ok(factorize(n).phi())
}

/// φ(n) for every `n <= limit`, indexed by `n`; slot 0 holds 0.
///
/// Linear sieve over smallest prime factors.
pub fn phi_sieve(limit: u64) -> Result<Vec<u32>> {
    phi_sieve_with_budget(limit, MemoryBudget::DEFAULT)
}

pub fn phi_sieve_with_budget(limit: u64, budget: MemoryBudget) -> Result<Vec<u32>> {
    if limit == 0 {
        return Err(Error::domain("φ sieve limit must be >= 1"));
    }
    if limit > u32::MAX as u64 - 1 {
        return Err(Error::domain(format!("φ sieve limit {limit} exceeds 32-bit storage")));
    }
    // φ table plus the prime list, which holds fewer than limit / 4 entries past 100
    budget.check("φ sieve", (limit + 1) * 4 + (limit / 4 + 32) * 4)?;
    let n = limit as usize;
    let mut phi = vec![0u32; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    phi[1] = 1;
    for i in 2..=n {
        if phi[i] == 0 {
            phi[i] = (i - 1) as u32;
            primes.push(i as u32);
        }
        for &p in &primes {
            let ip = i * p as usize;
            if ip > n {
                break;
            }
            if i % p as usize == 0 {
                phi[ip] = phi[i] * p;
                break;
            }
            phi[ip] = phi[i] * (p - 1);
        }
    }
    Ok(phi)
}

/// Sieving primes for segmented φ over `[1, hi]`.
pub(crate) fn segment_primes(hi: u64) -> Result<Vec<u64>> {
    let r = isqrt(hi);
    if r < 2 {
        return Ok(Vec::new());
    }
    Ok(sieve_primes(r)?.primes().collect())
}

/// φ(n) for `n` in `[lo, lo + out.len())`, `lo >= 1`, given all primes up to
/// the square root of the segment's upper end.
pub(crate) fn phi_segment(lo: u64, primes: &[u64], rest: &mut Vec<u64>, out: &mut [u64]) {
    let len = out.len();
    rest.clear();
    rest.extend((0..len as u64).map(|k| lo + k));
    out.copy_from_slice(rest);
    let hi = lo + len as u64;
    for &p in primes {
        if p * p >= hi {
            break;
        }
        let mut j = (lo.div_ceil(p) * p - lo) as usize;
        while j < len {
            out[j] = out[j] / p * (p - 1);
            rest[j] /= p;
            while rest[j].is_multiple_of(p) {
                rest[j] /= p;
            }
            j += p as usize;
        }
    }
    for (v, &r) in out.iter_mut().zip(rest.iter()) {
        if r > 1 {
            *v = *v / r * (r - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_values() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(9).unwrap(), 6);
        assert_eq!(euler_phi(510_510).unwrap(), 92_160);
        assert_eq!(2 * 4 * 6 * 10 * 12 * 16, 92_160);
        assert_eq!(euler_phi(1 << 20).unwrap(), 1 << 19);
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn sieve_first_ten() {
        let phi = phi_sieve(10).unwrap();
        assert_eq!(&phi[1..], &[1, 1, 2, 2, 4, 2, 6, 4, 6, 4]);
        assert_eq!(phi_sieve(36).unwrap()[27], 18);
        assert_eq!(phi_sieve(1 << 20).unwrap()[1 << 20], 1 << 19);
        assert!(phi_sieve(0).is_err());
    }

    #[test]
    fn sieve_matches_pointwise() {
        let phi = phi_sieve(50_000).unwrap();
        for n in 1..=50_000u64 {
            assert_eq!(phi[n as usize] as u64, euler_phi(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn divisor_sum_identity() {
        let limit = 10_000usize;
        let phi = phi_sieve(limit as u64).unwrap();
        let mut sum = vec![0u64; limit + 1];
        for (d, &f) in phi.iter().enumerate().skip(1) {
            for m in (d..=limit).step_by(d) {
                sum[m] += f as u64;
            }
        }
        for (n, &s) in sum.iter().enumerate().skip(1) {
            assert_eq!(s, n as u64);
        }
    }

    #[test]
    fn segments_match_linear_sieve() {
        let limit = 30_000u64;
        let phi = phi_sieve(limit).unwrap();
        let primes = segment_primes(limit).unwrap();
        let mut rest = Vec::new();
        for (lo, len) in [(1u64, 1usize), (1, 100), (2, 7), (999, 1001), (12_345, 17_656)] {
            let mut out = vec![0; len];
            phi_segment(lo, &primes, &mut rest, &mut out);
            for (k, v) in out.iter().enumerate() {
                assert_eq!(*v, phi[lo as usize + k] as u64, "n = {}", lo as usize + k);
            }
        }
    }

    #[test]
    fn phi_is_even_beyond_two() {
        let phi = phi_sieve(10_000).unwrap();
        assert!(phi[3..].iter().all(|v| v % 2 == 0));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            phi_sieve_with_budget(1_000_000, MemoryBudget(1000)),
            Err(Error::Resource { .. })
        ));
    }
}
