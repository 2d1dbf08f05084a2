//! Integer factorization for `u64`: trial division by a cached prime table,
//! then Pollard's rho (Brent's variant) for large cofactors.

use std::sync::OnceLock;

use serde::Serialize;

use crate::prime::{is_prime, mul_mod, sieve_primes};

const SMALL_PRIME_LIMIT: u64 = 1 << 20;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        sieve_primes(SMALL_PRIME_LIMIT)
            .expect("static sieve limit")
            .primes()
            .map(|p| p as u32)
            .collect()
    })
}

/// A positive integer with its prime factorization, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// Exponent of `p` in the value, zero if `p` does not divide it.
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// `∏ p^(e-1) (p - 1)`.
    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }
}

/// Factors `n >= 1`; `factorize(1)` has no factors.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n > 0, "cannot factor zero");
    let mut rest = n;
    let mut factors = Vec::new();
    for &p in small_primes() {
        let p = p as u64;
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        if rest < SMALL_PRIME_LIMIT * SMALL_PRIME_LIMIT || is_prime(rest) {
            factors.push((rest, 1));
        } else {
            let mut big = Vec::new();
            split_large(rest, &mut big);
            big.sort_unstable();
            for p in big {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }
    Factorization { value: n, factors }
}

// n has no prime factor below SMALL_PRIME_LIMIT.
fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nontrivial factor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    let f = |x: u64, c: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
    for c in 1.. {
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const M: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..M.min(r - k) {
                    y = f(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += M;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys, c);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: u64) {
        let f = factorize(n);
        let mut prod = 1u64;
        let mut prev = 1;
        for &(p, e) in &f.factors {
            assert!(p > prev, "factors of {n} not increasing");
            assert!(is_prime(p), "{p} in factorization of {n} is not prime");
            assert!(e >= 1);
            prod = prod.checked_mul(p.pow(e)).unwrap();
            prev = p;
        }
        assert_eq!(prod, n);
    }

    #[test]
    fn small_values() {
        assert!(factorize(1).factors.is_empty());
        assert_eq!(factorize(12).factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(510_510).omega(), 7);
        for n in 1..20_000 {
            check(n);
        }
    }

    #[test]
    fn large_semiprimes_and_powers() {
        check(4_294_967_291 * 4_294_967_279);
        check(1_000_000_007 * 998_244_353);
        check(18_446_744_073_709_551_557);
        check(u64::MAX);
        check(3u64.pow(40));
        check(1_048_583u64 * 1_048_583 * 1_048_589);
        check((1u64 << 63) + 1);
    }

    #[test]
    fn valuation() {
        let f = factorize(2 * 27 * 5);
        assert_eq!(f.valuation(3), 3);
        assert_eq!(f.valuation(7), 0);
    }
}
