//! Enumeration of totients of odd prime powers, `φ(p^i) = p^(i-1) (p - 1)`.

use serde::Serialize;

use super::sieve::{isqrt, sieve_primes};
use crate::error::{Error, Result};

/// One odd prime power `p^exponent` together with its totient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimePowerTotient {
    pub p: u64,
    pub exponent: u32,
    pub value: u64,
}

impl PrimePowerTotient {
    /// `p^exponent` itself, if it fits.
    pub fn power(&self) -> Option<u64> {
        self.p.checked_pow(self.exponent)
    }
}

/// `p^(i-1) (p - 1)` with overflow reported as `None`.
pub fn prime_power_phi(p: u64, i: u32) -> Option<u64> {
    if i == 0 {
        return Some(1);
    }
    p.checked_pow(i - 1)?.checked_mul(p - 1)
}

/// Largest `q` with `q^k <= n`, exact.
pub fn iroot(n: u64, k: u32) -> u64 {
    match k {
        0 => panic!("zeroth root"),
        1 => return n,
        2 => return isqrt(n),
        _ => {}
    }
    let mut r = (n as f64).powf(1.0 / k as f64) as u64;
    while r > 0 && r.checked_pow(k).is_none_or(|v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}

/// All `(p, i, φ(p^i))` with `p` an odd prime, `i >= min_exponent` and
/// `φ(p^i) <= x`, ordered by `p` then `i`.
///
/// Since `p - 1 >= 2`, any emitted `p` satisfies `2 p^(min_exponent-1) <= x`,
/// so only primes up to `(x/2)^(1/(min_exponent-1))` are sieved.
pub fn prime_power_totients(x: u64, min_exponent: u32) -> Result<PrimePowerTotients> {
    if x < 2 {
        return Err(Error::domain(format!("prime power bound must be >= 2, got {x}")));
    }
    if min_exponent < 2 {
        return Err(Error::domain(format!(
            "minimum exponent must be >= 2, got {min_exponent}"
        )));
    }
    let bound = iroot(x / 2, min_exponent - 1);
    let primes = if bound >= 3 {
        sieve_primes(bound)?.primes().skip(1).collect()
    } else {
        Vec::new()
    };
    Ok(PrimePowerTotients {
        x,
        min_exponent,
        primes,
        pos: 0,
        exponent: min_exponent,
    })
}

/// Iterator returned by [`prime_power_totients`].
#[derive(Debug, Clone)]
pub struct PrimePowerTotients {
    x: u64,
    min_exponent: u32,
    primes: Vec<u64>,
    pos: usize,
    exponent: u32,
}

impl Iterator for PrimePowerTotients {
    type Item = PrimePowerTotient;

    fn next(&mut self) -> Option<PrimePowerTotient> {
        while let Some(&p) = self.primes.get(self.pos) {
            // an overflowing value exceeds every u64 bound, so it ends this p
            match prime_power_phi(p, self.exponent) {
                Some(value) if value <= self.x => {
                    let item = PrimePowerTotient {
                        p,
                        exponent: self.exponent,
                        value,
                    };
                    self.exponent += 1;
                    return Some(item);
                }
                _ => {
                    self.pos += 1;
                    self.exponent = self.min_exponent;
                }
            }
        }
        None
    }
}
