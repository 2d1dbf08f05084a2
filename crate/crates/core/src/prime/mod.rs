//! Sieving, primality, prime counting and prime-power totients.

mod powers;
mod primality;
mod sieve;

pub use powers::{iroot, prime_power_phi, prime_power_totients, PrimePowerTotient, PrimePowerTotients};
pub use primality::is_prime;
pub(crate) use primality::mul_mod;
pub use sieve::{isqrt, sieve_primes, PrimeTable, Primes, SieveBuilder, DEFAULT_SEGMENT_BYTES};

use crate::error::{Error, Result};

/// π(x), the number of primes not exceeding `x`.
pub fn prime_count(x: u64) -> Result<u64> {
    if x < 2 {
        return Ok(0);
    }
    Ok(sieve_primes(x)?.count())
}

/// π(x; modulus, residue).
pub fn prime_count_residue(x: u64, modulus: u64, residue: u64) -> Result<u64> {
    if modulus == 0 || residue >= modulus {
        return Err(Error::domain(format!(
            "residue {residue} must lie in [0, {modulus})"
        )));
    }
    if x < 2 {
        return Ok(0);
    }
    sieve_primes(x)?.count_residue(x, modulus, residue)
}

/// Prime pairs `(p, p + gap)` with `p + gap <= x`.
pub fn cousin_pairs(x: u64, gap: u64) -> Result<Vec<(u64, u64)>> {
    if gap < 2 || !gap.is_multiple_of(2) {
        return Err(Error::domain(format!("gap must be even and >= 2, got {gap}")));
    }
    if x < 2 + gap {
        return Ok(Vec::new());
    }
    let table = sieve_primes(x)?;
    Ok(prime_pairs_in(&table, x, gap))
}

/// Number of prime pairs `(p, p + gap)` with `p + gap <= x`.
pub fn cousin_pair_count(x: u64, gap: u64) -> Result<u64> {
    cousin_pairs(x, gap).map(|v| v.len() as u64)
}

pub(crate) fn prime_pairs_in(table: &PrimeTable, x: u64, gap: u64) -> Vec<(u64, u64)> {
    table
        .primes()
        .take_while(|&p| p + gap <= x)
        .filter(|&p| table.bit(p + gap))
        .map(|p| (p, p + gap))
        .collect()
}
