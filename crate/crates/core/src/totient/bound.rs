//! A provable search bound for φ-preimages.
//!
//! Let `P_j` be the product of the first `j` primes. If `n` has `ω` distinct
//! prime factors `q_1 < ... < q_ω`, then `q_i >= p_i` (the `i`-th prime), so
//!
//! * `φ(n) >= ∏ (q_i - 1) >= ∏ (p_i - 1) = φ(P_ω)`, and
//! * `φ(n)/n = ∏ (1 - 1/q_i) >= ∏ (1 - 1/p_i) = φ(P_ω)/P_ω`.
//!
//! Take `J` maximal with `φ(P_J) <= x`. `φ(n) <= x` forces `φ(P_ω) <= x`,
//! hence `ω <= J`; since `φ(P_j)/P_j` decreases in `j`,
//! `n = φ(n) / (φ(n)/n) <= x P_J / φ(P_J)`.

use crate::prime::is_prime;

/// Largest `J` with `φ(P_J) <= x`, together with `P_J` and `φ(P_J)`.
pub fn primorial_index(x: u64) -> (u32, u128, u128) {
    let (mut j, mut primorial, mut phi) = (0u32, 1u128, 1u128);
    let mut p = 2u64;
    loop {
        let next_phi = phi * (p as u128 - 1);
        if next_phi > x as u128 {
            return (j, primorial, phi);
        }
        j += 1;
        primorial *= p as u128;
        phi = next_phi;
        p += 1;
        while !is_prime(p) {
            p += 1;
        }
    }
}

/// `N` such that `φ(n) <= x` implies `n <= N`, saturating at `u64::MAX`.
pub fn preimage_bound(x: u64) -> u64 {
    let (_, primorial, phi) = primorial_index(x);
    (x as u128)
        .checked_mul(primorial)
        .and_then(|v| u64::try_from(v.div_ceil(phi)).ok())
        .unwrap_or(u64::MAX)
}
