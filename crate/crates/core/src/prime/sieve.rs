//! Segmented, odd-only, bit-packed sieve of Eratosthenes.

use crate::error::{Error, MemoryBudget, Result};

/// Default segment size in bytes of flags; sized to stay cache resident.
pub const DEFAULT_SEGMENT_BYTES: usize = 1 << 18;

/// Membership table for the primes in `[2, limit]`.
///
/// Bit `i` of the storage represents the odd number `2i + 1`; the prime 2 is
/// implicit.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    words: Vec<u64>,
    count: u64,
}

impl std::fmt::Debug for PrimeTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PrimeTable")
            .field("limit", &self.limit)
            .field("count", &self.count)
            .finish()
    }
}

/// Sieves the primes up to `limit` inclusive with default settings.
pub fn sieve_primes(limit: u64) -> Result<PrimeTable> {
    SieveBuilder::new(limit).build()
}

#[derive(Debug, Clone)]
pub struct SieveBuilder {
    limit: u64,
    segment_bytes: usize,
    budget: MemoryBudget,
}

impl SieveBuilder {
    pub fn new(limit: u64) -> Self {
        SieveBuilder {
            limit,
            segment_bytes: DEFAULT_SEGMENT_BYTES,
            budget: MemoryBudget::DEFAULT,
        }
    }

    pub fn segment_bytes(mut self, bytes: usize) -> Self {
        self.segment_bytes = bytes.max(8);
        self
    }

    pub fn budget(mut self, budget: MemoryBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn build(self) -> Result<PrimeTable> {
        let limit = self.limit;
        if limit < 2 {
            return Err(Error::domain(format!("sieve limit must be >= 2, got {limit}")));
        }
        let bits = limit / 2 + 1; // odd numbers 1, 3, ..., <= limit (+ slack)
        let nwords = bits.div_ceil(64);
        self.budget.check("prime table", nwords.saturating_mul(8))?;
        let nwords = usize::try_from(nwords)
            .map_err(|_| Error::domain("sieve limit exceeds address space"))?;

        let base = base_primes(isqrt(limit));
        let mut words = vec![!0u64; nwords];
        let seg_words = (self.segment_bytes / 8).max(1);
        for (seg, chunk) in words.chunks_mut(seg_words).enumerate() {
            let lo = (seg * seg_words * 64) as u64;
            sieve_segment(chunk, lo, &base);
        }

        words[0] &= !1; // 1 is not prime
        let used_bits = limit.div_ceil(2); // indices of odd n <= limit
        let tail = (used_bits % 64) as u32;
        let last = (used_bits / 64) as usize;
        if tail != 0 {
            words[last] &= (1u64 << tail) - 1;
        }
        for w in words.iter_mut().skip(last + usize::from(tail != 0)) {
            *w = 0;
        }

        let count = 1 + words.iter().map(|w| w.count_ones() as u64).sum::<u64>();
        Ok(PrimeTable { limit, words, count })
    }
}

/// Clears composite odd numbers in one segment whose first bit index is `lo`.
fn sieve_segment(chunk: &mut [u64], lo: u64, base: &[u64]) {
    let hi = lo + chunk.len() as u64 * 64;
    for &p in base {
        // index of p*p is (p*p - 1) / 2; successive odd multiples step by p
        let first = (p * p - 1) / 2;
        if first >= hi {
            break;
        }
        let mut idx = if first >= lo {
            first
        } else {
            let r = (lo - first) % p;
            if r == 0 {
                lo
            } else {
                lo + (p - r)
            }
        };
        while idx < hi {
            let off = idx - lo;
            chunk[(off / 64) as usize] &= !(1u64 << (off % 64));
            idx += p;
        }
    }
}

/// Odd primes up to `n` by a plain sieve.
fn base_primes(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    let mut i = 3;
    while i <= n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += 2 * i;
            }
        }
        i += 2;
    }
    out
}

/// Floor of the square root, exact for all `u64`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Number of primes in the table.
    pub fn count(&self) -> u64 {
        self.count
    }

    /// Membership; `n` outside `[2, limit]` is an error.
    pub fn contains(&self, n: u64) -> Result<bool> {
        if n < 2 || n > self.limit {
            return Err(Error::domain(format!(
                "{n} is outside the table range [2, {}]",
                self.limit
            )));
        }
        Ok(self.bit(n))
    }

    /// Unchecked membership for `2 <= n <= limit`.
    #[inline]
    pub(crate) fn bit(&self, n: u64) -> bool {
        debug_assert!(n >= 2 && n <= self.limit);
        if n & 1 == 0 {
            return n == 2;
        }
        let i = n / 2;
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    /// π(x) for `x <= limit`; larger `x` is an error.
    pub fn count_upto(&self, x: u64) -> Result<u64> {
        if x > self.limit {
            return Err(Error::domain(format!(
                "count bound {x} exceeds table limit {}",
                self.limit
            )));
        }
        if x < 2 {
            return Ok(0);
        }
        let bits = x.div_ceil(2);
        let full = (bits / 64) as usize;
        let mut c: u64 = self.words[..full].iter().map(|w| w.count_ones() as u64).sum();
        let tail = bits % 64;
        if tail != 0 {
            c += (self.words[full] & ((1u64 << tail) - 1)).count_ones() as u64;
        }
        Ok(c + 1)
    }

    /// π(x; modulus, residue) for `x <= limit`.
    pub fn count_residue(&self, x: u64, modulus: u64, residue: u64) -> Result<u64> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::domain(format!(
                "residue {residue} must lie in [0, {modulus})"
            )));
        }
        if x > self.limit {
            return Err(Error::domain(format!(
                "count bound {x} exceeds table limit {}",
                self.limit
            )));
        }
        Ok(self
            .primes()
            .take_while(|&p| p <= x)
            .filter(|p| p % modulus == residue)
            .count() as u64)
    }

    /// Primes in ascending order.
    pub fn primes(&self) -> Primes<'_> {
        Primes {
            table: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
            emitted_two: false,
        }
    }
}

pub struct Primes<'a> {
    table: &'a PrimeTable,
    word: usize,
    bits: u64,
    emitted_two: bool,
}

impl Iterator for Primes<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if !self.emitted_two {
            self.emitted_two = true;
            return Some(2);
        }
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as u64;
                self.bits &= self.bits - 1;
                return Some(2 * (self.word as u64 * 64 + b) + 1);
            }
            self.word += 1;
            self.bits = *self.table.words.get(self.word)?;
        }
    }
}
