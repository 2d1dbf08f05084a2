//! Fast classification of values `m ≡ 2 (mod 4)` by multiplicity.
//!
//! Every preimage of such an `m` is `p^k` or `2 p^k` for one odd prime `p`,
//! and `x = 2 p^k` solves `φ(x) = m` exactly when `x / 2` does. Two
//! odd-prime-power solutions with exponents above one cannot coexist, and
//! prime solutions are forced to `p = m + 1`. So the preimage set is the
//! union of at most two branches, each contributing an odd value and its
//! double:
//!
//! * `m + 1` prime: `{m + 1, 2m + 2}`;
//! * `m = q^(e-1) (q - 1)` with `q` an odd prime and `e >= 2`: `{q^e, 2q^e}`.
//!
//! The only exception is `m = 2`, where `4 = 2^2` adds a third preimage.
//! An even prime power `2^j` with `j >= 3` has totient divisible by 4, so
//! for `m > 2` the power branch only ever involves odd `q`.

use serde::Serialize;

use crate::error::{Error, MemoryBudget, Result};
use crate::prime::{is_prime, prime_power_totients, PrimeTable, SieveBuilder};
use crate::totient::{euler_phi, factorize, Factorization};

/// An odd prime `p` and exponent `e >= 2` with `φ(p^e) = m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PowerWitness {
    pub p: u64,
    pub e: u32,
}

impl PowerWitness {
    /// `p^e`; callers only construct witnesses whose power fits.
    pub fn power(&self) -> u64 {
        self.p.pow(self.e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub m: u64,
    pub multiplicity: u32,
    pub preimage: Vec<u64>,
    /// The prime `m + 1`, when it is one.
    pub prime_certificate: Option<u64>,
    pub power_certificate: Option<PowerWitness>,
    /// Set only for `m = 2`.
    pub exceptional: bool,
}

impl ClassificationRecord {
    fn from_branches(m: u64, prime: Option<u64>, power: Option<PowerWitness>) -> Self {
        if m == 2 {
            return ClassificationRecord {
                m,
                multiplicity: 3,
                preimage: vec![3, 4, 6],
                prime_certificate: Some(3),
                power_certificate: None,
                exceptional: true,
            };
        }
        let mut preimage = Vec::with_capacity(4);
        for odd in prime.into_iter().chain(power.map(|w| w.power())) {
            preimage.push(odd);
            preimage.push(2 * odd);
        }
        preimage.sort_unstable();
        ClassificationRecord {
            m,
            multiplicity: preimage.len() as u32,
            preimage,
            prime_certificate: prime,
            power_certificate: power,
            exceptional: false,
        }
    }

    pub fn is_totient(&self) -> bool {
        self.multiplicity > 0
    }
}

fn check_2mod4(m: u64) -> Result<()> {
    if m % 4 != 2 {
        return Err(Error::domain(format!("{m} is not congruent to 2 mod 4")));
    }
    // every preimage is at most 3m, which must fit
    if m > u64::MAX / 3 {
        return Err(Error::domain(format!("{m} is too large to classify")));
    }
    Ok(())
}

/// Classifies `m ≡ 2 (mod 4)` by factoring `m / 2`.
pub fn classify_2mod4(m: u64) -> Result<ClassificationRecord> {
    check_2mod4(m)?;
    let prime = is_prime(m + 1).then_some(m + 1);
    let power = power_branch(m, &factorize(m / 2), 2);
    Ok(ClassificationRecord::from_branches(m, prime, power))
}

/// The odd prime `q | m` with `q^v ‖ m` and `m / q^v = q - 1` (so that
/// `φ(q^(v+1)) = m`), restricted to exponents `v + 1 >= min_exponent`.
/// `factors` must factor `m` up to powers of two.
fn power_branch(m: u64, factors: &Factorization, min_exponent: u32) -> Option<PowerWitness> {
    factors
        .factors
        .iter()
        .rev() // largest prime first
        .filter(|&&(q, _)| q > 2)
        .find_map(|&(q, v)| {
            let qv = q.pow(v);
            let e = v + 1;
            (m / qv == q - 1 && e >= min_exponent && q.checked_pow(e).is_some())
                .then_some(PowerWitness { p: q, e })
        })
}

/// An odd prime power `p^e`, `e >= min_exponent`, with `φ(p^e) = m`.
///
/// Such a witness is unique when it exists; the search still scans primes
/// from the largest down.
pub fn has_prime_power_preimage(m: u64, min_exponent: u32) -> Result<Option<PowerWitness>> {
    if m == 0 {
        return Err(Error::domain("φ never takes the value 0"));
    }
    if min_exponent < 2 {
        return Err(Error::domain(format!(
            "minimum exponent must be >= 2, got {min_exponent}"
        )));
    }
    Ok(power_branch(m, &factorize(m), min_exponent))
}

/// Two distinct `a`, `b` with `φ(a) = φ(b) = 2^k · (m2r / 2)`, built as
/// `a = 2^k p` and `b = 2^k q^e` from a multiplicity-four record.
pub fn carmichael_lift_witness(m2r: u64, k: u32) -> Result<(u64, u64)> {
    if k == 0 {
        return Err(Error::domain("lift exponent k must be >= 1"));
    }
    let record = classify_2mod4(m2r)?;
    let (Some(p), Some(w), 4) = (
        record.prime_certificate,
        record.power_certificate,
        record.multiplicity,
    ) else {
        return Err(Error::domain(format!(
            "{m2r} has multiplicity {}, not 4",
            record.multiplicity
        )));
    };
    let overflow = || Error::domain(format!("2^{k} * {m2r} overflows 64 bits"));
    let scale = 1u64.checked_shl(k).filter(|_| k < 64).ok_or_else(overflow)?;
    let target = (m2r / 2).checked_mul(scale).ok_or_else(overflow)?;
    let a = p.checked_mul(scale).ok_or_else(overflow)?;
    let b = w.power().checked_mul(scale).ok_or_else(overflow)?;
    if euler_phi(a)? != target || euler_phi(b)? != target || a == b {
        return Err(Error::domain(format!(
            "lift of {m2r} by 2^{k} failed verification"
        )));
    }
    Ok((a, b))
}

/// Classifier for every `m ≡ 2 (mod 4)` up to a fixed bound, backed by a
/// prime table for the `m + 1` test and the sorted list of odd prime-power
/// totients for the power branch. Agrees with [`classify_2mod4`] on its range.
#[derive(Debug, Clone)]
pub struct TableClassifier {
    max: u64,
    primes: PrimeTable,
    powers: Vec<(u64, PowerWitness)>,
}

/// Branch outcome for one value, without materializing preimages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branches {
    pub prime: bool,
    pub power: Option<PowerWitness>,
}

impl Branches {
    pub fn multiplicity(&self, m: u64) -> u32 {
        if m == 2 {
            3
        } else {
            2 * (self.prime as u32 + self.power.is_some() as u32)
        }
    }
}

impl TableClassifier {
    pub fn new(max: u64) -> Result<Self> {
        Self::with_budget(max, MemoryBudget::DEFAULT)
    }

    pub fn with_budget(max: u64, budget: MemoryBudget) -> Result<Self> {
        if max < 2 {
            return Err(Error::domain(format!("classifier bound must be >= 2, got {max}")));
        }
        let primes = SieveBuilder::new(max + 1).budget(budget).build()?;
        Self::with_primes(max, primes)
    }

    /// Reuses an existing table, which must cover `max + 1`.
    pub fn with_primes(max: u64, primes: PrimeTable) -> Result<Self> {
        if primes.limit() < max + 1 {
            return Err(Error::domain(format!(
                "prime table limit {} does not cover {}",
                primes.limit(),
                max + 1
            )));
        }
        let mut powers: Vec<(u64, PowerWitness)> = prime_power_totients(max, 2)?
            .filter(|t| t.value % 4 == 2)
            .map(|t| {
                (
                    t.value,
                    PowerWitness {
                        p: t.p,
                        e: t.exponent,
                    },
                )
            })
            .collect();
        powers.sort_unstable_by_key(|&(v, _)| v);
        debug_assert!(powers.windows(2).all(|w| w[0].0 < w[1].0));
        Ok(TableClassifier { max, primes, powers })
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn primes(&self) -> &PrimeTable {
        &self.primes
    }

    fn check(&self, m: u64) -> Result<()> {
        check_2mod4(m)?;
        if m > self.max {
            return Err(Error::domain(format!("{m} exceeds classifier bound {}", self.max)));
        }
        Ok(())
    }

    /// Branch outcome for `m`, no range checks.
    #[inline]
    pub(crate) fn branches_unchecked(&self, m: u64) -> Branches {
        let power = self
            .powers
            .binary_search_by_key(&m, |&(v, _)| v)
            .ok()
            .map(|i| self.powers[i].1);
        Branches {
            prime: self.primes.bit(m + 1),
            power,
        }
    }

    pub fn branches(&self, m: u64) -> Result<Branches> {
        self.check(m)?;
        Ok(self.branches_unchecked(m))
    }

    pub fn classify(&self, m: u64) -> Result<ClassificationRecord> {
        let b = self.branches(m)?;
        Ok(ClassificationRecord::from_branches(
            m,
            b.prime.then_some(m + 1),
            b.power,
        ))
    }

    /// Odd prime-power totients `≡ 2 (mod 4)` up to the bound, ascending.
    pub fn power_totients(&self) -> impl Iterator<Item = (u64, PowerWitness)> + '_ {
        self.powers.iter().copied()
    }
}
