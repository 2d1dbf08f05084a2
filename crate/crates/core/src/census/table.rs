//! Per-checkpoint counts of `m ≡ 2 (mod 4)` by multiplicity.

use rayon::prelude::*;
use serde::Serialize;

use super::Ratio;
use crate::classifier::{classify_2mod4, TableClassifier};
use crate::error::{Error, MemoryBudget, Result};

/// Largest checkpoint accepted.
pub const MAX_CHECKPOINT: u64 = 1 << 40;

/// Checkpoints run by default.
pub const DEFAULT_CHECKPOINTS: [u64; 4] = [1_002, 10_002, 100_002, 1_000_002];

/// Additional checkpoints for long runs.
pub const LONG_RUN_CHECKPOINTS: [u64; 2] = [10_000_002, 100_000_002];

/// Values of `m` (as indices `j` with `m = 4j + 2`) handled per work item.
const BLOCK: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub x: u64,
    pub pi_x: u64,
    pub t0: u64,
    pub t2: u64,
    pub t4: u64,
    pub ratio_t2_pi: Ratio,
    pub ratio_t4_t2: Ratio,
    /// Whether `m = 2` (multiplicity 3) lies below `x`; it is not in any `t*`.
    pub exceptional: bool,
}

/// How `t2` splits by certificate, with the residue-class prime counts
/// that bound it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T2Split {
    pub x: u64,
    /// Multiplicity-two values whose preimages come from the prime `m + 1`.
    pub t2_prime: u64,
    /// Multiplicity-two values whose preimages come from an odd prime power.
    pub t2_power: u64,
    /// π(x; 4, 3).
    pub pi_4_3: u64,
    /// π(x + 1; 4, 3), primes `m + 1` with `m <= x`.
    pub pi_4_3_shifted: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRun {
    pub rows: Vec<CensusRow>,
    pub splits: Vec<T2Split>,
}

/// Which classifier the census drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Prime table plus prime-power totient list.
    #[default]
    Table,
    /// Factor every `m / 2`.
    Factoring,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CensusOptions {
    pub route: Route,
    pub budget: MemoryBudget,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    t0: u64,
    t2_prime: u64,
    t2_power: u64,
    t4: u64,
    exceptional: u64,
}

impl Tally {
    fn add(&mut self, o: &Tally) {
        self.t0 += o.t0;
        self.t2_prime += o.t2_prime;
        self.t2_power += o.t2_power;
        self.t4 += o.t4;
        self.exceptional += o.exceptional;
    }

    fn record(&mut self, m: u64, prime: bool, power: bool) {
        match (m == 2, prime, power) {
            (true, _, _) => self.exceptional += 1,
            (_, true, true) => self.t4 += 1,
            (_, true, false) => self.t2_prime += 1,
            (_, false, true) => self.t2_power += 1,
            (_, false, false) => self.t0 += 1,
        }
    }
}

/// Number of `m ≡ 2 (mod 4)` with `m <= x`.
pub fn count_2mod4(x: u64) -> u64 {
    (x + 2) / 4
}

/// Counts `T0`, `T2`, `T4` below each checkpoint in one pass over
/// `m ≡ 2 (mod 4)`. Work is split into blocks that never straddle a
/// checkpoint; block tallies are summed in checkpoint order, so the result
/// does not depend on the thread count.
pub fn totient_census(checkpoints: &[u64], opts: CensusOptions) -> Result<CensusRun> {
    let Some(&max) = checkpoints.last() else {
        return Err(Error::domain("no checkpoints given"));
    };
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("checkpoints must be strictly ascending"));
    }
    if max > MAX_CHECKPOINT {
        return Err(Error::domain(format!("checkpoint {max} exceeds 2^40")));
    }
    let classifier = TableClassifier::with_budget(max.max(2), opts.budget)?;

    let mut blocks = Vec::new();
    let mut start = 0;
    for (i, &x) in checkpoints.iter().enumerate() {
        let end = count_2mod4(x);
        let mut lo = start;
        while lo < end {
            let hi = (lo + BLOCK).min(end);
            blocks.push((i, lo, hi));
            lo = hi;
        }
        start = start.max(end);
    }

    let tallies: Vec<(usize, Tally)> = blocks
        .par_iter()
        .map(|&(i, lo, hi)| {
            let mut t = Tally::default();
            for j in lo..hi {
                let m = 4 * j + 2;
                match opts.route {
                    Route::Table => {
                        let b = classifier.branches_unchecked(m);
                        t.record(m, b.prime, b.power.is_some());
                    }
                    Route::Factoring => {
                        let r = classify_2mod4(m).expect("m is 2 mod 4");
                        t.record(m, r.prime_certificate.is_some(), r.power_certificate.is_some());
                    }
                }
            }
            (i, t)
        })
        .collect();

    let mut per_interval = vec![Tally::default(); checkpoints.len()];
    for (i, t) in &tallies {
        per_interval[*i].add(t);
    }

    let primes = classifier.primes();
    let mut acc = Tally::default();
    let mut rows = Vec::with_capacity(checkpoints.len());
    let mut splits = Vec::with_capacity(checkpoints.len());
    for (&x, t) in checkpoints.iter().zip(&per_interval) {
        acc.add(t);
        let pi_x = primes.count_upto(x)?;
        let t2 = acc.t2_prime + acc.t2_power;
        rows.push(CensusRow {
            x,
            pi_x,
            t0: acc.t0,
            t2,
            t4: acc.t4,
            ratio_t2_pi: Ratio::new(t2, pi_x),
            ratio_t4_t2: Ratio::new(acc.t4, t2),
            exceptional: acc.exceptional > 0,
        });
        splits.push(T2Split {
            x,
            t2_prime: acc.t2_prime,
            t2_power: acc.t2_power,
            pi_4_3: primes.count_residue(x, 4, 3)?,
            pi_4_3_shifted: primes.count_residue(x + 1, 4, 3)?,
        });
    }
    Ok(CensusRun { rows, splits })
}
