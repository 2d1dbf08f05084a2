//! Exhaustive multiplicity tables: A(m) = |φ⁻¹(m)| for every `m <= x`.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use rayon::prelude::*;

use super::bound::preimage_bound;
use super::phi::{phi_segment, segment_primes};
use crate::error::{Error, MemoryBudget, Result};

const SEGMENT: u64 = 1 << 15;
const SATURATED: u8 = u8::MAX;

/// Byte-per-entry counters; a saturated byte defers to the overflow map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Counts {
    small: Vec<u8>,
    big: BTreeMap<u64, u64>,
}

impl Counts {
    fn new(len: usize) -> Self {
        Counts {
            small: vec![0; len],
            big: BTreeMap::new(),
        }
    }

    #[inline]
    fn get(&self, m: usize) -> u64 {
        match self.small[m] {
            SATURATED => self.big[&(m as u64)],
            c => c as u64,
        }
    }

    fn set(&mut self, m: usize, v: u64) {
        if v < SATURATED as u64 {
            self.small[m] = v as u8;
            self.big.remove(&(m as u64));
        } else {
            self.small[m] = SATURATED;
            self.big.insert(m as u64, v);
        }
    }

    #[inline]
    fn increment(&mut self, m: usize) {
        match self.small[m] {
            SATURATED => *self.big.get_mut(&(m as u64)).expect("promoted entry") += 1,
            c if c + 1 == SATURATED => self.set(m, SATURATED as u64),
            c => self.small[m] = c + 1,
        }
    }

    fn merge(mut self, other: Counts) -> Counts {
        for m in 0..self.small.len() {
            if other.small[m] != 0 {
                let v = self.get(m) + other.get(m);
                self.set(m, v);
            }
        }
        self
    }
}

/// A(m) for all `m <= x`, optionally with the explicit preimage lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    x: u64,
    search_bound: u64,
    counts: Counts,
    // CSR layout: preimages of m are values[offsets[m]..offsets[m + 1]]
    preimages: Option<(Vec<u64>, Vec<u32>)>,
}

impl MultiplicityTable {
    pub fn x(&self) -> u64 {
        self.x
    }

    /// The `N` searched: every `n` with `φ(n) <= x` satisfies `n <= N`.
    pub fn search_bound(&self) -> u64 {
        self.search_bound
    }

    /// A(m) for `m <= x`.
    pub fn count(&self, m: u64) -> Result<u64> {
        self.check(m)?;
        Ok(self.counts.get(m as usize))
    }

    /// Sorted φ⁻¹(m), or `None` when preimages were not retained.
    pub fn preimages(&self, m: u64) -> Result<Option<&[u32]>> {
        self.check(m)?;
        Ok(self.preimages.as_ref().map(|(offsets, values)| {
            let m = m as usize;
            &values[offsets[m] as usize..offsets[m + 1] as usize]
        }))
    }

    pub fn has_preimages(&self) -> bool {
        self.preimages.is_some()
    }

    /// Number of entries whose count exceeded the byte range.
    pub fn overflow_entries(&self) -> usize {
        self.counts.big.len()
    }

    /// `(m, A(m))` for `m = 0..=x`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..=self.x).map(|m| (m, self.counts.get(m as usize)))
    }

    fn check(&self, m: u64) -> Result<()> {
        if m > self.x {
            Err(Error::domain(format!("{m} exceeds table bound {}", self.x)))
        } else {
            Ok(())
        }
    }
}

/// Builds A(m) for all `m <= x` by evaluating φ(n) for every
/// `n <= preimage_bound(x)`.
pub fn multiplicity_oracle(x: u64, keep_preimages: bool) -> Result<MultiplicityTable> {
    multiplicity_oracle_with_budget(x, keep_preimages, MemoryBudget::DEFAULT)
}

pub fn multiplicity_oracle_with_budget(
    x: u64,
    keep_preimages: bool,
    budget: MemoryBudget,
) -> Result<MultiplicityTable> {
    if x == 0 {
        return Err(Error::domain("oracle bound must be >= 1"));
    }
    let bound = preimage_bound(x);
    let workers = rayon::current_num_threads() as u64;
    let mut needed = (x + 1).saturating_mul(workers + 1);
    if keep_preimages {
        // offsets, values, and the staged (n, φ(n)) pairs
        needed = needed
            .saturating_add((x + 2).saturating_mul(8))
            .saturating_add(bound.saturating_mul(4 + 16));
    }
    budget.check("multiplicity oracle", needed)?;
    if bound > u32::MAX as u64 {
        return Err(Error::Resource {
            what: "multiplicity oracle search bound",
            needed: bound,
            budget: u32::MAX as u64,
        });
    }

    let primes = segment_primes(bound)?;
    let nseg = bound.div_ceil(SEGMENT);
    let len = (x + 1) as usize;

    let counts = (0..nseg)
        .into_par_iter()
        .fold(
            || (Counts::new(len), Vec::new(), Vec::new()),
            |(mut acc, mut rest, mut phi), seg| {
                let (lo, hi) = segment_range(seg, bound);
                phi.resize((hi - lo) as usize, 0);
                phi_segment(lo, &primes, &mut rest, &mut phi);
                for &v in &phi {
                    if v <= x {
                        acc.increment(v as usize);
                    }
                }
                (acc, rest, phi)
            },
        )
        .map(|(acc, _, _)| acc)
        .reduce(|| Counts::new(len), Counts::merge);

    let preimages = keep_preimages.then(|| {
        let mut offsets = Vec::with_capacity(len + 1);
        let mut total = 0u64;
        offsets.push(0);
        for m in 0..len {
            total += counts.get(m);
            offsets.push(total);
        }
        let staged: Vec<Vec<(u32, u32)>> = (0..nseg)
            .into_par_iter()
            .map_init(
                || (Vec::new(), Vec::new()),
                |(rest, phi), seg| {
                    let (lo, hi) = segment_range(seg, bound);
                    phi.resize((hi - lo) as usize, 0);
                    phi_segment(lo, &primes, rest, phi);
                    phi.iter()
                        .enumerate()
                        .filter(|&(_, &v)| v <= x)
                        .map(|(k, &v)| ((lo + k as u64) as u32, v as u32))
                        .collect()
                },
            )
            .collect();
        let mut cursor = offsets.clone();
        let mut values = vec![0u32; total as usize];
        for (n, v) in staged.into_iter().flatten() {
            let slot = &mut cursor[v as usize];
            values[*slot as usize] = n;
            *slot += 1;
        }
        (offsets, values)
    });

    Ok(MultiplicityTable {
        x,
        search_bound: bound,
        counts,
        preimages,
    })
}

fn segment_range(seg: u64, bound: u64) -> (u64, u64) {
    let lo = 1 + seg * SEGMENT;
    (lo, (lo + SEGMENT).min(bound + 1))
}

/// Sorted φ⁻¹(m), found by scanning every `n <= preimage_bound(m)`.
pub fn preimages_of(m: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::domain("φ never takes the value 0"));
    }
    let bound = preimage_bound(m);
    let primes = segment_primes(bound)?;
    let nseg = bound.div_ceil(SEGMENT);
    let found: Vec<Vec<u64>> = (0..nseg)
        .into_par_iter()
        .map_init(
            || (Vec::new(), Vec::new()),
            |(rest, phi), seg| {
                let (lo, hi) = segment_range(seg, bound);
                phi.resize((hi - lo) as usize, 0);
                phi_segment(lo, &primes, rest, phi);
                phi.iter()
                    .enumerate()
                    .filter(|&(_, &v)| v == m)
                    .map(|(k, _)| lo + k as u64)
                    .collect()
            },
        )
        .collect();
    Ok(found.into_iter().flatten().collect())
}

const MAGIC: &[u8; 8] = b"TOTMULT\0";
const VERSION: u32 = 1;
const COUNT_WIDTH: u8 = 8;

impl MultiplicityTable {
    /// Writes the versioned little-endian dump.
    ///
    /// Layout: magic, version (u32), x (u64), search_bound (u64), count
    /// width in bits (u8), preimage flag (u8), `x + 1` count bytes, overflow
    /// entry count (u64) and `(m, count)` u64 pairs, then if flagged the
    /// `x + 2` u64 offsets and the u32 preimage values.
    pub fn dump<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&VERSION.to_le_bytes())?;
        w.write_all(&self.x.to_le_bytes())?;
        w.write_all(&self.search_bound.to_le_bytes())?;
        w.write_all(&[COUNT_WIDTH, self.preimages.is_some() as u8])?;
        w.write_all(&self.counts.small)?;
        w.write_all(&(self.counts.big.len() as u64).to_le_bytes())?;
        for (&m, &c) in &self.counts.big {
            w.write_all(&m.to_le_bytes())?;
            w.write_all(&c.to_le_bytes())?;
        }
        if let Some((offsets, values)) = &self.preimages {
            for o in offsets {
                w.write_all(&o.to_le_bytes())?;
            }
            for v in values {
                w.write_all(&v.to_le_bytes())?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn load<R: Read>(mut r: R) -> Result<MultiplicityTable> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let version = read_u32(&mut r)?;
        if version != VERSION {
            return Err(Error::Format(format!("unsupported version {version}")));
        }
        let x = read_u64(&mut r)?;
        let search_bound = read_u64(&mut r)?;
        let mut flags = [0u8; 2];
        r.read_exact(&mut flags)?;
        if flags[0] != COUNT_WIDTH {
            return Err(Error::Format(format!("unsupported count width {}", flags[0])));
        }
        if search_bound != preimage_bound(x) {
            return Err(Error::Format("search bound does not match x".into()));
        }
        let len = usize::try_from(x + 1).map_err(|_| Error::Format("x too large".into()))?;
        let mut small = vec![0u8; len];
        r.read_exact(&mut small)?;
        let nbig = read_u64(&mut r)?;
        let mut big = BTreeMap::new();
        for _ in 0..nbig {
            let m = read_u64(&mut r)?;
            let c = read_u64(&mut r)?;
            if m > x || small[m as usize] != SATURATED || c < SATURATED as u64 {
                return Err(Error::Format(format!("inconsistent overflow entry {m}")));
            }
            big.insert(m, c);
        }
        if small.iter().filter(|&&c| c == SATURATED).count() != big.len() {
            return Err(Error::Format("saturated entry without overflow value".into()));
        }
        let counts = Counts { small, big };
        let preimages = match flags[1] {
            0 => None,
            1 => {
                let mut offsets = Vec::with_capacity(len + 1);
                for _ in 0..=len {
                    offsets.push(read_u64(&mut r)?);
                }
                let total = *offsets.last().unwrap_or(&0);
                let mut values = Vec::with_capacity(total as usize);
                for _ in 0..total {
                    values.push(read_u32(&mut r)?);
                }
                Some((offsets, values))
            }
            f => return Err(Error::Format(format!("bad preimage flag {f}"))),
        };
        Ok(MultiplicityTable {
            x,
            search_bound,
            counts,
            preimages,
        })
    }
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}
