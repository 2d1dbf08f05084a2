//! Pairs `2r, 2r + gap` of totients with `r` odd.

use serde::Serialize;

use crate::classifier::TableClassifier;
use crate::error::{Error, Result};
use crate::prime::{prime_pairs_in, prime_power_totients};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCensusRow {
    pub x: u64,
    pub gap: u64,
    pub c: u64,
    pub c1: u64,
    pub c2: u64,
    /// `c / √x`.
    pub c_over_sqrt: f64,
}

/// The three sets behind a [`PairCensusRow`], each ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSets {
    /// `2r <= x - gap`, `r` odd, both `2r` and `2r + gap` totients.
    pub c: Vec<u64>,
    /// `2r` with `2r + 1` and `2r + gap + 1` both prime and at most `x + 1`.
    pub c1: Vec<u64>,
    /// `2r <= x - gap` with an odd prime power `p^e`, `e >= 2`, in
    /// `φ⁻¹(2r) ∪ φ⁻¹(2r + gap)`.
    pub c2: Vec<u64>,
}

impl PairSets {
    /// Members of `c` found in neither `c1` nor `c2`.
    pub fn uncovered(&self) -> Vec<u64> {
        self.c
            .iter()
            .copied()
            .filter(|m| self.c1.binary_search(m).is_err() && self.c2.binary_search(m).is_err())
            .collect()
    }
}

/// Requires `gap ≡ 0 (mod 4)` so that `2r + gap ≡ 2 (mod 4)` stays within
/// the classifier's domain.
pub fn pair_sets(x: u64, gap: u64) -> Result<PairSets> {
    if gap == 0 || !gap.is_multiple_of(4) {
        return Err(Error::domain(format!(
            "gap must be a positive multiple of 4, got {gap}"
        )));
    }
    if x < gap + 2 {
        return Err(Error::domain(format!("x must be at least gap + 2 = {}", gap + 2)));
    }
    let classifier = TableClassifier::new(x)?;
    let limit = x - gap;

    let c: Vec<u64> = (2..=limit)
        .step_by(4)
        .filter(|&m| {
            let totient = |v| classifier.branches_unchecked(v).multiplicity(v) > 0;
            totient(m) && totient(m + gap)
        })
        .collect();

    let c1: Vec<u64> = prime_pairs_in(classifier.primes(), x + 1, gap)
        .into_iter()
        .map(|(p, _)| p - 1)
        .filter(|&m| m >= 2)
        .collect();

    let mut c2: Vec<u64> = Vec::new();
    for t in prime_power_totients(x, 2)? {
        if t.value <= limit {
            c2.push(t.value);
        }
        if t.value >= gap + 2 {
            c2.push(t.value - gap);
        }
    }
    c2.sort_unstable();
    c2.dedup();

    Ok(PairSets { c, c1, c2 })
}

pub fn pair_census(x: u64, gap: u64) -> Result<PairCensusRow> {
    let sets = pair_sets(x, gap)?;
    Ok(PairCensusRow {
        x,
        gap,
        c: sets.c.len() as u64,
        c1: sets.c1.len() as u64,
        c2: sets.c2.len() as u64,
        c_over_sqrt: sets.c.len() as f64 / (x as f64).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::totient::multiplicity_oracle;

    #[test]
    fn x_twenty() {
        let s = pair_sets(20, 4).unwrap();
        assert_eq!(s.c, vec![2, 6]);
        assert_eq!(s.c1, vec![2, 6, 12]);
        // φ(9) = 6 gives 6 and 2; φ(27) = 18 and φ(25) = 20 give 14 and 16
        assert_eq!(s.c2, vec![2, 6, 14, 16]);
        assert!(s.uncovered().is_empty());
        let row = pair_census(20, 4).unwrap();
        assert_eq!((row.c, row.c1, row.c2), (2, 3, 4));
    }

    #[test]
    fn x_six() {
        assert_eq!(pair_sets(6, 4).unwrap().c, vec![2]);
    }

    #[test]
    fn c_matches_oracle() {
        let x = 20_000;
        let table = multiplicity_oracle(x, false).unwrap();
        for gap in [4, 8, 12] {
            let s = pair_sets(x, gap).unwrap();
            let expect: Vec<u64> = (2..=x - gap)
                .step_by(4)
                .filter(|&m| table.count(m).unwrap() > 0 && table.count(m + gap).unwrap() > 0)
                .collect();
            assert_eq!(s.c, expect, "gap {gap}");
            assert!(s.uncovered().is_empty());
        }
    }

    #[test]
    fn argument_checks() {
        assert!(pair_sets(100, 3).is_err());
        assert!(pair_sets(100, 2).is_err());
        assert!(pair_sets(100, 0).is_err());
        assert!(pair_sets(5, 4).is_err());
    }
}
