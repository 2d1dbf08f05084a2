//! Censuses built on odd prime-power preimages: `R_t(x)` and `V_k^l(x)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classifier::has_prime_power_preimage;
use crate::error::{Error, Result};
use crate::prime::{iroot, prime_count, prime_power_totients};
use crate::totient::{multiplicity_oracle, MultiplicityTable};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RtRow {
    pub x: u64,
    pub t: u32,
    /// Distinct values `φ(p^i) <= x`, `p` odd prime, `i >= t + 1`.
    pub rt: u64,
    /// Stream length before deduplication.
    pub raw: u64,
    /// `rt / x^(1/t)`.
    pub ratio: f64,
    /// `rt / π(x^(1/t))`, undefined when the prime count is zero.
    pub ratio_pi: Option<f64>,
}

/// The set `R_t(x)`.
pub fn rt_values(x: u64, t: u32) -> Result<BTreeSet<u64>> {
    if t == 0 {
        return Err(Error::domain("t must be >= 1"));
    }
    Ok(prime_power_totients(x, t + 1)?.map(|p| p.value).collect())
}

pub fn rt_census(x: u64, t: u32) -> Result<RtRow> {
    if t == 0 {
        return Err(Error::domain("t must be >= 1"));
    }
    let raw = prime_power_totients(x, t + 1)?.count() as u64;
    let rt = rt_values(x, t)?.len() as u64;
    let pi_root = prime_count(iroot(x, t))?;
    Ok(RtRow {
        x,
        t,
        rt,
        raw,
        ratio: rt as f64 / (x as f64).powf(1.0 / t as f64),
        ratio_pi: (pi_root > 0).then(|| rt as f64 / pi_root as f64),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VklRow {
    pub x: u64,
    pub k: u64,
    pub l: u32,
    /// `|V_k^l(x)|`: values of multiplicity `k` with an odd prime power
    /// `p^e`, `e >= l`, among their preimages.
    pub v_kl: u64,
    /// `|V_k(x)|`.
    pub v_k: u64,
    pub ratio: Option<f64>,
}

/// `V_k^l(x)` and `V_k(x)` from a fresh multiplicity table.
pub fn vkl_census(x: u64, k: u64, l: u32) -> Result<VklRow> {
    let table = multiplicity_oracle(x, false)?;
    vkl_census_with(&table, x, k, l)
}

/// Same as [`vkl_census`] against an existing table covering `x`.
pub fn vkl_census_with(table: &MultiplicityTable, x: u64, k: u64, l: u32) -> Result<VklRow> {
    Ok(vkl_members(table, x, k, l)?.into_row())
}

pub(crate) struct VklMembers {
    x: u64,
    k: u64,
    l: u32,
    pub(crate) members: Vec<u64>,
    v_k: u64,
}

impl VklMembers {
    fn into_row(self) -> VklRow {
        let v_kl = self.members.len() as u64;
        VklRow {
            x: self.x,
            k: self.k,
            l: self.l,
            v_kl,
            v_k: self.v_k,
            ratio: (self.v_k > 0).then(|| v_kl as f64 / self.v_k as f64),
        }
    }
}

/// Members of `V_k^l(x)`, ascending.
pub fn vkl_values(table: &MultiplicityTable, x: u64, k: u64, l: u32) -> Result<Vec<u64>> {
    Ok(vkl_members(table, x, k, l)?.members)
}

fn vkl_members(table: &MultiplicityTable, x: u64, k: u64, l: u32) -> Result<VklMembers> {
    if k == 0 {
        return Err(Error::domain("multiplicity k must be >= 1"));
    }
    if l < 2 {
        return Err(Error::domain("exponent l must be >= 2"));
    }
    if x > table.x() {
        return Err(Error::domain(format!(
            "table covers {} but {x} was requested",
            table.x()
        )));
    }
    let v_k = (1..=x)
        .map(|m| table.count(m))
        .try_fold(0u64, |acc, c| c.map(|c| acc + u64::from(c == k)))?;

    let mut members = Vec::new();
    if x >= 2 {
        let candidates: BTreeSet<u64> = prime_power_totients(x, l)?.map(|p| p.value).collect();
        for m in candidates {
            if table.count(m)? == k && has_prime_power_preimage(m, l)?.is_some() {
                members.push(m);
            }
        }
    }
    Ok(VklMembers {
        x,
        k,
        l,
        members,
        v_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::totient::euler_phi;

    fn brute_rt(x: u64, t: u32) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        let mut p = 3u64;
        while 2 * p.pow(t) <= x {
            if crate::prime::is_prime(p) {
                let mut pe = p.pow(t + 1);
                loop {
                    let v = euler_phi(pe).unwrap();
                    if v > x {
                        break;
                    }
                    out.insert(v);
                    pe *= p;
                }
            }
            p += 2;
        }
        out
    }

    #[test]
    fn rt_small_values() {
        let r = rt_census(1002, 2).unwrap();
        assert_eq!(r.rt, 7);
        assert_eq!(
            rt_values(1002, 2).unwrap().into_iter().collect::<Vec<_>>(),
            vec![18, 54, 100, 162, 294, 486, 500]
        );
        assert_eq!(rt_census(5, 1).unwrap().rt, 0);
        let r = rt_census(6, 1).unwrap();
        assert_eq!(r.rt, 1);
        assert_eq!(rt_values(6, 1).unwrap().into_iter().collect::<Vec<_>>(), vec![6]);
        assert!(rt_census(100, 0).is_err());
    }

    #[test]
    fn rt_matches_brute_force() {
        for x in [2u64, 10, 99, 1002, 5000, 10_000] {
            for t in 1..5 {
                let row = rt_census(x, t).unwrap();
                let brute = brute_rt(x, t);
                assert_eq!(rt_values(x, t).unwrap(), brute);
                assert_eq!(row.rt, brute.len() as u64);
                assert!(row.rt <= row.raw);
            }
        }
    }

    #[test]
    fn vkl_examples() {
        let table = multiplicity_oracle(100, true).unwrap();
        assert_eq!(table.count(54).unwrap(), 2);
        assert_eq!(table.preimages(54).unwrap().unwrap(), &[81, 162]);
        assert!(vkl_values(&table, 100, 2, 2).unwrap().contains(&54));

        // A(4) = A(6) = 4; only 6 = φ(9) has an odd prime power preimage
        let row = vkl_census(6, 4, 2).unwrap();
        assert_eq!((row.v_kl, row.v_k), (1, 2));
        // m = 2 only has the even prime power 4 among its preimages
        let row = vkl_census(4, 3, 2).unwrap();
        assert_eq!((row.v_kl, row.v_k), (0, 1));
    }

    #[test]
    fn vkl_bounded_by_r1() {
        let x = 100_000;
        let table = multiplicity_oracle(x, false).unwrap();
        let r1 = rt_census(x, 1).unwrap().rt;
        for k in [2, 4] {
            let row = vkl_census_with(&table, x, k, 2).unwrap();
            assert!(row.v_kl <= r1);
            assert!(row.v_kl <= row.v_k);
        }
    }

    #[test]
    fn vkl_argument_checks() {
        let table = multiplicity_oracle(10, false).unwrap();
        assert!(vkl_census_with(&table, 10, 0, 2).is_err());
        assert!(vkl_census_with(&table, 10, 2, 1).is_err());
        assert!(vkl_census_with(&table, 11, 2, 2).is_err());
    }
}
