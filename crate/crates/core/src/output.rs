//! CSV, JSON-lines and plain-text renderings of result rows.

use std::fmt::Write as _;

use serde::Serialize;

use crate::census::{CensusRow, PairCensusRow, Ratio, RtRow, VklRow};
use crate::classifier::ClassificationRecord;

/// Header of the census CSV.
pub const CENSUS_CSV_HEADER: &str = "x,pi,t0,t2,t4,t2_over_pi,t4_over_t2";

fn ratio_cell(r: &Ratio) -> String {
    r.display().unwrap_or_default()
}

fn float_cell(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.6}")).unwrap_or_default()
}

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut s = String::from(CENSUS_CSV_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.x,
            r.pi_x,
            r.t0,
            r.t2,
            r.t4,
            ratio_cell(&r.ratio_t2_pi),
            ratio_cell(&r.ratio_t4_t2)
        );
    }
    s
}

pub fn census_text(rows: &[CensusRow]) -> String {
    let mut s = format!(
        "{:>12} {:>10} {:>10} {:>10} {:>6} {:>10} {:>10}\n",
        "x", "pi(x)", "|T0|", "|T2|", "|T4|", "|T2|/pi", "|T4|/|T2|"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:>12} {:>10} {:>10} {:>10} {:>6} {:>10} {:>10}",
            r.x, r.pi_x, r.t0, r.t2, r.t4, r.ratio_t2_pi, r.ratio_t4_t2
        );
    }
    if rows.iter().any(|r| r.exceptional) {
        s.push_str("m = 2 has multiplicity 3 (preimages 3, 4, 6) and is excluded from T0, T2, T4.\n");
    }
    s
}

/// One JSON object per line.
pub fn json_lines<T: Serialize>(items: &[T]) -> String {
    let mut s = String::new();
    for item in items {
        s.push_str(&serde_json::to_string(item).expect("rows serialize"));
        s.push('\n');
    }
    s
}

fn join(values: &[u64], sep: &str) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn record_csv(records: &[ClassificationRecord]) -> String {
    let mut s = String::from("m,multiplicity,preimage,prime_certificate,power_p,power_e,exceptional\n");
    for r in records {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.m,
            r.multiplicity,
            join(&r.preimage, ";"),
            r.prime_certificate.map(|p| p.to_string()).unwrap_or_default(),
            r.power_certificate.map(|w| w.p.to_string()).unwrap_or_default(),
            r.power_certificate.map(|w| w.e.to_string()).unwrap_or_default(),
            r.exceptional
        );
    }
    s
}

pub fn record_text(r: &ClassificationRecord) -> String {
    let mut s = format!(
        "m = {}: multiplicity {}, preimage {{{}}}\n",
        r.m,
        r.multiplicity,
        join(&r.preimage, ", ")
    );
    if let Some(p) = r.prime_certificate {
        let _ = writeln!(s, "  prime certificate: {p} = m + 1");
    }
    if let Some(w) = r.power_certificate {
        let _ = writeln!(s, "  power certificate: φ({}^{}) = m", w.p, w.e);
    }
    if r.exceptional {
        s.push_str("  exceptional: 4 = 2^2 is an even prime power preimage\n");
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreimageRecord {
    pub m: u64,
    pub multiplicity: u64,
    pub preimage: Vec<u64>,
}

pub fn preimage_csv(r: &PreimageRecord) -> String {
    format!("m,multiplicity,preimage\n{},{},{}\n", r.m, r.multiplicity, join(&r.preimage, ";"))
}

pub fn preimage_text(r: &PreimageRecord) -> String {
    format!(
        "φ⁻¹({}) = {{{}}} (multiplicity {})\n",
        r.m,
        join(&r.preimage, ", "),
        r.multiplicity
    )
}

pub fn pair_csv(r: &PairCensusRow) -> String {
    format!(
        "x,gap,c,c1,c2,c_over_sqrt\n{},{},{},{},{},{:.6}\n",
        r.x, r.gap, r.c, r.c1, r.c2, r.c_over_sqrt
    )
}

pub fn pair_text(r: &PairCensusRow) -> String {
    format!(
        "x = {}, gap = {}: |C| = {}, |C1| = {}, |C2| = {}, |C|/sqrt(x) = {:.6}\n",
        r.x, r.gap, r.c, r.c1, r.c2, r.c_over_sqrt
    )
}

pub fn rt_csv(r: &RtRow) -> String {
    format!(
        "x,t,rt,raw,ratio,ratio_pi\n{},{},{},{},{:.6},{}\n",
        r.x,
        r.t,
        r.rt,
        r.raw,
        r.ratio,
        float_cell(r.ratio_pi)
    )
}

pub fn rt_text(r: &RtRow) -> String {
    format!(
        "x = {}, t = {}: |R_t(x)| = {} ({} raw), /x^(1/t) = {:.6}, /pi(x^(1/t)) = {}\n",
        r.x,
        r.t,
        r.rt,
        r.raw,
        r.ratio,
        r.ratio_pi.map(|v| format!("{v:.6}")).unwrap_or_else(|| "-".into())
    )
}

pub fn vkl_csv(r: &VklRow) -> String {
    format!(
        "x,k,l,v_kl,v_k,ratio\n{},{},{},{},{},{}\n",
        r.x,
        r.k,
        r.l,
        r.v_kl,
        r.v_k,
        float_cell(r.ratio)
    )
}

pub fn vkl_text(r: &VklRow) -> String {
    format!(
        "x = {}, k = {}, l = {}: |V_k^l(x)| = {}, |V_k(x)| = {}, ratio = {}\n",
        r.x,
        r.k,
        r.l,
        r.v_kl,
        r.v_k,
        r.ratio.map(|v| format!("{v:.6}")).unwrap_or_else(|| "-".into())
    )
}
