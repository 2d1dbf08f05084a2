//! Convergence report over census checkpoints.

use std::fmt::Write as _;

use serde::Serialize;

use super::ratio::strictly_decreasing;
use super::{CensusRun, Ratio};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub x: u64,
    pub pi_x: u64,
    pub t2: u64,
    pub t4: u64,
    pub t2_over_pi: Ratio,
    /// `|t2/π - 1/2|` as `|2 t2 - π| / 2π`.
    pub distance_from_half: Ratio,
    pub t4_over_t2: Ratio,
    pub t4_over_sqrt_x: f64,
    pub pi_4_3: u64,
    pub pi_4_3_over_pi: Ratio,
    pub t2_prime: u64,
    pub t2_power: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
    /// `t2/π` strictly decreases across checkpoints.
    pub t2_over_pi_decreasing: bool,
    /// `t4/t2` strictly decreases across checkpoints.
    pub t4_over_t2_decreasing: bool,
}

pub fn ratio_report(run: &CensusRun) -> Report {
    let entries: Vec<ReportEntry> = run
        .rows
        .iter()
        .zip(&run.splits)
        .map(|(r, s)| ReportEntry {
            x: r.x,
            pi_x: r.pi_x,
            t2: r.t2,
            t4: r.t4,
            t2_over_pi: r.ratio_t2_pi,
            distance_from_half: Ratio::new((2 * r.t2).abs_diff(r.pi_x), 2 * r.pi_x),
            t4_over_t2: r.ratio_t4_t2,
            t4_over_sqrt_x: r.t4 as f64 / (r.x as f64).sqrt(),
            pi_4_3: s.pi_4_3,
            pi_4_3_over_pi: Ratio::new(s.pi_4_3, r.pi_x),
            t2_prime: s.t2_prime,
            t2_power: s.t2_power,
        })
        .collect();
    let t2_ratios: Vec<Ratio> = entries.iter().map(|e| e.t2_over_pi).collect();
    let t4_ratios: Vec<Ratio> = entries.iter().map(|e| e.t4_over_t2).collect();
    Report {
        t2_over_pi_decreasing: strictly_decreasing(&t2_ratios),
        t4_over_t2_decreasing: strictly_decreasing(&t4_ratios),
        entries,
    }
}

impl Report {
    /// Fixed-width table for terminals.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>12} {:>10} {:>10} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10} {:>8}",
            "x", "pi", "t2", "t4", "t2/pi", "|-1/2|", "t4/t2", "t4/sqrt", "pi43/pi", "t2'", "t2''"
        );
        for e in &self.entries {
            let _ = writeln!(
                s,
                "{:>12} {:>10} {:>10} {:>6} {:>10} {:>10} {:>10} {:>10.6} {:>10} {:>10} {:>8}",
                e.x,
                e.pi_x,
                e.t2,
                e.t4,
                e.t2_over_pi,
                e.distance_from_half,
                e.t4_over_t2,
                e.t4_over_sqrt_x,
                e.pi_4_3_over_pi,
                e.t2_prime,
                e.t2_power
            );
        }
        let _ = writeln!(s, "t2/pi strictly decreasing: {}", self.t2_over_pi_decreasing);
        let _ = writeln!(s, "t4/t2 strictly decreasing: {}", self.t4_over_t2_decreasing);
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(
            "x,pi,t2,t4,t2_over_pi,distance_from_half,t4_over_t2,t4_over_sqrt_x,pi_4_3,pi_4_3_over_pi,t2_prime,t2_power\n",
        );
        for e in &self.entries {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{:.6},{},{},{},{}",
                e.x,
                e.pi_x,
                e.t2,
                e.t4,
                opt(e.t2_over_pi),
                opt(e.distance_from_half),
                opt(e.t4_over_t2),
                e.t4_over_sqrt_x,
                e.pi_4_3,
                opt(e.pi_4_3_over_pi),
                e.t2_prime,
                e.t2_power
            );
        }
        s
    }

    /// Two whitespace-separated columns, `x` and `t2/π`, for gnuplot.
    pub fn to_gnuplot(&self) -> String {
        let mut s = String::from("# x t2/pi\n");
        for e in &self.entries {
            if let Some(v) = e.t2_over_pi.display() {
                let _ = writeln!(s, "{} {}", e.x, v);
            }
        }
        s
    }
}

fn opt(r: Ratio) -> String {
    r.display().unwrap_or_default()
}
