//! Counts of `m ≡ 2 (mod 4)` by preimage multiplicity, with the two ratios.
//!
//! Pass checkpoints as arguments, or none for 10^k + 2, k = 3..=7.

use std::time::Instant;

use totient_census::census::{totient_census, CensusOptions};

fn main() -> totient_census::Result<()> {
    let mut checkpoints: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("checkpoint"))
        .collect();
    if checkpoints.is_empty() {
        checkpoints = (3..=7).map(|k| 10u64.pow(k) + 2).collect();
    }
    let start = Instant::now();
    let run = totient_census(&checkpoints, CensusOptions::default())?;
    println!(
        "{:>10} {:>9} {:>9} {:>8} {:>4} {:>9} {:>9}",
        "x", "pi(x)", "t0", "t2", "t4", "t2/pi", "t4/t2"
    );
    for r in &run.rows {
        println!(
            "{:>10} {:>9} {:>9} {:>8} {:>4} {:>9} {:>9}",
            r.x,
            r.pi_x,
            r.t0,
            r.t2,
            r.t4,
            r.ratio_t2_pi.display().unwrap_or_default(),
            r.ratio_t4_t2.display().unwrap_or_default()
        );
    }
    eprintln!("{:.2?}", start.elapsed());
    Ok(())
}
