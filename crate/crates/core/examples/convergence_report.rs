//! Ratio report over many checkpoints; writes `t2/pi` against `x` as a
//! gnuplot data file.
//!
//! ```bash
//! cargo run --release -p totient-census --example convergence_report -- t2.dat
//! gnuplot -e "set logscale x; plot 't2.dat' with linespoints"
//! ```

use totient_census::census::{ratio_report, totient_census, CensusOptions};

fn main() -> totient_census::Result<()> {
    let checkpoints: Vec<u64> = (3..=7)
        .flat_map(|k| [1u64, 2, 5].map(|c| c * 10u64.pow(k) + 2))
        .collect();
    let report = ratio_report(&totient_census(&checkpoints, CensusOptions::default())?);
    print!("{}", report.to_text());
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, report.to_gnuplot())?;
        eprintln!("wrote {path}");
    }
    Ok(())
}
