//! Pairs of totients `2r, 2r + gap` (r odd) and their split into the
//! cousin-prime part and the prime-power part.
//!
//! ```bash
//! cargo run --release -p totient-census --example cousin_pairs -- 4
//! ```

use totient_census::census::pair_sets;

fn main() -> totient_census::Result<()> {
    let gap: u64 = std::env::args().nth(1).map_or(4, |s| s.parse().expect("gap"));
    println!("{:>10} {:>8} {:>8} {:>8} {:>10} {:>12}", "x", "|C|", "|C1|", "|C2|", "|C|/sqrt", "|C1|ln^2/x");
    for e in 2..=7 {
        let x = 10u64.pow(e);
        let s = pair_sets(x, gap)?;
        assert!(s.uncovered().is_empty());
        let c = s.c.len() as f64;
        let ln = (x as f64).ln();
        println!(
            "{:>10} {:>8} {:>8} {:>8} {:>10.4} {:>12.4}",
            x,
            s.c.len(),
            s.c1.len(),
            s.c2.len(),
            c / (x as f64).sqrt(),
            s.c1.len() as f64 * ln * ln / x as f64
        );
    }
    Ok(())
}
