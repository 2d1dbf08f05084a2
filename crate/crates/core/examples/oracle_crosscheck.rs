//! Compare the classifier with exhaustive preimage search over all
//! `m ≡ 2 (mod 4)` up to a bound (default 10^6).

use std::time::Instant;

use totient_census::classifier::TableClassifier;
use totient_census::totient::{multiplicity_oracle, preimage_bound};

fn main() -> totient_census::Result<()> {
    let x: u64 = std::env::args().nth(1).map_or(1_000_000, |s| s.parse().expect("bound"));
    let start = Instant::now();
    let oracle = multiplicity_oracle(x, false)?;
    println!(
        "oracle: x = {x}, n <= {} (bound {}), {:.2?}",
        oracle.search_bound(),
        preimage_bound(x),
        start.elapsed()
    );
    let start = Instant::now();
    let classifier = TableClassifier::new(x)?;
    let mut mismatches = 0u64;
    let mut seen = 0u64;
    for m in (2..=x).step_by(4) {
        let claimed = classifier.branches(m)?.multiplicity(m) as u64;
        let actual = oracle.count(m)?;
        if claimed != actual {
            mismatches += 1;
            if mismatches <= 10 {
                println!("mismatch at {m}: classifier {claimed}, oracle {actual}");
            }
        }
        seen += 1;
    }
    println!("{seen} values, {mismatches} mismatches, {:.2?}", start.elapsed());
    if mismatches > 0 {
        std::process::exit(1);
    }
    Ok(())
}
