//! From each multiplicity-four value `m`, build two numbers sharing the
//! totient `2^k · m / 2`.

use totient_census::classifier::{carmichael_lift_witness, TableClassifier};

fn main() -> totient_census::Result<()> {
    let x = 10_000;
    let classifier = TableClassifier::new(x)?;
    for m in (6..=x).step_by(4) {
        if classifier.branches(m)?.multiplicity(m) != 4 {
            continue;
        }
        let lifts: Vec<String> = (1..=4)
            .map(|k| carmichael_lift_witness(m, k).map(|(a, b)| format!("({a}, {b})")))
            .collect::<totient_census::Result<_>>()?;
        println!("{m:>5}: {}", lifts.join(" "));
    }
    Ok(())
}
