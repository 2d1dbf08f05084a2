//! Classifier-driven census against the exhaustive multiplicity oracle.

use totient_census::census::{count_2mod4, totient_census, CensusOptions};
use totient_census::classifier::{has_prime_power_preimage, TableClassifier};
use totient_census::prime::prime_power_totients;
use totient_census::totient::multiplicity_oracle;

#[test]
fn census_matches_oracle_below_1e5() {
    let x = 100_000;
    let table = multiplicity_oracle(x, false).unwrap();
    let checkpoints: Vec<u64> = (1..=50).map(|i| i * 2_000).collect();
    let run = totient_census(&checkpoints, CensusOptions::default()).unwrap();
    for row in &run.rows {
        let mut k = [0u64; 5];
        for m in (6..=row.x).step_by(4) {
            k[table.count(m).unwrap() as usize] += 1;
        }
        assert_eq!((row.t0, row.t2, row.t4), (k[0], k[2], k[4]), "x = {}", row.x);
        assert_eq!(k[1] + k[3], 0);
        assert_eq!(row.t0 + row.t2 + row.t4 + 1, count_2mod4(row.x));
    }
}

#[test]
fn t4_values_have_prime_square_witnesses() {
    let x = 100_000;
    let tc = TableClassifier::new(x).unwrap();
    let mut t4 = 0;
    for m in (6..=x).step_by(4) {
        let b = tc.branches(m).unwrap();
        if b.multiplicity(m) == 4 {
            t4 += 1;
            assert!(has_prime_power_preimage(m, 2).unwrap().is_some(), "m = {m}");
        }
    }
    assert_eq!(t4, 14);
}

#[test]
fn stream_values_all_have_witnesses() {
    for t in prime_power_totients(1_000_000, 2).unwrap() {
        let w = has_prime_power_preimage(t.value, 2).unwrap().expect("witness");
        assert_eq!((w.p, w.e), (t.p, t.exponent));
    }
}
