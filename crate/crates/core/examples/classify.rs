//! Classify each argument and print its preimages and certificates.

use totient_census::classifier::classify_2mod4;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let values: Vec<String> = if args.is_empty() {
        ["2", "6", "10", "14", "18", "54", "100", "1000000000000000006"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for v in values {
        let m: u64 = match v.parse() {
            Ok(m) => m,
            Err(e) => {
                eprintln!("{v}: {e}");
                continue;
            }
        };
        match classify_2mod4(m) {
            Ok(r) => {
                let power = r
                    .power_certificate
                    .map(|w| format!("{}^{}", w.p, w.e))
                    .unwrap_or_else(|| "-".into());
                let prime = r.prime_certificate.map_or("-".into(), |p| p.to_string());
                println!(
                    "{m}: multiplicity {} preimages {:?} prime {prime} power {power}",
                    r.multiplicity, r.preimage
                );
            }
            Err(e) => println!("{m}: {e}"),
        }
    }
}
