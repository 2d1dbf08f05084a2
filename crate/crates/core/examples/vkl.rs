//! Share of multiplicity-`k` values that have an odd prime power `p^e`,
//! `e >= l`, among their preimages.

use totient_census::census::vkl_census_with;
use totient_census::totient::multiplicity_oracle;

fn main() -> totient_census::Result<()> {
    let x: u64 = std::env::args().nth(1).map_or(100_000, |s| s.parse().expect("bound"));
    let table = multiplicity_oracle(x, true)?;
    println!("{:>4} {:>3} {:>8} {:>8} {:>10}", "k", "l", "V_k^l", "V_k", "ratio");
    for k in [2, 4, 6, 8, 12] {
        for l in 2..=4 {
            let r = vkl_census_with(&table, x, k, l)?;
            let ratio = r.ratio.map_or("-".into(), |v| format!("{v:.6}"));
            println!("{:>4} {:>3} {:>8} {:>8} {:>10}", k, l, r.v_kl, r.v_k, ratio);
        }
    }
    Ok(())
}
