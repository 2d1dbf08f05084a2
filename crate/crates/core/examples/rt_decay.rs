//! Size of `R_t(x)` against `x^(1/t)` and `π(x^(1/t))`.

use totient_census::census::rt_census;

fn main() -> totient_census::Result<()> {
    println!("{:>3} {:>12} {:>8} {:>8} {:>12} {:>12}", "t", "x", "|R_t|", "raw", "/x^(1/t)", "/pi(x^(1/t))");
    for t in 1..=4 {
        // t = 1 sieves up to x / 2; keep it small.
        let top = if t == 1 { 8 } else { 12 };
        for e in (4..=top).step_by(2) {
            let x = 10u64.pow(e);
            let r = rt_census(x, t)?;
            println!(
                "{:>3} {:>12} {:>8} {:>8} {:>12.6} {:>12}",
                t,
                x,
                r.rt,
                r.raw,
                r.ratio,
                r.ratio_pi.map_or("-".into(), |v| format!("{v:.6}"))
            );
        }
    }
    Ok(())
}
