use proptest::prelude::*;

use totient_census::census::Ratio;
use totient_census::classifier::{classify_2mod4, has_prime_power_preimage};
use totient_census::prime::{is_prime, iroot, prime_power_phi, SieveBuilder};
use totient_census::totient::{euler_phi, factorize};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Root search: for each exponent e, `q^(e-1) (q - 1)` is increasing in q,
/// so only `q` near `m^(1/e)` can solve `φ(q^e) = m`.
fn power_witness_by_roots(m: u64, min_exponent: u32) -> Option<(u64, u32)> {
    let mut found = None;
    for e in min_exponent..64 {
        let r = iroot(m, e);
        if r < 2 {
            break;
        }
        for q in r..=r + 1 {
            if q % 2 == 1 && is_prime(q) && prime_power_phi(q, e) == Some(m) {
                found = Some((q, e));
            }
        }
    }
    found
}

proptest! {
    #[test]
    fn phi_is_multiplicative(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(euler_phi(a * b).unwrap(), euler_phi(a).unwrap() * euler_phi(b).unwrap());
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..) {
        let f = factorize(n);
        let prod = f.factors.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e));
        prop_assert_eq!(prod, n);
        prop_assert!(f.factors.iter().all(|&(p, _)| is_prime(p)));
        prop_assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn classification_is_self_consistent(j in 1u64..(u64::MAX / 12)) {
        let m = 4 * j + 2;
        let r = classify_2mod4(m).unwrap();
        prop_assert!(matches!(r.multiplicity, 0 | 2 | 4));
        prop_assert_eq!(r.multiplicity as usize, r.preimage.len());
        for &n in &r.preimage {
            prop_assert_eq!(euler_phi(n).unwrap(), m);
            if n % 2 == 1 {
                prop_assert!(r.preimage.contains(&(2 * n)));
            } else if n % 4 == 2 {
                prop_assert!(r.preimage.contains(&(n / 2)));
            }
        }
        if r.multiplicity == 4 {
            prop_assert!(is_prime(m + 1));
        }
        prop_assert_eq!(r.prime_certificate.is_some(), is_prime(m + 1));
    }

    #[test]
    fn witnesses_match_root_search(p_idx in 0usize..200, e in 2u32..12, min in 2u32..5) {
        let p = (3u64..).filter(|&q| is_prime(q)).nth(p_idx).unwrap();
        if let Some(m) = prime_power_phi(p, e) {
            let w = has_prime_power_preimage(m, min).unwrap().map(|w| (w.p, w.e));
            prop_assert_eq!(w, power_witness_by_roots(m, min));
            prop_assert_eq!(w.is_some(), e >= min);
        }
    }

    #[test]
    fn witnesses_match_root_search_random(m in 1u64..10_000_000_000) {
        let w = has_prime_power_preimage(m, 2).unwrap().map(|w| (w.p, w.e));
        prop_assert_eq!(w, power_witness_by_roots(m, 2));
    }

    #[test]
    fn sieve_independent_of_segment_size(limit in 2u64..200_000, seg in 1usize..64) {
        let a = SieveBuilder::new(limit).build().unwrap();
        let b = SieveBuilder::new(limit).segment_bytes(seg * 8).build().unwrap();
        prop_assert_eq!(&a, &b);
        for n in (2..=limit).step_by(97) {
            prop_assert_eq!(a.contains(n).unwrap(), is_prime(n));
        }
    }

    #[test]
    fn truncated_display_brackets_value(num in 0u64..1_000_000_000, den in 1u64..1_000_000_000) {
        let r = Ratio::new(num, den);
        let s = r.display().unwrap();
        let shown: f64 = s.parse().unwrap();
        let exact = num as f64 / den as f64;
        prop_assert!(shown <= exact + 1e-9);
        prop_assert!(exact - shown < 1e-6 + 1e-9);
    }
}
