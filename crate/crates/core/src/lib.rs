//! Classification and census of Euler totients `m ≡ 2 (mod 4)`.
//!
//! Each such `m` has 0, 2 or 4 preimages under φ (3 for `m = 2`), fixed by
//! two tests: whether `m + 1` is prime, and whether `m = φ(q^e)` for an odd
//! prime `q` and `e >= 2`. This crate implements that classification, an
//! exhaustive φ-sieve oracle to check it against, and range censuses built
//! on top of both.
//!
//! * [`prime`]: segmented sieve, deterministic primality, prime counts,
//!   prime pairs and odd prime-power totients.
//! * [`totient`]: φ evaluation, bulk φ sieves, the preimage search bound and
//!   the multiplicity oracle.
//! * [`classifier`]: the fast classification and its witnesses.
//! * [`census`]: checkpoint counts, prime-power totient sets, totient pairs,
//!   convergence reports.
//! * [`cli`]: the `totient-census` command line.
//!
//! ```
//! use totient_census::classifier::classify_2mod4;
//!
//! let r = classify_2mod4(6).unwrap();
//! assert_eq!(r.preimage, vec![7, 9, 14, 18]);
//! ```

pub mod census;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod output;
pub mod prime;
pub mod totient;

pub use error::{Error, MemoryBudget, Result};
