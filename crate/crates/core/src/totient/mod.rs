//! Euler's φ: evaluation, bulk sieves, the preimage search bound and the
//! exhaustive multiplicity oracle.

mod bound;
mod factor;
mod oracle;
mod phi;

pub use bound::{preimage_bound, primorial_index};
pub use factor::{factorize, Factorization};
pub use oracle::{multiplicity_oracle, multiplicity_oracle_with_budget, preimages_of, MultiplicityTable};
pub use phi::{euler_phi, phi_sieve, phi_sieve_with_budget};
