use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A computation would need more memory than the configured budget.
    #[error("resource error: {what} needs {needed} bytes, budget is {budget} bytes")]
    Resource {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    #[error("malformed table dump: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Upper bound on bytes a single computation may allocate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemoryBudget(pub u64);

impl MemoryBudget {
    pub const DEFAULT: MemoryBudget = MemoryBudget(4 << 30);
    pub const UNLIMITED: MemoryBudget = MemoryBudget(u64::MAX);

    pub fn check(self, what: &'static str, needed: u64) -> Result<()> {
        if needed > self.0 {
            Err(Error::Resource {
                what,
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for MemoryBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}
