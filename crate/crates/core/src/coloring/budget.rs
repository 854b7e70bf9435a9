use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default limit on backtracking nodes for exhaustive searches.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Shared node counter for exhaustive searches. Exceeding the limit aborts
/// the search with [`Error::BudgetExceeded`] instead of guessing.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn tick(&self) -> Result<()> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_BUDGET)
    }
}
