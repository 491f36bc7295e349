//! Iteration budget shared across enumeration loops.

use crate::error::{Error, Result};
use std::sync::atomic::{AtomicU64, Ordering};

/// Caps the number of tuple evaluations an operation may perform. The meter
/// is shared by reference and is safe to charge from concurrent tasks; an
/// operation fails with [`Error::BudgetExceeded`] once the cap is passed.
#[derive(Debug)]
pub struct Budget {
    cap: u64,
    used: AtomicU64,
}

/// Default cap, generous enough for every desk-scale command.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

impl Budget {
    pub fn new(cap: u64) -> Budget {
        Budget { cap, used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Budget {
        Budget::new(u64::MAX)
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charges `n` evaluations against the cap.
    pub fn charge(&self, n: u64) -> Result<()> {
        let prev = self.used.fetch_add(n, Ordering::Relaxed);
        if prev.saturating_add(n) > self.cap {
            Err(Error::BudgetExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// True when at least `n` more evaluations fit under the cap.
    pub fn has(&self, n: u64) -> bool {
        self.used().saturating_add(n) <= self.cap
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(DEFAULT_BUDGET)
    }
}
