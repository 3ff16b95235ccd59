use std::cell::Cell;

use crate::error::{Error, Result};

/// Caps on search effort. Counters are interior-mutable so a single budget
/// can be threaded through nested searches by shared reference.
#[derive(Debug, Clone)]
pub struct Budget {
    max_nodes: u64,
    max_level_size: usize,
    used: Cell<u64>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 1_000_000;
    pub const DEFAULT_LEVEL_SIZE: usize = 200;

    pub fn new(max_nodes: u64, max_level_size: usize) -> Self {
        Budget { max_nodes, max_level_size, used: Cell::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX, usize::MAX)
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_level_size(&self) -> usize {
        self.max_level_size
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn tick(&self) -> Result<()> {
        let u = self.used.get() + 1;
        self.used.set(u);
        if u > self.max_nodes {
            return Err(Error::BudgetExceeded(format!("more than {} search nodes", self.max_nodes)));
        }
        Ok(())
    }

    pub fn check_level(&self, level: usize, size: usize) -> Result<()> {
        if size > self.max_level_size {
            return Err(Error::BudgetExceeded(format!(
                "level {level} has {size} simplices (limit {})",
                self.max_level_size
            )));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_NODES, Self::DEFAULT_LEVEL_SIZE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tick_stops_at_limit() {
        let b = Budget::new(2, 10);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(matches!(b.tick(), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn level_check() {
        let b = Budget::new(10, 3);
        assert!(b.check_level(0, 3).is_ok());
        assert!(b.check_level(1, 4).is_err());
    }
}
