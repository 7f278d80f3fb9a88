//! Order limits for the exhaustive oracles.

use crate::{Error, Result};

/// Environment variable overriding the default partition-enumeration limit.
pub const PARTITION_CAP_ENV: &str = "RAINBOW_PARTITION_CAP";
/// Environment variable overriding the default domination-search limit.
pub const DOMINATION_CAP_ENV: &str = "RAINBOW_DOMINATION_CAP";

/// Hard limit imposed by the single-word bitmask kernels.
pub const WORD_LIMIT: usize = 64;

/// Order limits for the exhaustive searches.
///
/// A limit above the default only takes effect when `acknowledged` is set,
/// so a stray environment variable or flag cannot silently start a search
/// that runs for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Chromatic-partition enumeration and convention search.
    pub partitions: usize,
    /// Minimum dominating set search.
    pub domination: usize,
    /// Deletion-contraction colouring counts.
    pub counting: usize,
    pub acknowledged: bool,
}

impl OracleCaps {
    pub const DEFAULT_PARTITIONS: usize = 14;
    pub const DEFAULT_DOMINATION: usize = 20;
    pub const DEFAULT_COUNTING: usize = 14;

    /// Defaults, with any limits set through the environment.
    ///
    /// Values from the environment that exceed the defaults still need
    /// [`OracleCaps::acknowledge`].
    pub fn from_env() -> Self {
        let read = |key: &str| {
            std::env::var(key)
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
                .filter(|&n| n > 0)
        };
        let mut caps = Self::default();
        if let Some(n) = read(PARTITION_CAP_ENV) {
            caps.partitions = n;
        }
        if let Some(n) = read(DOMINATION_CAP_ENV) {
            caps.domination = n;
        }
        caps
    }

    /// Raise (or lower) the partition limit and acknowledge the override.
    pub fn with_partition_cap(mut self, limit: usize) -> Self {
        self.partitions = limit;
        self.acknowledged = true;
        self
    }

    pub fn acknowledge(mut self) -> Self {
        self.acknowledged = true;
        self
    }

    fn effective(&self, configured: usize, default: usize) -> usize {
        if configured > default && !self.acknowledged {
            default
        } else {
            configured
        }
        .min(WORD_LIMIT)
    }

    pub(crate) fn check_partitions(&self, order: usize) -> Result<()> {
        let limit = self.effective(self.partitions, Self::DEFAULT_PARTITIONS);
        check("chromatic partition search", limit, order)
    }

    pub(crate) fn check_domination(&self, order: usize) -> Result<()> {
        let limit = self.effective(self.domination, Self::DEFAULT_DOMINATION);
        check("domination search", limit, order)
    }

    pub(crate) fn check_counting(&self, order: usize) -> Result<()> {
        let limit = self.effective(self.counting, Self::DEFAULT_COUNTING);
        check("colouring count", limit, order)
    }
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            partitions: Self::DEFAULT_PARTITIONS,
            domination: Self::DEFAULT_DOMINATION,
            counting: Self::DEFAULT_COUNTING,
            acknowledged: false,
        }
    }
}

fn check(what: &'static str, limit: usize, order: usize) -> Result<()> {
    if order <= limit {
        Ok(())
    } else {
        Err(Error::CapExceeded {
            what,
            limit,
            order,
            overridable: limit < WORD_LIMIT,
        })
    }
}
