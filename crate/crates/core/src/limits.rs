//! Resource caps for the exponential parts of the toolkit.

use std::env;

pub const ENV_MAX_STATES: &str = "HIBI_MAX_STATES";
pub const ENV_MAX_ELEMENTS: &str = "HIBI_MAX_ELEMENTS";

/// Caps on ideal enumeration, path search and the Frobenius oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset whose ideal lattice may be enumerated.
    pub max_elements: usize,
    /// Largest number of path prefixes a single search may visit.
    pub max_states: u64,
    pub oracle: OracleLimits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_elements: usize,
    pub max_q: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_elements: 5,
            max_q: 3,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 20,
            max_states: 10_000_000,
            oracle: OracleLimits::default(),
        }
    }
}

impl Limits {
    /// Defaults overridden by `HIBI_MAX_STATES` / `HIBI_MAX_ELEMENTS` when set.
    /// Unparseable values are ignored.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = env::var(ENV_MAX_STATES)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_states = n;
        }
        if let Some(n) = env::var(ENV_MAX_ELEMENTS)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_elements = n;
        }
        limits
    }

    pub fn with_max_states(mut self, n: u64) -> Self {
        self.max_states = n;
        self
    }

    pub fn with_max_elements(mut self, n: usize) -> Self {
        self.max_elements = n;
        self
    }

    pub fn with_oracle(mut self, max_elements: usize, max_q: u64) -> Self {
        self.oracle = OracleLimits {
            max_elements,
            max_q,
        };
        self
    }
}
