//! Cost caps for enumerations and dynamic programs.

use std::sync::OnceLock;

/// Default cap on enumerated cells (boxes, DP tables, polynomial terms).
pub const DEFAULT_COST_CEILING: u64 = 1 << 24;

/// Environment variable overriding [`DEFAULT_COST_CEILING`].
pub const COST_CEILING_ENV: &str = "FTL_COST_CEILING";

pub fn cost_ceiling() -> u64 {
    static CEILING: OnceLock<u64> = OnceLock::new();
    *CEILING.get_or_init(|| {
        std::env::var(COST_CEILING_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_COST_CEILING)
    })
}
