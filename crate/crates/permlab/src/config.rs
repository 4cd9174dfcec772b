//! Resource budgets and reproducibility knobs shared by every engine.

use serde::Serialize;

/// Budgets and the sampling seed for a run.
///
/// Every report embeds the config it ran under, so a result can be
/// reproduced from the report alone. Scheduling choices (worker count,
/// cache location) are deliberately *not* part of this struct: results are
/// independent of them, and keeping them out lets reports stay byte
/// identical across worker counts.
#[derive(Debug, Clone, Serialize)]
pub struct EngineConfig {
    /// Extension candidates the class-enumeration engine may examine.
    pub enum_node_limit: u64,
    /// Nodes a single stack-machine sortability search may expand.
    pub search_node_cap: u64,
    /// Frontier codes held in memory before segments spill to disk.
    pub spill_threshold: usize,
    /// Parents handed to one parallel extension task.
    pub chunk_size: usize,
    /// Largest `n` for which exhaustive scans over all of `S_n` run.
    pub brute_max_n: usize,
    /// The same budget for single-pass stack sorting, whose per-item cost
    /// is low enough to afford two more levels.
    pub brute_max_n_single_pass: usize,
    /// Seed for sampled cross-checks (witness sampling and the like).
    pub seed: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            enum_node_limit: 10_000_000_000,
            search_node_cap: 100_000_000,
            spill_threshold: 48_000_000,
            chunk_size: 4096,
            brute_max_n: 10,
            brute_max_n_single_pass: 12,
            seed: 0x5eed_2005,
        }
    }
}

/// Length cap for permutations inside the enumeration engine, imposed by
/// its packed frontier encoding (one nibble per entry). Exhaustive
/// enumeration far beyond this length is out of reach anyway.
pub const ENUM_MAX_LEN: usize = 16;
