use std::hash::{BuildHasher, Hasher};
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Settings shared by every command. Identical settings and inputs give
/// identical output, whatever the worker count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    /// The seed was not given and had to be drawn.
    pub seed_drawn: bool,
    /// Node-visit budget for exact searches.
    pub budget: u64,
    pub jobs: usize,
    pub format: Format,
    pub max_host: Option<usize>,
    pub cert_out: Option<PathBuf>,
}

pub const JOBS_ENV: &str = "HYPERSID_JOBS";

impl RunConfig {
    pub fn new(seed: Option<u64>, budget: u64, jobs: Option<usize>, format: Format) -> Self {
        let (seed, seed_drawn) = match seed {
            Some(s) => (s, false),
            None => (draw_seed(), true),
        };
        RunConfig { seed, seed_drawn, budget, jobs: jobs.unwrap_or_else(default_jobs).max(1), format, max_host: None, cert_out: None }
    }

    pub fn hom(&self) -> hypersid_core::HomConfig {
        hypersid_core::HomConfig { max_visits: self.budget, ..Default::default() }
    }
}

pub fn draw_seed() -> u64 {
    let mut h = std::collections::hash_map::RandomState::new().build_hasher();
    h.write_u128(std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_nanos()).unwrap_or(0));
    h.finish()
}

/// `HYPERSID_JOBS` when set, otherwise the available parallelism.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}
