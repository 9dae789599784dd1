//! Thread-backed versions of the batch operations in the core crate. Every
//! function returns exactly what its sequential counterpart returns.

use hypersid_core::analysis::{host_ratio, Evaluator};
use hypersid_core::domination::{merge_norming_reports, norming_trials, NormingConfig, NormingReport};
use hypersid_core::{HomConfig, Hypergraph, Result};

pub struct Threaded {
    pub jobs: usize,
}

impl Evaluator for Threaded {
    fn evaluate(&self, pattern: &Hypergraph, hosts: &[Hypergraph], cfg: &HomConfig) -> Result<Vec<Option<f64>>> {
        if self.jobs <= 1 || hosts.len() < 2 {
            return hosts.iter().map(|h| host_ratio(pattern, h, cfg)).collect();
        }
        let chunk = hosts.len().div_ceil(self.jobs);
        let parts: Vec<Result<Vec<Option<f64>>>> = std::thread::scope(|s| {
            let handles: Vec<_> = hosts
                .chunks(chunk)
                .map(|c| s.spawn(move || c.iter().map(|h| host_ratio(pattern, h, cfg)).collect::<Result<Vec<_>>>()))
                .collect();
            handles.into_iter().map(|h| h.join().expect("evaluator thread panicked")).collect()
        });
        let mut out = Vec::with_capacity(hosts.len());
        for p in parts {
            out.extend(p?);
        }
        Ok(out)
    }
}

/// The weak-norming suite with its trials split into contiguous ranges.
pub fn norming_suite(f: &Hypergraph, cfg: &NormingConfig, jobs: usize) -> Result<NormingReport> {
    if jobs <= 1 || cfg.trials < 2 {
        return hypersid_core::domination::weakly_norming_suite(f, cfg);
    }
    let chunk = cfg.trials.div_ceil(jobs as u64);
    let ranges: Vec<_> = (0..cfg.trials).step_by(chunk as usize).map(|a| a..(a + chunk).min(cfg.trials)).collect();
    let parts: Vec<Result<NormingReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(move || norming_trials(f, cfg, r))).collect();
        handles.into_iter().map(|h| h.join().expect("norming thread panicked")).collect()
    });
    let parts = parts.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(merge_norming_reports(parts, cfg.seed))
}
