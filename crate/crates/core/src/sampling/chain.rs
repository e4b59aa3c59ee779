//! Independence Metropolis over scattering matrices with Haar proposals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{log_poisson_density, reflection_eigenvalues, ScatteringSample};
use crate::ensembles::EnsembleSpec;
use crate::error::{Error, Result};

/// Environment variable holding the worker-thread count for parallel chains.
pub const THREADS_ENV: &str = "ANDREEV_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ChainConfig {
    pub seed: u64,
    pub burn_in: u64,
    pub thinning: u64,
    /// Emitted samples (per chain for [`MetropolisChain`], in total for [`run_chains`]).
    pub samples: u64,
}

impl Default for ChainConfig {
    fn default() -> Self {
        ChainConfig { seed: 1, burn_in: 1000, thinning: 2, samples: 100_000 }
    }
}

impl ChainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.thinning == 0 || self.samples == 0 {
            return Err(Error::InvalidArgument("chain needs thinning ≥ 1 and samples ≥ 1".into()));
        }
        Ok(())
    }
}

pub struct MetropolisChain {
    spec: EnsembleSpec,
    rng: ChaCha8Rng,
    current: ScatteringSample,
    log_p: f64,
    thinning: u64,
    remaining: u64,
    proposed: u64,
    accepted: u64,
}

impl MetropolisChain {
    /// A chain on stream `chain_id` of `config.seed`, already past burn-in.
    pub fn new(spec: &EnsembleSpec, config: &ChainConfig, chain_id: u64) -> Result<Self> {
        spec.validate()?;
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(chain_id);
        // resample until the start has positive density
        let (current, log_p) = loop {
            let s = ScatteringSample::haar(spec, &mut rng);
            let lp = log_poisson_density(&s, spec)?;
            if lp.is_finite() {
                break (s, lp);
            }
        };
        let mut chain = MetropolisChain {
            spec: spec.clone(),
            rng,
            current,
            log_p,
            thinning: config.thinning,
            remaining: config.samples,
            proposed: 0,
            accepted: 0,
        };
        for _ in 0..config.burn_in {
            chain.step()?;
        }
        chain.proposed = 0;
        chain.accepted = 0;
        Ok(chain)
    }

    fn step(&mut self) -> Result<()> {
        let s = ScatteringSample::haar(&self.spec, &mut self.rng);
        let lp = log_poisson_density(&s, &self.spec)?;
        self.proposed += 1;
        let log_ratio = lp - self.log_p;
        if log_ratio >= 0.0 || self.rng.random::<f64>().ln() < log_ratio {
            self.current = s;
            self.log_p = lp;
            self.accepted += 1;
        }
        Ok(())
    }

    /// Fraction of accepted proposals since burn-in.
    pub fn acceptance_rate(&self) -> f64 {
        if self.proposed == 0 {
            return 1.0;
        }
        self.accepted as f64 / self.proposed as f64
    }
}

impl Iterator for MetropolisChain {
    type Item = ScatteringSample;

    fn next(&mut self) -> Option<ScatteringSample> {
        if self.remaining == 0 {
            return None;
        }
        for _ in 0..self.thinning {
            // the density is finite for valid specs, so step cannot fail here
            self.step().ok()?;
        }
        self.remaining -= 1;
        Some(self.current.clone())
    }
}

/// Reflection spectra from several chains.
#[derive(Clone, Debug, Serialize)]
pub struct ChainOutput {
    /// `(chain id, spectrum)`, in chain order.
    pub spectra: Vec<(u64, Vec<f64>)>,
    pub acceptance_rates: Vec<f64>,
}

impl ChainOutput {
    pub fn acceptance_rate(&self) -> f64 {
        self.acceptance_rates.iter().sum::<f64>() / self.acceptance_rates.len() as f64
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = &Vec<f64>> {
        self.spectra.iter().map(|(_, s)| s)
    }
}

/// Thread count from [`THREADS_ENV`], falling back to rayon's default.
pub fn thread_count() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| Error::InvalidArgument(format!("{THREADS_ENV}={v} is not a positive integer"))),
        Err(_) => Ok(rayon::current_num_threads()),
    }
}

/// Runs `chains` independent chains sharing `config.samples` between them and
/// returns their reflection spectra. The result depends only on the config.
pub fn run_chains(spec: &EnsembleSpec, config: &ChainConfig, chains: u64) -> Result<ChainOutput> {
    config.validate()?;
    let chains = chains.clamp(1, config.samples);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let per = config.samples / chains;
    let extra = config.samples % chains;
    let results: Vec<Result<(Vec<(u64, Vec<f64>)>, f64)>> = pool.install(|| {
        (0..chains)
            .into_par_iter()
            .map(|id| {
                let cfg = ChainConfig { samples: per + u64::from(id < extra), ..*config };
                let mut chain = MetropolisChain::new(spec, &cfg, id)?;
                let mut out = Vec::with_capacity(cfg.samples as usize);
                for s in chain.by_ref() {
                    out.push((id, reflection_eigenvalues(&s, spec)?));
                }
                Ok((out, chain.acceptance_rate()))
            })
            .collect()
    });
    let mut spectra = Vec::with_capacity(config.samples as usize);
    let mut acceptance_rates = Vec::with_capacity(chains as usize);
    for r in results {
        let (s, a) = r?;
        spectra.extend(s);
        acceptance_rates.push(a);
    }
    Ok(ChainOutput { spectra, acceptance_rates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::EnsembleKind;

    #[test]
    fn flat_density_accepts_everything() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 1, 2, 0.0).unwrap();
        let cfg = ChainConfig { seed: 4, burn_in: 10, thinning: 1, samples: 200 };
        let mut chain = MetropolisChain::new(&spec, &cfg, 0).unwrap();
        assert_eq!(chain.by_ref().count(), 200);
        assert_eq!(chain.acceptance_rate(), 1.0);
    }

    #[test]
    fn reproducible_and_split_half_consistent() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 2, 3, 0.3).unwrap();
        let cfg = ChainConfig { seed: 17, burn_in: 200, thinning: 1, samples: 20_000 };
        let a = run_chains(&spec, &cfg, 4).unwrap();
        let b = run_chains(&spec, &cfg, 4).unwrap();
        assert_eq!(a.spectra, b.spectra);
        assert!(a.acceptance_rate() > 0.0 && a.acceptance_rate() < 1.0);
        let xs: Vec<f64> = a.eigenvalues().map(|s| s.iter().sum::<f64>()).collect();
        let half = xs.len() / 2;
        let stats = |v: &[f64]| {
            let m = v.iter().sum::<f64>() / v.len() as f64;
            let var = v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (v.len() - 1) as f64;
            (m, var / v.len() as f64)
        };
        let (m1, v1) = stats(&xs[..half]);
        let (m2, v2) = stats(&xs[half..]);
        // generous: neighbouring samples are correlated through rejections
        assert!((m1 - m2).abs() < 6.0 * (v1 + v2).sqrt(), "{m1} vs {m2}");
    }
}
