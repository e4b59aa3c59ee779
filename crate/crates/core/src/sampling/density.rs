//! Histograms of the pooled single-eigenvalue marginal on `[0, 1]`.

use serde::Serialize;

use crate::error::{Error, Result};

pub const MIN_SAMPLES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub density: Vec<f64>,
    pub stderr: Vec<f64>,
}

impl Histogram {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn width(&self, i: usize) -> f64 {
        self.bin_edges[i + 1] - self.bin_edges[i]
    }

    /// CSV rows `lo,hi,count,density,stderr`.
    pub fn write_csv<W: std::io::Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["lo", "hi", "count", "density", "stderr"])?;
        for i in 0..self.bins() {
            out.write_record(&[
                self.bin_edges[i].to_string(),
                self.bin_edges[i + 1].to_string(),
                self.counts[i].to_string(),
                self.density[i].to_string(),
                self.stderr[i].to_string(),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Equal-width histogram of every eigenvalue of every spectrum, normalized to
/// unit area. Each spectrum counts as one sample; the binomial standard error
/// uses the number of pooled eigenvalues.
pub fn empirical_density<'a, I>(spectra: I, bins: usize) -> Result<Histogram>
where
    I: IntoIterator<Item = &'a Vec<f64>>,
{
    if bins == 0 {
        return Err(Error::InvalidArgument("histogram needs at least one bin".into()));
    }
    let mut counts = vec![0u64; bins];
    let mut samples = 0usize;
    for spectrum in spectra {
        samples += 1;
        for &r in spectrum {
            if !(0.0..=1.0).contains(&r) {
                return Err(Error::Domain(format!("reflection eigenvalue {r} outside [0, 1]")));
            }
            counts[((r * bins as f64) as usize).min(bins - 1)] += 1;
        }
    }
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!("empirical density needs ≥ {MIN_SAMPLES} samples, got {samples}")));
    }
    let total = counts.iter().sum::<u64>() as f64;
    let width = 1.0 / bins as f64;
    let bin_edges = (0..=bins).map(|i| i as f64 * width).collect();
    let density = counts.iter().map(|&c| c as f64 / (total * width)).collect();
    let stderr = counts
        .iter()
        .map(|&c| {
            let p = c as f64 / total;
            (p * (1.0 - p) / total).sqrt() / width
        })
        .collect();
    Ok(Histogram { bin_edges, counts, density, stderr })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{EnsembleKind, EnsembleSpec};
    use crate::sampling::{reflection_eigenvalues, ScatteringSample};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn too_few_samples() {
        let v = vec![vec![0.5]; 10];
        assert!(empirical_density(&v, 10).is_err());
    }

    #[test]
    fn uniform_is_flat() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let v: Vec<Vec<f64>> = (0..50_000).map(|_| vec![rng.random::<f64>()]).collect();
        let h = empirical_density(&v, 20).unwrap();
        let area: f64 = (0..20).map(|i| h.density[i] * h.width(i)).sum();
        assert!((area - 1.0).abs() < 1e-12);
        for i in 0..20 {
            assert!((h.density[i] - 1.0).abs() < 3.5 * h.stderr[i], "bin {i}");
        }
    }

    #[test]
    fn haar_single_channel_matches_arcsine_mass() {
        // n = m = 1: r = cos θ with θ uniform, so P(R ≤ x) = (2/π) arcsin √x.
        let spec = EnsembleSpec::ideal(EnsembleKind::CRE, 1, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let v: Vec<Vec<f64>> = (0..40_000)
            .map(|_| reflection_eigenvalues(&ScatteringSample::haar(&spec, &mut rng), &spec).unwrap())
            .collect();
        let h = empirical_density(&v, 10).unwrap();
        let cdf = |x: f64| 2.0 / std::f64::consts::PI * x.sqrt().asin();
        let mut ok = 0;
        for i in 0..10 {
            let want = (cdf(h.bin_edges[i + 1]) - cdf(h.bin_edges[i])) / h.width(i);
            if (h.density[i] - want).abs() <= 3.0 * h.stderr[i] {
                ok += 1;
            }
        }
        assert!(ok >= 9);
    }
}
