//! Metropolis samples of the Poisson kernel against the analytic marginal.
//! Set ANDREEV_THREADS to control the worker count.

use andreev::ensembles::{bin_probability, EnsembleKind, EnsembleSpec};
use andreev::hypergeom::TruncationPolicy;
use andreev::sampling::{empirical_density, run_chains, ChainConfig};

fn main() -> andreev::Result<()> {
    let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 1, 1, 0.5)?;
    let cfg = ChainConfig { seed: 7, burn_in: 2000, thinning: 50, samples: 50_000 };
    let out = run_chains(&spec, &cfg, 4)?;
    println!("acceptance {:.3}", out.acceptance_rate());

    let hist = empirical_density(out.eigenvalues(), 20)?;
    let pol = TruncationPolicy::default();
    let mut within = 0;
    for i in 0..hist.bins() {
        let (lo, hi) = (hist.bin_edges[i], hist.bin_edges[i + 1]);
        let want = bin_probability(&spec, lo, hi, &pol)? / hist.width(i);
        let z = (hist.density[i] - want) / hist.stderr[i];
        within += usize::from(z.abs() <= 3.0);
        println!("[{lo:.2}, {hi:.2})  {:.4} ± {:.4}  analytic {want:.4}  z {z:+.2}", hist.density[i], hist.stderr[i]);
    }
    println!("{within}/{} bins within 3σ", hist.bins());
    Ok(())
}
