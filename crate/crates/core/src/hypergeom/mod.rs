//! Hypergeometric functions of matrix argument and the Selberg-type integrals
//! that normalize them.

pub mod integral_rep;
pub mod selberg;
pub mod series;

use serde::{Deserialize, Serialize};

pub use integral_rep::{hfma1_integral_rep, ztilde, IntegralValue, QuadSpec};
pub use selberg::{dual_selberg_jack, selberg_base, selberg_jack, zp_constant};
pub use series::{hfma1, hfma2, kummer_transform};

/// When to stop summing weight layers.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TruncationPolicy {
    pub max_weight: u32,
    pub rel_tol: f64,
    pub consecutive_layers: u32,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { max_weight: 60, rel_tol: 1e-12, consecutive_layers: 2 }
    }
}

/// A truncated series with its remainder estimate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_estimate: f64,
    pub layers_used: u32,
    pub converged: bool,
}

impl SeriesValue {
    pub fn exact(value: f64, layers_used: u32) -> Self {
        SeriesValue { value, tail_estimate: 0.0, layers_used, converged: true }
    }
}
