//! Generalized Pochhammer symbols, hook products, Jack and Schur polynomials.

pub mod hooks;
pub mod jack;
pub mod pochhammer;
pub mod schur;

pub use hooks::{hook_coefficients, lower_hook, upper_hook, HookCoefficients};
pub use jack::{jack_at_identity, jack_coefficients, jack_eval, jack_eval_branching, JackEvaluator, JackExpansion};
pub use pochhammer::{gen_pochhammer, pochhammer};
pub use schur::{schur_at_identity, schur_eval, schur_from_power_sums, schur_of_matrix};
