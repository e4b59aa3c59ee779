//! Pfaffians, skew-orthogonal polynomials, characteristic-polynomial
//! averages, the Pfaffian form of the quaternion density and Monte Carlo
//! evaluation of the real-ensemble `β = 4` integrals.

pub mod charpoly;
pub mod pf;
pub mod pqe;
pub mod pre_mc;
pub mod skew;

pub use charpoly::{char_poly_average, CharPolyAverage};
pub use pf::{pfaffian, pfaffian_generic};
pub use pqe::{jpdf_pqe_pfaffian, PqePfaffian};
pub use pre_mc::{pre_form, pre_integral_mc, McBudget};
pub use skew::{kernel_divided, kernel_f, skew_moment, skew_moment_exact, SkewOrthoSystem};
