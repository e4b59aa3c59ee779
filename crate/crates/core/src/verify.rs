//! Named numerical checks: exact identities, oracle comparisons and Monte
//! Carlo consistency tests, each with a tolerance and a measured error.

use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ensembles::{
    bin_probability, ideal_normalization, integrate_unnormalized, jpdf, jpdf_ideal, jpdf_semi_ideal, normalization_constant,
    EnsembleKind, EnsembleSpec,
};
use crate::error::Result;
use crate::hypergeom::{
    dual_selberg_jack, hfma1, hfma1_integral_rep, kummer_transform, selberg_base, selberg_jack, zp_constant, QuadSpec,
    TruncationPolicy,
};
use crate::partitions::{enumerate, partitions_of, Cell, Partition};
use crate::pfaffian::{
    char_poly_average, pfaffian, pre_integral_mc, skew_moment_exact, McBudget, PqePfaffian, SkewOrthoSystem,
};
use crate::quadrature::{gauss_legendre, tanh_sinh_split};
use crate::sampling::haar::{orthogonality_defect, quaternion_defect, unitarity_defect};
use crate::sampling::{
    empirical_density, haar_orthogonal, haar_special_orthogonal, haar_symplectic, reflection_eigenvalues, run_chains,
    poisson_density, poisson_density_full, ChainConfig, SampleMatrix, ScatteringSample,
};
use crate::scalar::{JackIndex, Scalar};
use crate::symfunc::{
    hook_coefficients, jack_at_identity, jack_eval, pochhammer, schur_at_identity, schur_eval, schur_of_matrix, upper_hook,
    JackEvaluator,
};

/// Version string stamped on every report and output file.
pub fn version() -> String {
    format!("andreev {} ({})", env!("CARGO_PKG_VERSION"), env!("ANDREEV_GIT_DESCRIBE"))
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Run only checks whose name starts with, or whose tags contain, this string.
    pub filter: Option<String>,
    /// Relative perturbation applied to every `d'_λ` used by the identity checks.
    pub perturb_hook: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub tags: Vec<String>,
    pub passed: bool,
    pub error: f64,
    pub tolerance: f64,
    pub detail: String,
    /// Wall time; left out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub filter: Option<String>,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Ctx {
    perturb: Option<BigRational>,
}

impl Ctx {
    fn d_prime(&self, lambda: &Partition, alpha: JackIndex) -> BigRational {
        let d = hook_coefficients::<BigRational>(lambda, alpha, 1).d_prime;
        match &self.perturb {
            Some(eps) => d.clone() + d * eps.clone(),
            None => d,
        }
    }
}

/// Outcome of one check: the measured error and a short description.
struct Measured {
    error: f64,
    detail: String,
}

fn measured(error: f64, detail: impl Into<String>) -> Result<Measured> {
    Ok(Measured { error, detail: detail.into() })
}

pub struct Check {
    pub name: &'static str,
    pub tags: &'static [&'static str],
    pub tolerance: f64,
    run: fn(&Ctx) -> Result<Measured>,
}

impl Check {
    pub fn matches(&self, filter: &str) -> bool {
        self.name.starts_with(filter) || self.tags.contains(&filter)
    }
}

/// Every check in the suite, in run order.
pub fn checks() -> Vec<Check> {
    macro_rules! check {
        ($name:expr, [$($tag:expr),*], $tol:expr, $f:expr) => {
            Check { name: $name, tags: &[$($tag),*], tolerance: $tol, run: $f }
        };
    }
    vec![
        check!("partitions.conjugate_involution", ["partitions"], 0.0, partitions_conjugate),
        check!("partitions.cell_data", ["partitions"], 0.0, partitions_cells),
        check!("partitions.enumeration_complete", ["partitions"], 0.0, partitions_enumeration),
        check!("symfunc.hook_pochhammer", ["symfunc", "c1"], 0.0, symfunc_hook_pochhammer),
        check!("symfunc.jack_identity", ["symfunc", "c1"], 0.0, symfunc_jack_identity),
        check!("symfunc.schur_jack", ["symfunc", "c1"], 0.0, symfunc_schur_jack),
        check!("symfunc.identity_quaternion", ["symfunc", "c1"], 0.0, symfunc_identity_quaternion),
        check!("symfunc.pochhammer_dual", ["symfunc", "c1"], 0.0, symfunc_pochhammer_dual),
        check!("symfunc.hook_dual", ["symfunc", "c1"], 0.0, symfunc_hook_dual),
        check!("symfunc.jack_schur_degeneration", ["symfunc", "c2"], 1e-10, symfunc_degeneration),
        check!("symfunc.dual_cauchy", ["symfunc", "c3"], 1e-8, symfunc_dual_cauchy),
        check!("symfunc.det_expansion", ["symfunc", "c3"], 1e-8, symfunc_det_expansion),
        check!("hypergeom.termination", ["hypergeom"], 0.0, hypergeom_termination),
        check!("hypergeom.selberg_quadrature", ["hypergeom", "c5"], 1e-6, hypergeom_selberg),
        check!("hypergeom.integral_rep", ["hypergeom", "c6"], 1e-6, hypergeom_integral_rep),
        check!("hypergeom.integral_rep_polynomial", ["hypergeom", "c6"], 1e-11, hypergeom_integral_rep_exact),
        check!("hypergeom.kummer", ["hypergeom", "c7"], 1.0, hypergeom_kummer),
        check!("hypergeom.kummer_involution", ["hypergeom", "c7"], 1e-10, hypergeom_kummer_involution),
        check!("ensembles.normalization", ["ensembles", "c8"], 1e-4, ensembles_normalization),
        check!("ensembles.ideal_constant", ["ensembles", "c8"], 0.0, ensembles_ideal_constant),
        check!("ensembles.symmetry", ["ensembles"], 1e-12, ensembles_symmetry),
        check!("ensembles.positivity", ["ensembles"], 0.0, ensembles_positivity),
        check!("ensembles.ideal_limit", ["ensembles"], 1e-14, ensembles_ideal_limit),
        check!("sampling.haar_structure", ["sampling"], 1e-10, sampling_structure),
        check!("sampling.haar_invariance", ["sampling"], 3.0, sampling_invariance),
        check!("sampling.poisson_reduced", ["sampling"], 1e-10, sampling_poisson_reduced),
        check!("sampling.coset_extension", ["sampling"], 3.0, sampling_coset),
        check!("sampling.group_integrals", ["sampling", "c4"], 3.0, sampling_group_integrals),
        check!("sampling.metropolis_marginal", ["sampling", "c9"], 0.05, sampling_metropolis),
        check!("sampling.ideal_control", ["sampling", "c9"], 0.05, sampling_ideal_control),
        check!("pfaffian.representation", ["pfaffian", "c10"], 1e-5, pfaffian_representation),
        check!("pfaffian.charpoly_symmetry", ["pfaffian"], 1e-12, pfaffian_charpoly_symmetry),
        check!("pfaffian.pre_integral_forms", ["pfaffian", "c11"], 3.0, pfaffian_pre_forms),
        check!("pfaffian.pf_squared", ["pfaffian", "c12"], 1e-8, pfaffian_pf_squared),
        check!("pfaffian.skew_table", ["pfaffian", "c12"], 1e-9, pfaffian_skew_table),
    ]
}

/// Runs the selected checks. Errors inside a check count as failures.
pub fn run_verification_suite(options: &VerifyOptions) -> Report {
    let ctx = Ctx {
        perturb: options.perturb_hook.map(rational_from_f64),
    };
    let mut results = Vec::new();
    for check in checks() {
        if let Some(f) = &options.filter {
            if !check.matches(f) {
                continue;
            }
        }
        let start = Instant::now();
        let (error, detail) = match (check.run)(&ctx) {
            Ok(m) => (m.error, m.detail),
            Err(e) => (f64::INFINITY, format!("error: {e}")),
        };
        results.push(CheckResult {
            name: check.name.to_string(),
            tags: check.tags.iter().map(|t| t.to_string()).collect(),
            passed: error <= check.tolerance,
            error,
            tolerance: check.tolerance,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    Report {
        version: version(),
        filter: options.filter.clone(),
        passed: results.iter().all(|c| c.passed),
        checks: results,
    }
}

fn rational_from_f64(v: f64) -> BigRational {
    BigRational::from_float(v).unwrap_or_else(BigRational::zero)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::from_ratio(n, d)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn rel_strict(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

fn alpha_power(alpha: JackIndex, k: u32) -> BigRational {
    alpha.as_scalar::<BigRational>().powi(k)
}

fn mean_stderr(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let m = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0);
    (m, (var / n).sqrt())
}

fn z_score(got: f64, want: f64, se: f64) -> f64 {
    if se == 0.0 {
        if (got - want).abs() < 1e-10 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (got - want).abs() / se
    }
}

// ---------------------------------------------------------------- partitions

fn partitions_conjugate(_: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    let mut seen = 0;
    for p in enumerate(8, 8) {
        seen += 1;
        let c = p.conjugate();
        if c.conjugate() != p || c.weight() != p.weight() || p.first() as usize != c.len() {
            bad += 1;
        }
    }
    measured(bad as f64, format!("{seen} partitions, {bad} violations"))
}

fn partitions_cells(_: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    for p in enumerate(8, 8) {
        let conj = p.conjugate();
        for (cell, d) in p.cells_with_data() {
            let Cell { row, col } = cell;
            if d.arm + d.coarm + 1 != p.part(row) || d.leg + d.coleg + 1 != conj.part(col) {
                bad += 1;
            }
        }
    }
    measured(bad as f64, format!("{bad} cells violate arm/leg sums"))
}

fn partitions_enumeration(_: &Ctx) -> Result<Measured> {
    // p(n, k): partitions of n with parts ≤ k
    fn count(n: u32, k: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        count(n, k - 1) + if k <= n { count(n - k, k) } else { 0 }
    }
    let mut bad = 0;
    for w in 0..=10 {
        let layer = partitions_of(w, w as usize, w);
        let mut uniq = layer.clone();
        uniq.sort_by(|a, b| a.parts().cmp(b.parts()));
        uniq.dedup();
        if uniq.len() != layer.len() || layer.len() as u64 != count(w, w) || layer.iter().any(|p| p.weight() != w) {
            bad += 1;
        }
    }
    measured(bad as f64, format!("{bad} weights with missing or duplicate partitions"))
}

// ---------------------------------------------------------------- symfunc

const ALPHAS: [JackIndex; 3] = [JackIndex::HALF, JackIndex::ONE, JackIndex::TWO];

fn symfunc_hook_pochhammer(_: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    let mut n_checked = 0;
    for alpha in ALPHAS {
        let inv = alpha.recip().as_scalar::<BigRational>();
        for n in 1..=5u32 {
            let nn = BigRational::from_i64(n as i64);
            for lam in enumerate(6, 6) {
                let h = hook_coefficients::<BigRational>(&lam, alpha, n);
                let scale = alpha_power(alpha, lam.weight());
                let b = scale.clone() * pochhammer(&(nn.clone() * inv.clone()), &lam, alpha);
                let e = scale.clone() * pochhammer(&(BigRational::one() + nn.clone() * inv.clone()), &lam, alpha);
                let ep = scale * pochhammer(&(BigRational::one() + (nn.clone() - BigRational::one()) * inv.clone()), &lam, alpha);
                n_checked += 1;
                if h.b != b || h.e != e || h.e_prime != ep {
                    bad += 1;
                }
            }
        }
    }
    measured(bad as f64, format!("{n_checked} (λ, α, n) triples, {bad} mismatches"))
}

fn symfunc_jack_identity(_: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    let mut n_checked = 0;
    for alpha in ALPHAS {
        for n in 1..=5usize {
            let mut ev = JackEvaluator::<BigRational>::new(alpha, vec![BigRational::one(); n]);
            for lam in enumerate(6, n) {
                let direct = ev.eval(&lam);
                let closed = jack_at_identity::<BigRational>(&lam, alpha, n as u32);
                let h = hook_coefficients::<BigRational>(&lam, alpha, n as u32);
                let via_poch = alpha_power(alpha, lam.weight())
                    * pochhammer(&(BigRational::from_i64(n as i64) * alpha.recip().as_scalar::<BigRational>()), &lam, alpha)
                    / h.h;
                n_checked += 1;
                if direct != closed || closed != via_poch {
                    bad += 1;
                }
            }
        }
    }
    measured(bad as f64, format!("{n_checked} evaluations at 1^n, {bad} mismatches"))
}

fn symfunc_schur_jack(ctx: &Ctx) -> Result<Measured> {
    let mut bad = Vec::new();
    let mut n_checked = 0;
    for alpha in [JackIndex::TWO, JackIndex::HALF] {
        for n in 1..=5u32 {
            for lam in enumerate(6, n as usize) {
                let h = hook_coefficients::<BigRational>(&lam, alpha, n);
                let lhs = h.e_prime / ctx.d_prime(&lam, alpha) * jack_at_identity::<BigRational>(&lam, alpha, n);
                let rhs = match alpha {
                    JackIndex::TWO => schur_at_identity::<BigRational>(&lam.double(), n),
                    _ => schur_at_identity::<BigRational>(&lam.union_self(), 2 * n),
                };
                n_checked += 1;
                if lhs != rhs {
                    bad.push(format!("α={alpha} n={n} λ={lam}"));
                }
            }
        }
    }
    let mut detail = format!("{n_checked} cases, {} mismatches", bad.len());
    if let Some(first) = bad.first() {
        detail += &format!(", first at {first}");
    }
    measured(bad.len() as f64, detail)
}

fn symfunc_identity_quaternion(ctx: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    let mut n_checked = 0;
    let half = JackIndex::HALF;
    for x in [q(3, 2), q(27, 10), q(10, 1)] {
        let two_x = BigRational::from_i64(2) * x;
        for lam in enumerate(8, 8) {
            let ll = lam.union_self();
            let lhs = pochhammer(&two_x, &ll, JackIndex::ONE) / hook_coefficients::<BigRational>(&ll, JackIndex::ONE, 1).h;
            let hl = hook_coefficients::<BigRational>(&lam, half, 1).h;
            let rhs = q(1, 2).powi(2 * lam.weight())
                * pochhammer(&two_x, &lam, half)
                * pochhammer(&(two_x.clone() - BigRational::one()), &lam, half)
                / (ctx.d_prime(&lam, half) * hl);
            n_checked += 1;
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    measured(bad as f64, format!("{n_checked} (λ, x) pairs, {bad} mismatches"))
}

fn symfunc_pochhammer_dual(_: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    let mut n_checked = 0;
    for alpha in [JackIndex::HALF, JackIndex::TWO] {
        let a = alpha.as_scalar::<BigRational>();
        for s in [q(3, 7), q(5, 2), q(-4, 3), q(2, 1)] {
            for lam in enumerate(6, 6) {
                let lhs = pochhammer(&s, &lam, alpha);
                let sign = if lam.weight() % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                let rhs = sign * a.recip().powi(lam.weight()) * pochhammer(&(-(a.clone() * s.clone())), &lam.conjugate(), alpha.recip());
                n_checked += 1;
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
    }
    measured(bad as f64, format!("{n_checked} cases, {bad} mismatches"))
}

fn symfunc_hook_dual(ctx: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    let mut n_checked = 0;
    for alpha in [JackIndex::HALF, JackIndex::ONE, JackIndex::TWO, JackIndex::new(2, 3)?] {
        for lam in enumerate(6, 6) {
            let h = hook_coefficients::<BigRational>(&lam, alpha, 1).h;
            let rhs = alpha_power(alpha, lam.weight()) * ctx.d_prime(&lam.conjugate(), alpha.recip());
            n_checked += 1;
            if h != rhs {
                bad += 1;
            }
        }
    }
    measured(bad as f64, format!("{n_checked} cases, {bad} mismatches"))
}

fn symfunc_degeneration(_: &Ctx) -> Result<Measured> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdee);
    let mut worst: f64 = 0.0;
    for n in 1..=4usize {
        for _ in 0..50 {
            let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            for lam in enumerate(6, n) {
                let j = jack_eval(&lam, JackIndex::ONE, &x);
                let s = schur_eval(&lam, &x);
                worst = worst.max(rel(j, s));
            }
        }
    }
    measured(worst, "max relative |P^(1) − S| over 200 points")
}

fn symfunc_dual_cauchy(_: &Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    let points = [([0.5, -0.3], [0.6, 0.2]), ([0.25, 0.4], [-0.7, 0.5]), ([-0.5, 0.55], [0.3, -0.45])];
    for alpha in [JackIndex::HALF, JackIndex::TWO, JackIndex::new(2, 3)?] {
        for (x, y) in points {
            let want: f64 = x.iter().flat_map(|xi| y.iter().map(move |yj| 1.0 + xi * yj)).product();
            let mut ex = JackEvaluator::new(alpha.recip(), x.to_vec());
            let mut ey = JackEvaluator::new(alpha, y.to_vec());
            let got: f64 = enumerate(12, 12).map(|lam| ex.eval(&lam.conjugate()) * ey.eval(&lam)).sum();
            worst = worst.max(rel_strict(got, want));
        }
    }
    measured(worst, "max relative error of Σ P_{λᵗ}^{(1/α)}(X) P_λ^{(α)}(Y) vs ∏(1 + x_j y_k)")
}

fn symfunc_det_expansion(_: &Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    let points: [&[f64]; 3] = [&[0.3, -0.2], &[0.1, 0.25, -0.3], &[-0.15, 0.3]];
    for a in [1.5, 3.0] {
        for x in points {
            let want: f64 = x.iter().map(|xi| (1.0 - xi).powf(-a)).product();
            let got: f64 = enumerate(40, x.len())
                .map(|lam| pochhammer(&a, &lam, JackIndex::ONE) / upper_hook(&lam, 1.0) * schur_eval(&lam, x))
                .sum();
            worst = worst.max(rel_strict(got, want));
        }
    }
    measured(worst, "max relative error of the Schur expansion of det[1−X]^{−a}, |λ| ≤ 40")
}

// ---------------------------------------------------------------- hypergeom

fn hypergeom_termination(_: &Ctx) -> Result<Measured> {
    let mut bad = 0;
    for (p, b, c, alpha, x) in [
        (2u32, 1.5, 2.5, JackIndex::HALF, vec![0.3, 0.4]),
        (3, 0.7, 1.2, JackIndex::TWO, vec![0.2, -0.5, 0.6]),
        (1, 4.0, 0.8, JackIndex::ONE, vec![0.9]),
    ] {
        let n = x.len() as u32;
        let full = hfma1(-(p as f64), b, c, alpha, &x, &TruncationPolicy::default())?;
        let cut = TruncationPolicy { max_weight: p * n, ..TruncationPolicy::default() };
        let truncated = hfma1(-(p as f64), b, c, alpha, &x, &cut)?;
        if full.value != truncated.value || !full.converged || full.tail_estimate != 0.0 {
            bad += 1;
        }
    }
    measured(bad as f64, format!("{bad} terminating series differ from their weight-pn truncation"))
}

/// `∫_{[0,1]^n} f` for symmetric `f` and `n ≤ 2`, by nested tanh-sinh on the ordered simplex.
fn symmetric_unit_integral(n: u32, f: impl Fn(&[f64]) -> f64) -> f64 {
    const TOL: f64 = 1e-11;
    match n {
        1 => tanh_sinh_split(|r, _, _| f(&[r]), 0.0, 1.0, TOL).value,
        _ => {
            2.0 * tanh_sinh_split(|r2, _, _| tanh_sinh_split(|r1, _, _| f(&[r1, r2]), 0.0, r2, TOL).value, 0.0, 1.0, TOL).value
        }
    }
}

fn selberg_weight(r: &[f64], x: f64, y: f64, alpha: JackIndex) -> f64 {
    let mut v: f64 = r.iter().map(|ri| ri.powf(x) * (1.0 - ri).powf(y)).product();
    if r.len() == 2 {
        v *= (r[1] - r[0]).abs().powf(2.0 / alpha.value());
    }
    v
}

fn hypergeom_selberg(_: &Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    let mut lines = Vec::new();
    let mut record = |label: String, closed: f64, quad: f64| {
        let e = rel_strict(closed, quad);
        worst = worst.max(e);
        lines.push(format!("{label}: {e:.1e}"));
    };
    for (x, y, alpha, n) in [(0.3, 1.7, JackIndex::HALF, 2), (1.0, 0.5, JackIndex::TWO, 2), (-0.4, 0.6, JackIndex::TWO, 2), (2.0, 3.0, JackIndex::HALF, 1)] {
        let quad = symmetric_unit_integral(n, |r| selberg_weight(r, x, y, alpha));
        record(format!("S_{n}({x},{y},{alpha})"), selberg_base(x, y, alpha, n)?, quad);
    }
    for (x, y, alpha, lam) in [(0.5, 1.0, JackIndex::TWO, crate::partition![1]), (0.2, 0.8, JackIndex::HALF, crate::partition![2, 1])] {
        let quad = symmetric_unit_integral(2, |r| selberg_weight(r, x, y, alpha) * jack_eval(&lam, alpha, r));
        record(format!("S_2^{lam}({x},{y},{alpha})"), selberg_jack(x, y, alpha, 2, &lam)?, quad);
    }
    // [0,∞) forms through y = t/(1−t)
    let half_line = |a: f64, b: f64, alpha: JackIndex, lam: Option<&Partition>| {
        symmetric_unit_integral(2, |t| {
            let y: Vec<f64> = t.iter().map(|ti| ti / (1.0 - ti)).collect();
            let jac: f64 = t.iter().map(|ti| (1.0 - ti).powi(-2)).product();
            let mut v: f64 = y.iter().map(|yi| yi.powf(a) * (1.0 + yi).powf(-b)).product();
            v *= (y[1] - y[0]).abs().powf(2.0 / alpha.value()) * jac;
            if let Some(l) = lam {
                v *= jack_eval(l, alpha, &y);
            }
            v
        })
    };
    for (a, b, alpha) in [(1.0, 9.0, JackIndex::HALF), (0.5, 6.0, JackIndex::TWO)] {
        record(format!("Z_2({a},{b},{alpha})"), zp_constant(a, b, 2, alpha)?, half_line(a, b, alpha, None));
    }
    for (lam, a, b, alpha) in [(crate::partition![1], 0.5, 8.0, JackIndex::TWO), (crate::partition![1, 1], 1.0, 12.0, JackIndex::HALF)] {
        record(
            format!("Z_2^{lam}({a},{b},{alpha})"),
            dual_selberg_jack(&lam, a, b, 2, alpha)?,
            half_line(a, b, alpha, Some(&lam)),
        );
    }
    measured(worst, lines.join("; "))
}

/// `(p, q, c, α′, X)` admissible for the Jacobi integral representation.
fn integral_rep_grid() -> Vec<(u32, f64, f64, JackIndex, Vec<f64>)> {
    let (h, t) = (JackIndex::HALF, JackIndex::TWO);
    vec![
        (1, 1.0, 1.0, t, vec![0.3]),
        (2, 3.0, 4.0, h, vec![0.2, 0.1]),
        (2, 2.0, 3.0, h, vec![0.3, -0.2]),
        (2, 1.5, 1.0, t, vec![0.25]),
        (3, 3.0, 4.0, h, vec![0.15, 0.3]),
        (2, 2.5, 1.5, t, vec![0.2, 0.4]),
        (1, 0.5, 2.0, t, vec![0.4, 0.1]),
        (3, 4.0, 2.5, h, vec![0.3]),
        (2, 2.0, 2.5, h, vec![0.1, 0.2]),
        (3, 3.0, 2.0, t, vec![0.2, 0.3]),
    ]
}

fn integral_rep_errors(polynomial_only: bool) -> Result<(f64, String)> {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for (p, qq, c, ap, x) in integral_rep_grid() {
        let upper = ap.value() * (qq - p as f64 + 1.0) - 1.0;
        let lower = ap.value() * c - x.len() as f64;
        let polynomial = upper.fract() == 0.0 && lower.fract() == 0.0;
        if polynomial_only && !polynomial {
            continue;
        }
        count += 1;
        let rep = hfma1_integral_rep(p, qq, c, ap, &x, &QuadSpec::default())?;
        let series = hfma1(-(p as f64), -qq, c, ap, &x, &TruncationPolicy::default())?;
        worst = worst.max(rel_strict(rep.value, series.value));
    }
    Ok((worst, format!("{count} cases, max relative difference from the series")))
}

fn hypergeom_integral_rep(_: &Ctx) -> Result<Measured> {
    let (e, d) = integral_rep_errors(false)?;
    measured(e, d)
}

fn hypergeom_integral_rep_exact(_: &Ctx) -> Result<Measured> {
    let (e, d) = integral_rep_errors(true)?;
    measured(e, format!("{d} (polynomial integrands, exact quadrature)"))
}

fn hypergeom_kummer(_: &Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    let pol = TruncationPolicy::default();
    let mut lines = Vec::new();
    for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
        for (n, m, r) in [(1, 1, vec![0.3]), (1, 2, vec![0.55]), (2, 2, vec![0.2, 0.6]), (2, 3, vec![0.35, 0.8])] {
            let spec = EnsembleSpec::uniform(kind, n, m, 0.5)?;
            let (a, b, c) = crate::ensembles::hfma_parameters(&spec);
            let alpha = spec.constants().alpha;
            let x: Vec<f64> = r.iter().map(|ri| 0.25 * ri).collect();
            let direct = hfma1(a, b, c, alpha, &x, &pol)?;
            let kummer = kummer_transform(a, b, c, alpha, &x, &pol)?;
            let budget = direct.tail_estimate + kummer.tail_estimate + 1e-12 * direct.value.abs();
            let ratio = (direct.value - kummer.value).abs() / budget;
            worst = worst.max(ratio);
            lines.push(format!("{kind}({n},{m}): |Δ|={:.1e}", (direct.value - kummer.value).abs()));
        }
    }
    measured(worst, format!("|direct − Kummer| / combined tail estimates; {}", lines.join(", ")))
}

fn hypergeom_kummer_involution(_: &Ctx) -> Result<Measured> {
    let pol = TruncationPolicy::default();
    let mut worst: f64 = 0.0;
    for (a, b, c, alpha, x) in [(-2.0, 1.5, 3.0, JackIndex::HALF, vec![0.2, 0.4]), (0.7, 1.2, 2.5, JackIndex::TWO, vec![0.3])] {
        let once = kummer_transform(a, b, c, alpha, &x, &pol)?;
        // the transform applied to (c−a, c−b; c) gives back (a, b; c)
        let twice = kummer_transform(c - a, c - b, c, alpha, &x, &pol)?;
        let direct = hfma1(a, b, c, alpha, &x, &pol)?;
        let back = hfma1(c - a, c - b, c, alpha, &x, &pol)?;
        worst = worst.max(rel_strict(once.value, direct.value)).max(rel_strict(twice.value, back.value));
    }
    measured(worst, "relative error of the transform and its inverse")
}

// ---------------------------------------------------------------- ensembles

fn ensembles_normalization(_: &Ctx) -> Result<Measured> {
    let pol = TruncationPolicy::default();
    let mut worst: f64 = 0.0;
    let mut lines = Vec::new();
    for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
        for (n, m) in [(1, 1), (1, 2), (2, 2)] {
            for gamma in [0.3, 0.6] {
                let spec = EnsembleSpec::uniform(kind, n, m, gamma)?;
                let e = rel_strict(integrate_unnormalized(&spec, &pol)?, normalization_constant(&spec)?);
                worst = worst.max(e);
                lines.push(format!("{kind}({n},{m},{gamma}): {e:.1e}"));
            }
        }
    }
    measured(worst, lines.join("; "))
}

fn ensembles_ideal_constant(_: &Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
        for (n, m) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
            let spec = EnsembleSpec::uniform(kind, n, m, 0.0)?;
            worst = worst.max((normalization_constant(&spec)? - ideal_normalization(&spec)?).abs());
        }
    }
    measured(worst, "|𝒞(0) − C_n|")
}

fn spectrum_grid(n: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let r: Vec<f64> = (0..n).map(|_| rng.random_range(0.02..0.98)).collect();
            let separated = (0..n).all(|i| (i + 1..n).all(|j| (r[i] - r[j]).abs() > 0.02));
            if separated {
                break r;
            }
        })
        .collect()
}

fn ensembles_symmetry(_: &Ctx) -> Result<Measured> {
    let pol = TruncationPolicy::default();
    let mut worst: f64 = 0.0;
    for kind in [EnsembleKind::PRE, EnsembleKind::PQE, EnsembleKind::CRE] {
        let spec = if kind.is_ideal() { EnsembleSpec::ideal(kind, 3, 4)? } else { EnsembleSpec::uniform(kind, 3, 4, 0.5)? };
        for r in spectrum_grid(3, 5, 3) {
            let base = jpdf(&spec, &r, &pol)?;
            for perm in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
                let rp: Vec<f64> = perm.iter().map(|&i| r[i]).collect();
                worst = worst.max(rel_strict(jpdf(&spec, &rp, &pol)?, base));
            }
        }
    }
    // non-uniform coupling: permuting γ̂ together with nothing else leaves the density unchanged
    let spec = EnsembleSpec::new(EnsembleKind::PRE, 2, 2, vec![0.3, 0.6])?;
    let swapped = EnsembleSpec::new(EnsembleKind::PRE, 2, 2, vec![0.6, 0.3])?;
    for r in spectrum_grid(2, 5, 4) {
        worst = worst.max(rel_strict(jpdf(&spec, &r, &pol)?, jpdf(&swapped, &r, &pol)?));
        worst = worst.max(rel_strict(jpdf(&spec, &[r[1], r[0]], &pol)?, jpdf(&spec, &r, &pol)?));
    }
    measured(worst, "max relative change under permutations of R and of γ̂")
}

fn ensembles_positivity(_: &Ctx) -> Result<Measured> {
    let pol = TruncationPolicy::default();
    let mut negatives = 0;
    for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
        for (n, m) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
            let spec = EnsembleSpec::uniform(kind, n, m, 0.7)?;
            for r in spectrum_grid(n, 10, 5) {
                let v = jpdf(&spec, &r, &pol)?;
                if v < 0.0 || !v.is_finite() {
                    negatives += 1;
                }
            }
        }
    }
    measured(negatives as f64, format!("{negatives} negative or non-finite values"))
}

fn ensembles_ideal_limit(_: &Ctx) -> Result<Measured> {
    let pol = TruncationPolicy::default();
    let mut worst: f64 = 0.0;
    for (kind, ideal) in [(EnsembleKind::PRE, EnsembleKind::CRE), (EnsembleKind::PQE, EnsembleKind::CQE)] {
        let spec = EnsembleSpec::uniform(kind, 2, 3, 0.0)?;
        let ispec = EnsembleSpec::ideal(ideal, 2, 3)?;
        for r in spectrum_grid(2, 20, 6) {
            worst = worst.max(rel_strict(jpdf_semi_ideal(&spec, &r, &pol)?, jpdf_ideal(&ispec, &r)?));
        }
    }
    measured(worst, "max relative |semi-ideal(γ=0) − ideal| on 20 points")
}

// ---------------------------------------------------------------- sampling

fn sampling_structure(_: &Ctx) -> Result<Measured> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let o = haar_orthogonal(4, &mut rng);
        worst = worst.max(orthogonality_defect(&o));
        let so = haar_special_orthogonal(5, &mut rng);
        worst = worst.max(orthogonality_defect(&so)).max((so.determinant() - 1.0).abs());
        let sp = haar_symplectic(3, &mut rng);
        worst = worst.max(unitarity_defect(&sp)).max(quaternion_defect(&sp));
    }
    measured(worst, "max unitarity / determinant / quaternion-reality defect over 3000 samples")
}

fn sampling_invariance(_: &Ctx) -> Result<Measured> {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let v = haar_orthogonal(3, &mut rng);
    let stats = |u: &DMatrix<f64>| [u[(0, 0)], u[(0, 0)].powi(2), u[(0, 1)] * u[(1, 0)], u.trace()];
    let k = 100_000;
    let mut a: Vec<Vec<f64>> = (0..4).map(|_| Vec::with_capacity(k)).collect();
    let mut b = a.clone();
    for _ in 0..k {
        let u = haar_orthogonal(3, &mut rng);
        for (i, s) in stats(&u).into_iter().enumerate() {
            a[i].push(s);
        }
        let w = &v * haar_orthogonal(3, &mut rng);
        for (i, s) in stats(&w).into_iter().enumerate() {
            b[i].push(s);
        }
    }
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        let (ma, sa) = mean_stderr(&a[i]);
        let (mb, sb) = mean_stderr(&b[i]);
        worst = worst.max((ma - mb).abs() / (sa * sa + sb * sb).sqrt());
    }
    measured(worst, "max two-sample z-score of U and VU moments (10⁵ each)")
}

fn sampling_poisson_reduced(_: &Ctx) -> Result<Measured> {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut worst: f64 = 0.0;
    for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
        let spec = EnsembleSpec::new(kind, 2, 3, vec![0.4, 0.7])?;
        for _ in 0..100 {
            let s = ScatteringSample::haar(&spec, &mut rng);
            worst = worst.max(rel_strict(poisson_density(&s, &spec)?, poisson_density_full(&s, &spec)?));
        }
    }
    measured(worst, "max relative difference, full vs reduced determinant")
}

fn sampling_coset(_: &Ctx) -> Result<Measured> {
    // right-multiplying the last m−n columns by an independent O(m−n) leaves R statistics unchanged
    let spec = EnsembleSpec::ideal(EnsembleKind::CRE, 1, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let k = 100_000;
    let dim = spec.n + spec.m;
    let tail = spec.m - spec.n;
    let (mut a, mut b) = (Vec::with_capacity(k), Vec::with_capacity(k));
    for _ in 0..k {
        let s = ScatteringSample::haar(&spec, &mut rng);
        a.push(reflection_eigenvalues(&s, &spec)?[0]);
        let SampleMatrix::Real(m) = ScatteringSample::haar(&spec, &mut rng).matrix else { unreachable!() };
        let mut ext = DMatrix::identity(dim, dim);
        ext.view_mut((dim - tail, dim - tail), (tail, tail)).copy_from(&haar_orthogonal(tail, &mut rng));
        let t = ScatteringSample { kind: spec.kind, matrix: SampleMatrix::Real(m * ext) };
        b.push(reflection_eigenvalues(&t, &spec)?[0]);
    }
    let (ma, sa) = mean_stderr(&a);
    let (mb, sb) = mean_stderr(&b);
    let sq = |v: &[f64]| v.iter().map(|x| x * x).collect::<Vec<_>>();
    let (qa, sqa) = mean_stderr(&sq(&a));
    let (qb, sqb) = mean_stderr(&sq(&b));
    let z = ((ma - mb).abs() / (sa * sa + sb * sb).sqrt()).max((qa - qb).abs() / (sqa * sqa + sqb * sqb).sqrt());
    measured(z, "two-sample z-score of E[R], E[R²] with and without the O(m−n) extension")
}

fn omega(lambda: &Partition, alpha: JackIndex, x: &[f64]) -> f64 {
    jack_eval(lambda, alpha, x) / jack_at_identity::<f64>(lambda, alpha, x.len() as u32)
}

fn sampling_group_integrals(_: &Ctx) -> Result<Measured> {
    use crate::partition;
    let k = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let mut worst: f64 = 0.0;
    let mut lines = Vec::new();
    // O(3)
    let a = DMatrix::from_row_slice(3, 3, &[0.9, 0.2, -0.1, 0.3, 0.5, 0.4, 0.0, -0.2, 0.7]);
    let ac = a.map(|v| Complex64::new(v, 0.0));
    let x: Vec<f64> = (&a * a.transpose()).symmetric_eigen().eigenvalues.iter().copied().collect();
    let o_cases = [
        (partition![2, 2], Some(partition![1, 1])),
        (partition![2], Some(partition![1])),
        (partition![1], None),
        (partition![2, 1], None),
    ];
    let mut o_vals: Vec<Vec<f64>> = o_cases.iter().map(|_| Vec::with_capacity(k)).collect();
    for _ in 0..k {
        let u = haar_orthogonal(3, &mut rng).map(|v| Complex64::new(v, 0.0));
        let au = &ac * u;
        for (i, (mu, _)) in o_cases.iter().enumerate() {
            o_vals[i].push(schur_of_matrix(mu, &au).re);
        }
    }
    for (i, (mu, lam)) in o_cases.iter().enumerate() {
        let want = lam.as_ref().map_or(0.0, |l| omega(l, JackIndex::TWO, &x));
        let (m, se) = mean_stderr(&o_vals[i]);
        let z = z_score(m, want, se);
        worst = worst.max(z);
        lines.push(format!("O(3) S{mu}: z={z:.2}"));
    }
    // Sp(2): A = Q₁ diag(0.9, 0.4) Q₂ as a 4×4 quaternion matrix
    let q1 = haar_symplectic(2, &mut rng);
    let q2 = haar_symplectic(2, &mut rng);
    let d = DMatrix::from_diagonal(&DVector::from_vec([0.9, 0.9, 0.4, 0.4].map(|v| Complex64::new(v, 0.0)).to_vec()));
    let aq = q1 * d * q2;
    let mut ev: Vec<f64> = aq.clone().singular_values().iter().map(|s| s * s).collect();
    ev.sort_by(f64::total_cmp);
    let xs = [ev[0], ev[2]];
    let s_cases = [
        (partition![1, 1], Some(partition![1])),
        (partition![2, 2], Some(partition![2])),
        (partition![1], None),
        (partition![2], None),
    ];
    let mut s_vals: Vec<Vec<f64>> = s_cases.iter().map(|_| Vec::with_capacity(k)).collect();
    for _ in 0..k {
        let au = &aq * haar_symplectic(2, &mut rng);
        for (i, (mu, _)) in s_cases.iter().enumerate() {
            s_vals[i].push(schur_of_matrix(mu, &au).re);
        }
    }
    for (i, (mu, lam)) in s_cases.iter().enumerate() {
        let want = lam.as_ref().map_or(0.0, |l| omega(l, JackIndex::HALF, &xs));
        let (m, se) = mean_stderr(&s_vals[i]);
        let z = z_score(m, want, se);
        worst = worst.max(z);
        lines.push(format!("Sp(2) S{mu}: z={z:.2}"));
    }
    measured(worst, lines.join(", "))
}

/// Fraction of `bins` bins where the chain's histogram misses the analytic bin mass by more than 3σ.
fn chain_vs_marginal(spec: &EnsembleSpec, reference: &EnsembleSpec, seed: u64) -> Result<(f64, String)> {
    let pol = TruncationPolicy::default();
    let cfg = ChainConfig { seed, burn_in: 2000, thinning: 50, samples: 100_000 };
    let out = run_chains(spec, &cfg, 8)?;
    let bins = 40;
    let h = empirical_density(out.eigenvalues(), bins)?;
    let mut missed = 0;
    for i in 0..bins {
        let want = bin_probability(reference, h.bin_edges[i], h.bin_edges[i + 1], &pol)? / h.width(i);
        if (h.density[i] - want).abs() > 3.0 * h.stderr[i] {
            missed += 1;
        }
    }
    let frac = missed as f64 / bins as f64;
    Ok((frac, format!("{}({},{}) γ={:?}: {missed}/{bins} bins beyond 3σ, acceptance {:.3}", spec.kind, spec.n, spec.m, spec.uniform_gamma().unwrap_or(0.0), out.acceptance_rate())))
}

fn sampling_metropolis(_: &Ctx) -> Result<Measured> {
    let pre = EnsembleSpec::uniform(EnsembleKind::PRE, 1, 2, 0.5)?;
    let pqe = EnsembleSpec::uniform(EnsembleKind::PQE, 1, 1, 0.5)?;
    let (a, da) = chain_vs_marginal(&pre, &pre, 91)?;
    let (b, db) = chain_vs_marginal(&pqe, &pqe, 92)?;
    measured(a.max(b), format!("{da}; {db}"))
}

fn sampling_ideal_control(_: &Ctx) -> Result<Measured> {
    let pre = EnsembleSpec::uniform(EnsembleKind::PRE, 1, 2, 0.0)?;
    let pqe = EnsembleSpec::uniform(EnsembleKind::PQE, 1, 1, 0.0)?;
    let (a, da) = chain_vs_marginal(&pre, &EnsembleSpec::ideal(EnsembleKind::CRE, 1, 2)?, 93)?;
    let (b, db) = chain_vs_marginal(&pqe, &EnsembleSpec::ideal(EnsembleKind::CQE, 1, 1)?, 94)?;
    measured(a.max(b), format!("{da}; {db}"))
}

// ---------------------------------------------------------------- pfaffian

fn pfaffian_representation(_: &Ctx) -> Result<Measured> {
    let pol = TruncationPolicy::default();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for m in [2, 3] {
        for gamma in [0.2, 0.5, 0.8] {
            let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 2, m, gamma)?;
            let pf = PqePfaffian::new(&spec)?;
            for r in spectrum_grid(2, 20, 100 + m as u64) {
                count += 1;
                worst = worst.max(rel_strict(pf.eval(&r)?, jpdf_semi_ideal(&spec, &r, &pol)?));
            }
        }
    }
    measured(worst, format!("max relative difference, Pfaffian vs series, {count} spectra"))
}

fn pfaffian_charpoly_symmetry(_: &Ctx) -> Result<Measured> {
    let sys = SkewOrthoSystem::build(8, 0.0, 0.0)?;
    let mut worst: f64 = 0.0;
    for (p, v) in [(2, vec![0.3, -0.2]), (4, vec![1.4, 0.1, -0.6]), (4, vec![0.2, 1.1, -0.3, 0.8])] {
        let base = char_poly_average(p, v.len(), &sys, &v)?;
        let mut w = v.clone();
        w.swap(0, 1);
        worst = worst.max(rel_strict(char_poly_average(p, w.len(), &sys, &w)?, base));
        w.reverse();
        worst = worst.max(rel_strict(char_poly_average(p, w.len(), &sys, &w)?, base));
    }
    measured(worst, "max relative change under permutations of v")
}

fn pfaffian_pre_forms(_: &Ctx) -> Result<Measured> {
    let pol = TruncationPolicy::default();
    let mut worst: f64 = 0.0;
    let mut lines = Vec::new();
    for m in [2usize, 3] {
        for (case, (n, r)) in [(1, vec![0.45]), (1, vec![0.9]), (2, vec![0.3, 0.75])].into_iter().enumerate() {
            let spec = EnsembleSpec::uniform(EnsembleKind::PRE, n, m, 0.7)?;
            let mc = pre_integral_mc(&spec, &r, &McBudget { samples: 200_000, target_stderr: None, seed: 40 + 10 * m as u64 + case as u64 })?;
            let x: Vec<f64> = r.iter().map(|ri| 0.49 * ri).collect();
            let mf = m as f64;
            let series = hfma1(-mf / 2.0, -(mf - 1.0) / 2.0, n as f64 / 2.0, JackIndex::TWO, &x, &pol)?;
            let z = z_score(mc.value, series.value, mc.stderr);
            worst = worst.max(z);
            lines.push(format!("m={m} n={n}: z={z:.2}"));
        }
    }
    measured(worst, lines.join(", "))
}

fn pfaffian_pf_squared(_: &Ctx) -> Result<Measured> {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut worst: f64 = 0.0;
    for n in (2..=12).step_by(2) {
        for _ in 0..20 {
            let mut a = DMatrix::zeros(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    let v: f64 = rng.random_range(-1.0..1.0);
                    a[(i, j)] = v;
                    a[(j, i)] = -v;
                }
            }
            let pf = pfaffian(&a)?;
            worst = worst.max(rel_strict(pf * pf, a.determinant()));
        }
    }
    measured(worst, "max relative |Pf² − det| over 120 matrices up to 12×12")
}

fn pfaffian_skew_table(_: &Ctx) -> Result<Measured> {
    let sys = SkewOrthoSystem::build(8, 0.0, 0.0)?;
    let rule = gauss_legendre(24);
    // ⟨f, g⟩ on the two triangles u < v and u > v
    let skew = |f: &dyn Fn(f64) -> f64, g: &dyn Fn(f64) -> f64| {
        let mut s = 0.0;
        for (&v, &wv) in rule.nodes.iter().zip(&rule.weights) {
            let (h_lo, h_hi) = (0.5 * (v + 1.0), 0.5 * (1.0 - v));
            for (&t, &wt) in rule.nodes.iter().zip(&rule.weights) {
                let u_lo = h_lo * t + 0.5 * (v - 1.0);
                let u_hi = h_hi * t + 0.5 * (1.0 + v);
                s += wv * wt * g(v) * (h_lo * f(u_lo) - h_hi * f(u_hi));
            }
        }
        s
    };
    let mut worst = (skew(&|_| 1.0, &|v| v) - skew_moment_exact(0, 1).to_f64()).abs();
    for i in 0..=8 {
        for j in 0..=8 {
            let got = skew(&|u| sys.eval(i, u), &|v| sys.eval(j, v));
            let want = match (i % 2, j % 2) {
                (0, 1) if j == i + 1 => sys.r[i / 2],
                (1, 0) if i == j + 1 => -sys.r[j / 2],
                _ => 0.0,
            };
            worst = worst.max((got - want).abs());
        }
    }
    measured(worst, "max |⟨q_i, q_j⟩_quadrature − table| for degree ≤ 8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_selects_by_tag_and_prefix() {
        let r = run_verification_suite(&VerifyOptions { filter: Some("partitions".into()), perturb_hook: None });
        assert_eq!(r.checks.len(), 3);
        assert!(r.passed);
        let r = run_verification_suite(&VerifyOptions { filter: Some("symfunc.hook_dual".into()), perturb_hook: None });
        assert_eq!(r.checks.len(), 1);
    }

    #[test]
    fn injected_hook_fault_is_caught() {
        let opts = VerifyOptions { filter: Some("symfunc.schur_jack".into()), perturb_hook: Some(1e-6) };
        let r = run_verification_suite(&opts);
        assert!(!r.passed);
        let clean = run_verification_suite(&VerifyOptions { perturb_hook: None, ..opts });
        assert!(clean.passed, "{:?}", clean.checks);
    }
}
