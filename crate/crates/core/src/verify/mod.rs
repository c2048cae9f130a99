//! A registry of named identity checks with deterministic, seeded runs and
//! machine-readable reports.

mod exact_checks;
mod numeric_checks;
mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use exact_checks as ex;
use numeric_checks as nu;
use support::Tally;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    Exact,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    /// Informational: the measured discrepancy is reported but never fails a run.
    Info,
}

type ExactRunner = fn(&mut ChaCha8Rng, usize) -> Result<Tally>;
type NumericRunner = fn(&mut ChaCha8Rng, usize, f64) -> Result<Tally>;

#[derive(Clone, Copy)]
enum Runner {
    Exact(ExactRunner),
    Numeric(NumericRunner),
}

/// A registered check.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub name: &'static str,
    pub layer: Layer,
    pub description: &'static str,
    /// Absolute tolerance for numeric checks; zero for exact ones.
    pub tolerance: f64,
    /// Number of randomized trials requested (deterministic checks ignore it).
    pub trials: usize,
    pub informational: bool,
    runner: Runner,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec")
            .field("name", &self.name)
            .field("layer", &self.layer)
            .field("tolerance", &self.tolerance)
            .field("trials", &self.trials)
            .field("informational", &self.informational)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub layer: Layer,
    pub status: Status,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub trials: usize,
    pub seed: u64,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

const fn exact(name: &'static str, description: &'static str, trials: usize, run: ExactRunner) -> CheckSpec {
    CheckSpec { name, layer: Layer::Exact, description, tolerance: 0.0, trials, informational: false, runner: Runner::Exact(run) }
}

const fn numeric(name: &'static str, description: &'static str, tolerance: f64, trials: usize, run: NumericRunner) -> CheckSpec {
    CheckSpec { name, layer: Layer::Numeric, description, tolerance, trials, informational: false, runner: Runner::Numeric(run) }
}

const fn info(mut spec: CheckSpec) -> CheckSpec {
    spec.informational = true;
    spec
}

const SERIES: f64 = 1e-8;
const QUADRATURE: f64 = 1e-7;

static CHECKS: &[CheckSpec] = &[
    exact("eq1_fft_round_trip", "FFT⁻¹(FFT(p)) = p and FFT(FFT⁻¹(f)) = f", 300, ex::fft_round_trip),
    exact("eq3_rft_round_trip", "RFT⁻¹(RFT(p)) = p and RFT(RFT⁻¹(f)) = f", 300, ex::rft_round_trip),
    numeric("eq5_newton_taylor_duality", "FFT(f)(s) = sum binom(s,n) n! a_n agrees with the exact transform", 1e-10, 30, nu::newton_taylor_duality),
    numeric("eq6_ifft_series", "FFT⁻¹(f)(x) = e^(-x) sum f(n) x^n / n! agrees with the exact transform", 1e-9, 30, nu::ifft_series),
    numeric("eq7_quadrature_fidelity", "RFT(t^n)(s) = s^(n rising) by generalized Gauss-Laguerre quadrature", QUADRATURE, 1, nu::quadrature_fidelity),
    numeric("eq7_rft_polynomial_agreement", "quadrature RFT of a polynomial equals its exact RFT", QUADRATURE, 20, nu::rft_polynomial_agreement),
    numeric("eq8_mellin_consistency", "Γ(s) RFT(f)(s) = M(f e^(-t))(s)", SERIES, 1, nu::mellin_consistency),
    numeric("eq9_irft_series", "RFT⁻¹(f)(x) = e^x sum (-1)^n f(-n) x^n / n! agrees with the exact transform", SERIES, 30, nu::irft_series),
    exact("eq10_reflection", "RFT_t(f(t))(x) = FFT_t(f(-t))(-x), and likewise for the inverses", 100, ex::reflection),
    numeric("eq11_reflection_numeric", "RFT(e^(-at))(s) = FFT(e^(at))(-s) = (1+a)^(-s)", SERIES, 1, nu::reflection_numeric),
    exact("eq12_linearity", "FFT and FFT⁻¹ are linear", 100, ex::linearity),
    exact("eq14_basis_commutation", "FFT(∂^k x^n) = Δ^k (x)_n and FFT⁻¹(Δ^k (x)_n) = ∂^k x^n", 1, ex::basis_commutation),
    exact("eq16_fft_derivative_commutation", "FFT(∂^k f) = Δ^k FFT(f)", 100, ex::fft_derivative),
    exact("eq17_ifft_difference_commutation", "FFT⁻¹(Δ^k f) = ∂^k FFT⁻¹(f)", 100, ex::ifft_difference),
    exact("eq18_ifft_log_derivative", "FFT⁻¹(∂^k f) = (log(1+∂))^k FFT⁻¹(f)", 100, ex::ifft_log_derivative),
    exact("eq19_fft_exp_difference", "FFT(Δ^k f) = (e^Δ - 1)^k FFT(f)", 100, ex::fft_exp_difference),
    exact("eq20_integration_summation", "FFT(∂⁻¹ f) = Δ⁻¹ FFT(f) up to constants, with the inverse-operator forms", 100, ex::integration_summation),
    numeric("eq24_summation_identity", "∫_0^∞ FFT⁻¹(f)(t) dt = sum f(n) for f(n) = r^n", SERIES, 1, nu::summation_identity),
    exact("eq25_operator_expansion", "FFT(f) = sum (log(1+∂))^k f(0) x^k / k! and FFT⁻¹(f) = sum (e^Δ-1)^k f(0) (x)_k / k!", 100, ex::operator_expansion),
    exact("eq27_touchard_operator", "(log(1+∂))^k T_n = (n)_k T_(n-k) and (e^Δ-1)^k Z_n = (n)_k Z_(n-k)", 1, ex::touchard_z_operators),
    exact("eq29_touchard_series_expansion", "f(x) = sum (log(1+∂))^k f(x0) T_k(x - x0) / k!", 100, ex::touchard_series),
    exact("eq30_z_series_expansion", "f(x) = sum (e^Δ-1)^k f(x0) Z_k(x - x0) / k!", 100, ex::z_series),
    exact("eq33_shift_identities", "FFT(f(x+a)) = e^(aΔ) FFT(f), FFT⁻¹(f(x+a)) = (1+∂)^a FFT⁻¹(f), and the coinciding outer shifts", 100, ex::shifting),
    exact("eq37_charlier_shift", "FFT((x+a)^n) = n! L_n^(x-n)(-a) = a^n c_n(x,-a)", 100, ex::charlier_shift),
    info(exact("eq37_charlier_sign_as_printed", "discrepancy of the (-a)^n c_n(x,-a) form", 100, ex::charlier_sign_as_printed)),
    exact("eq38_inverse_charlier_shift", "FFT⁻¹((x+a)_n) = n! L_n^(a-n)(-x) = x^n c_n(a,-x)", 100, ex::inverse_charlier_shift),
    numeric("eq39_charlier_orthogonality", "sum a^k/k! c_n(k,a) c_m(k,a) = e^a n!/a^n δ_(n,m)", SERIES, 1, nu::charlier_orthogonality),
    exact("eq40_basis_shift", "FFT⁻¹((x)_n f) = x^n FFT⁻¹(f(x+n)) and FFT(t^n g)(x) = (x)_n FFT(g)(x-n)", 30, ex::basis_shift),
    exact("eq44_binomial_transform_chain", "BT(f) = FFT(e^x FFT⁻¹(f))", 50, ex::binomial_transform_chain),
    exact("eq46_inverse_binomial_chain", "BT⁻¹(f) = FFT(e^(-x) FFT⁻¹(f)) and BT(BT⁻¹(f)) = f", 50, ex::inverse_binomial_chain),
    exact("eq47_convolution_egf", "conv(f,g)(k) = k! [x^k] EGF(f) EGF(g) for k <= 30", 30, ex::convolution_egf),
    exact("eq50_conv_one", "conv(1, g) = BT(g)", 50, ex::convolution_with_one),
    exact("eq51_iterated_convolution", "FFT⁻¹(conv^(n)(f)) = e^(nx) (FFT⁻¹(f))^(n+1)", 20, ex::iterated_convolution_check),
    exact("eq55_scaling", "FFT(f(ax)) = a^(x∇) FFT(f)", 100, ex::scaling),
    exact("eq56_falling_product_ifft", "FFT⁻¹((x)_n (x)_m) = x^n m! L_m^(n-m)(-x)", 1, ex::falling_product_ifft),
    exact("eq57_falling_linearization", "(x)_n (x)_m = sum C(n,k) C(m,k) k! (x)_(n+m-k)", 1, ex::falling_linearization),
    exact("eq58_hadamard_ifft", "FFT⁻¹(f g) = sum ∂^k FFT⁻¹(f) ∂^k FFT⁻¹(g) x^k / k!", 100, ex::hadamard),
    exact("eq59_hadamard_fft", "FFT(F) FFT(G) = FFT(sum ∂^k F ∂^k G x^k / k!)", 100, ex::hadamard_fft),
    exact("eq60_conv_product", "FFT⁻¹(BT⁻¹(conv(f,g))) = FFT⁻¹(f) FFT⁻¹(g)", 50, ex::convolution_product),
    exact("eq61_multiplication_chain", "FFT(F G) = BT⁻¹(conv(FFT(F), FFT(G))) at integers k <= 12", 50, ex::multiplication_chain),
    exact("eq62_coefficient_extraction", "a_n = FFT(e^(-x) f)(n) / n! and FFT⁻¹(BT(n! a_n)) = f", 50, ex::coefficient_extraction),
    numeric("eq67_laplace_mellin", "RFT(e^x L(f)) = ∫ f(t) t^(-x) dt, here Γ(1-s) for f = e^(-t)", 1e-6, 1, nu::laplace_mellin),
    info(numeric("eq67_final_argument_as_printed", "distance from the Mellin transform at -s-1", 0.0, 1, nu::laplace_final_argument)),
    numeric("eq69_fractional_derivative", "∂_t^s f(t) = FFT_x(e^(-x) f(x+t))(s)", SERIES, 1, nu::fractional_derivative_check),
    numeric("eq69_fractional_ladder", "∂^(1/2) ∂^(1/2) f = ∂ f", 1e-6, 1, nu::fractional_ladder),
    numeric("eq70_fractional_difference", "Δ_t^s f(t) = FFT_x(e^(-x) FFT⁻¹_x(f(x+t)))(s)", SERIES, 1, nu::fractional_difference_check),
    exact("eq78_theta_representation", "FFT⁻¹(f) = e^(-x) f(x∂) e^x and f = FFT(e^(-x) f(x∂) e^x)", 50, ex::theta_representation),
    numeric("eq80_incomplete_gamma", "FFT⁻¹((x)_(-n)) = x^(-n) (1 - Γ(n,x)/(n-1)!)", 1e-9, 1, nu::incomplete_gamma),
    numeric("eq84_incomplete_gamma_rising", "RFT⁻¹(x^(-n rising)) = x^(-n) (1 - Γ(n,-x)/(n-1)!)", 1e-9, 1, nu::incomplete_gamma_rising),
    info(numeric("eq89_product_identity", "sum (-x)^k/k! FFT⁻¹(f(t+k)) FFT⁻¹(g(t+k)) = e^(-x) sum (-1)^k Δ^k f(0) Δ^k g(0) x^k/k!", 0.0, 1, nu::product_identity)),
    info(numeric("eq90_zeta_quadrature", "RFT(e^x/(e^x-1)) compared with ζ(s)", 0.0, 1, nu::zeta_quadrature)),
    exact("eq91_bernoulli_structure", "e^x/(e^x-1) = sum B_(n+1) (-1)^(n+1) x^n / (n+1)! by series division", 1, ex::bernoulli_structure),
    info(numeric("eq91_partial_sums", "partial sums of the Bernoulli rising-factorial series at s = 2", 0.0, 1, nu::zeta_partial_sums)),
    numeric("table2_power_row", "RFT(t^a f) = Γ(s+a)/Γ(s) RFT(f)(s+a)", QUADRATURE, 1, nu::table2_power_row),
    numeric("table2_scaling_row", "RFT(f(at)) = a^(-s) RFT(e^((1-1/a)t) f)", QUADRATURE, 1, nu::table2_scaling_row),
    numeric("table3_gamma_row", "FFT(e^(-x)/(1-x)) = Γ(x+1)", 1e-9, 1, nu::gamma_row),
    numeric("table3_shifted_gamma_row", "FFT(Γ(y+1) e^(-x)/(1-x)^(y+1)) = Γ(x+y+1)", 1e-9, 1, nu::shifted_gamma_row),
    info(numeric("table3_shifted_gamma_row_as_printed", "distance from the Γ(x+y) right-hand side", 0.0, 1, nu::shifted_gamma_row_as_printed)),
    exact("table3_power_exp_row", "FFT(x^s e^(-x)) = Γ(s+1) δ[x-s] at integers", 1, ex::power_exp_row),
    exact("table3_monomial_row", "FFT(x^n) = (x)_n", 1, ex::monomial_row),
    exact("table3_falling_row", "FFT((x)_n) = Z_n", 1, ex::falling_row),
    exact("table3_z_row", "FFT(Z_n) = sum s(n,k) Z_k", 1, ex::z_row),
    exact("table3_touchard_row", "FFT(T_n) = x^n", 1, ex::touchard_row),
    exact("table3_stirling_touchard_row", "FFT(sum S(n,k) T_k) = T_n", 1, ex::stirling_touchard_row),
    numeric("table3_exponential_row", "FFT(e^((a-1)x)) = a^x", 1e-9, 1, nu::exponential_row),
    numeric("table3_complex_exponential_row", "FFT(e^(iωx)) = (ω²+1)^(x/2) e^(ix atan ω)", 1e-6, 1, nu::complex_exponential_row),
    numeric("table3_sin_row", "FFT(sin(ωx)) = (ω²+1)^(x/2) sin(x atan ω)", 1e-6, 1, nu::sin_row),
    numeric("table3_sin_tan_row", "FFT(sin(x tan ω)) = sin(ωx)/cos^x(ω)", 1e-6, 1, nu::sin_tan_row),
    numeric("table3_cos_row", "FFT(cos(ωx)) = (ω²+1)^(x/2) cos(x atan ω)", 1e-6, 1, nu::cos_row),
    numeric("table3_cos_tan_row", "FFT(cos(x tan ω)) = cos(ωx)/cos^x(ω)", 1e-6, 1, nu::cos_tan_row),
    exact("table3_laguerre_row", "FFT(x^(n+m) L_n^(m)(-x)) = (x)_(n+m) (x)_n / n!", 1, ex::laguerre_row),
    info(exact("table3_laguerre_row_as_printed", "distance from the (x)_(n+m) (x)_m / m! right-hand side", 1, ex::laguerre_row_as_printed)),
];

/// Topics of the theory and the checks that cover each.
pub static COVERAGE: &[(&str, &[&str])] = &[
    ("transform definitions", &["eq1_fft_round_trip", "eq3_rft_round_trip", "eq5_newton_taylor_duality", "eq6_ifft_series", "eq7_quadrature_fidelity", "eq8_mellin_consistency", "eq9_irft_series"]),
    ("falling/rising symmetry", &["eq10_reflection", "eq11_reflection_numeric"]),
    ("linearity", &["eq12_linearity"]),
    ("derivative and difference commutation", &["eq14_basis_commutation", "eq16_fft_derivative_commutation", "eq17_ifft_difference_commutation", "eq18_ifft_log_derivative", "eq19_fft_exp_difference"]),
    ("integration and summation", &["eq20_integration_summation", "eq24_summation_identity"]),
    ("operator expansions", &["eq25_operator_expansion", "eq27_touchard_operator", "eq29_touchard_series_expansion", "eq30_z_series_expansion"]),
    ("shifting", &["eq33_shift_identities"]),
    ("orthogonality", &["eq37_charlier_shift", "eq38_inverse_charlier_shift", "eq39_charlier_orthogonality"]),
    ("basis shifts", &["eq40_basis_shift"]),
    ("binomial transform", &["eq44_binomial_transform_chain", "eq46_inverse_binomial_chain"]),
    ("convolution", &["eq47_convolution_egf", "eq50_conv_one", "eq51_iterated_convolution"]),
    ("scaling", &["eq55_scaling"]),
    ("multiplication", &["eq56_falling_product_ifft", "eq57_falling_linearization", "eq58_hadamard_ifft", "eq59_hadamard_fft", "eq60_conv_product", "eq61_multiplication_chain"]),
    ("coefficient extraction", &["eq62_coefficient_extraction"]),
    ("Laplace and Mellin", &["eq67_laplace_mellin"]),
    ("fractional calculus", &["eq69_fractional_derivative", "eq69_fractional_ladder", "eq70_fractional_difference"]),
    ("theta operator", &["eq78_theta_representation"]),
    ("incomplete gamma", &["eq80_incomplete_gamma", "eq84_incomplete_gamma_rising"]),
    ("zeta series", &["eq91_bernoulli_structure", "eq91_partial_sums"]),
    ("rising transform properties", &["table2_power_row", "table2_scaling_row"]),
    ("transform table", &[
        "table3_gamma_row", "table3_shifted_gamma_row", "table3_power_exp_row", "table3_monomial_row", "table3_falling_row",
        "table3_z_row", "table3_touchard_row", "table3_stirling_touchard_row", "table3_exponential_row",
        "table3_complex_exponential_row", "table3_sin_row", "table3_sin_tan_row", "table3_cos_row", "table3_cos_tan_row",
        "table3_laguerre_row",
    ]),
];

/// All registered checks in their fixed order.
pub fn list_checks() -> &'static [CheckSpec] {
    CHECKS
}

pub fn find_check(name: &str) -> Option<&'static CheckSpec> {
    CHECKS.iter().find(|c| c.name == name)
}

/// FNV-1a over the seed and the check name, so each check draws an independent stream.
fn check_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in seed.to_le_bytes().iter().chain(name.as_bytes()) {
        h ^= u64::from(*byte);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

fn execute(spec: &CheckSpec, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(check_seed(seed, spec.name));
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| match spec.runner {
        Runner::Exact(f) => f(&mut rng, spec.trials),
        Runner::Numeric(f) => f(&mut rng, spec.trials, spec.tolerance),
    }));
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let mut report = CheckReport {
        name: spec.name.to_string(),
        layer: spec.layer,
        status: Status::Error,
        max_abs_error: 0.0,
        tolerance: spec.tolerance,
        trials: 0,
        seed,
        elapsed_ms,
        detail: None,
    };
    match outcome {
        Err(payload) => report.detail = Some(format!("panicked: {}", panic_message(payload))),
        Ok(Err(err)) => report.detail = Some(err.to_string()),
        Ok(Ok(tally)) => {
            report.trials = tally.trials;
            report.max_abs_error = tally.max_abs_error;
            report.status = if spec.informational {
                Status::Info
            } else if tally.mismatches == 0 && tally.trials > 0 {
                Status::Pass
            } else {
                Status::Fail
            };
            report.detail = match (tally.mismatches, tally.first_failure) {
                (0, _) => tally.note,
                (n, Some(first)) => Some(format!("{n} mismatches; first: {first}")),
                (n, None) => Some(format!("{n} mismatches")),
            };
            if report.status == Status::Fail && tally.trials == 0 {
                report.detail = Some("no trials were run".into());
            }
        }
    }
    report
}

/// Runs one check by name.
pub fn run_check(name: &str, seed: u64) -> Result<CheckReport> {
    let spec = find_check(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    Ok(execute(spec, seed))
}

/// Runs every check whose name matches the glob `filter`, in registry order.
pub fn run_all(filter: Option<&str>, seed: u64, parallel: bool) -> Result<Vec<CheckReport>> {
    let pattern = filter
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| Error::Parse(format!("invalid filter: {e}")))?;
    let selected: Vec<&CheckSpec> = CHECKS
        .iter()
        .filter(|c| pattern.as_ref().is_none_or(|p| p.matches(c.name)))
        .collect();
    Ok(if parallel {
        selected.par_iter().map(|spec| execute(spec, seed)).collect()
    } else {
        selected.iter().map(|spec| execute(spec, seed)).collect()
    })
}

/// Counts of each status in a set of reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub informational: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        reports.iter().fold(Summary::default(), |mut s, r| {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Error => s.errors += 1,
                Status::Info => s.informational += 1,
            }
            s
        })
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} passed, {} failed, {} errors, {} informational",
            self.passed, self.failed, self.errors, self.informational
        )
    }
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
            Status::Info => "INFO",
        }
    }
}

/// Plain-text table, one line per report.
pub fn format_table(reports: &[CheckReport]) -> String {
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let mut out = format!("{:<6} {:<width$} {:>10} {:>10} {:>7} {:>8}\n", "status", "name", "max_err", "tol", "trials", "ms");
    for r in reports {
        out.push_str(&format!(
            "{:<6} {:<width$} {:>10.2e} {:>10.1e} {:>7} {:>8}",
            r.status.label(),
            r.name,
            r.max_abs_error,
            r.tolerance,
            r.trials,
            r.elapsed_ms
        ));
        if let Some(detail) = r.detail.as_ref().filter(|_| r.status != Status::Pass) {
            out.push_str("  ");
            out.push_str(detail);
        }
        out.push('\n');
    }
    out
}
