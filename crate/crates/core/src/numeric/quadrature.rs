//! Gauss–Laguerre rules with weight `t^alpha e^{-t}`, exp-sinh quadrature on
//! the half line and composite Gauss–Legendre on finite intervals.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::{Arc, LazyLock, RwLock};

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Nodes and weights of a Gauss rule. Laguerre weights are normalized so that
/// they sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| if w == 0.0 { 0.0 } else { w * f(x) })
            .sum()
    }
}

/// Evaluates `L_n^(alpha)(x)` and `L_{n-1}^(alpha)(x)` with a common power-of-two
/// scale so large nodes do not overflow. Returns `(l_n, l_nm1, log_scale)`.
fn laguerre_pair(n: usize, alpha: f64, x: f64) -> (f64, f64, f64) {
    let mut prev = 1.0f64;
    let mut cur = 1.0 + alpha - x;
    let mut log_scale = 0.0f64;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        if cur.abs() > 1e150 {
            cur *= 1e-150;
            prev *= 1e-150;
            log_scale += 150.0 * std::f64::consts::LN_10;
        }
    }
    (cur, prev, log_scale)
}

fn compute_laguerre_rule(n: usize, alpha: f64) -> Rule {
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        jacobi[(i, i)] = 2.0 * i as f64 + alpha + 1.0;
        if i + 1 < n {
            let b = (((i + 1) as f64) * ((i + 1) as f64 + alpha)).sqrt();
            jacobi[(i, i + 1)] = b;
            jacobi[(i + 1, i)] = b;
        }
    }
    let eigen = SymmetricEigen::new(jacobi);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (eigen.eigenvalues[i], eigen.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

    // Eigenvector weights are accurate in absolute terms only, so the tiny
    // weights of the far nodes come from the derivative formula instead.
    let nf = n as f64;
    let log_norm = (1..=n).map(|k| (1.0 + alpha / k as f64).ln()).sum::<f64>();
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (mut x, gw_weight) in pairs {
        for _ in 0..3 {
            let (ln, lnm1, _) = laguerre_pair(n, alpha, x);
            let deriv = (nf * ln - (nf + alpha) * lnm1) / x;
            if deriv == 0.0 || !deriv.is_finite() {
                break;
            }
            let step = ln / deriv;
            x -= step;
            if step.abs() <= 1e-16 * x.abs() {
                break;
            }
        }
        let weight = if gw_weight >= 1e-8 {
            gw_weight
        } else {
            let (_, lnm1, log_scale) = laguerre_pair(n, alpha, x);
            (log_norm + x.ln() - 2.0 * (nf + alpha).ln() - 2.0 * (lnm1.abs().ln() + log_scale)).exp()
        };
        nodes.push(x);
        weights.push(weight);
    }
    Rule { nodes, weights }
}

type RuleCache = RwLock<HashMap<(usize, u64), Arc<Rule>>>;
static LAGUERRE_RULES: LazyLock<RuleCache> = LazyLock::new(|| RwLock::new(HashMap::new()));
const CACHE_LIMIT: usize = 512;

/// Gauss rule for `∫_0^∞ f(t) t^alpha e^{-t} dt / Γ(alpha + 1)` with `n` nodes.
pub fn laguerre_rule(n: usize, alpha: f64) -> Result<Arc<Rule>> {
    if n < 2 {
        return Err(Error::Domain(format!("a Gauss–Laguerre rule needs at least 2 nodes, got {n}")));
    }
    if !(alpha.is_finite() && alpha > -1.0) {
        return Err(Error::Domain(format!("Laguerre weight exponent must exceed -1, got {alpha}")));
    }
    let key = (n, alpha.to_bits());
    if let Some(rule) = LAGUERRE_RULES.read().expect("rule cache poisoned").get(&key) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(compute_laguerre_rule(n, alpha));
    let mut cache = LAGUERRE_RULES.write().expect("rule cache poisoned");
    if cache.len() >= CACHE_LIMIT {
        cache.clear();
    }
    Ok(Arc::clone(cache.entry(key).or_insert(rule)))
}

/// Gauss–Legendre rule on [-1, 1].
pub fn legendre_rule(n: usize) -> Rule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pnm1 = if n == 1 { 1.0 } else { p0 };
            dp = nf * (x * pn - pnm1) / (x * x - 1.0);
            let step = pn / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    Rule { nodes, weights }
}

/// Composite Gauss–Legendre over `[a, b]` split into `panels` equal pieces.
pub fn gauss_legendre(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let rule = legendre_rule(order);
    let width = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let lo = a + p as f64 * width;
            let mid = lo + 0.5 * width;
            0.5 * width * rule.apply(|x| f(mid + 0.5 * width * x))
        })
        .sum()
}

const EXP_SINH_SPAN: f64 = 6.5;
const EXP_SINH_LEVELS: usize = 12;

/// `∫_0^∞ g(t) exp(log_weight(ln t, t)) dt` by the exp-sinh substitution
/// `t = exp(π/2 sinh u)` with step halving until successive sums agree to `tol`.
///
/// `g` is not evaluated where the weight underflows, so integrands such as
/// `e^t/(1+t)` against `e^{-t}` can be passed in factored form.
pub fn exp_sinh(
    g: impl Fn(f64) -> f64,
    log_weight: impl Fn(f64, f64) -> f64,
    tol: f64,
) -> Result<f64> {
    let sample = |u: f64| -> Result<f64> {
        let ln_t = FRAC_PI_2 * u.sinh();
        let t = ln_t.exp();
        let log_jac = ln_t + (FRAC_PI_2 * u.cosh()).ln();
        let w = (log_weight(ln_t, t) + log_jac).exp();
        if w == 0.0 || t == 0.0 || !t.is_finite() {
            return Ok(0.0);
        }
        let gt = g(t);
        if gt == 0.0 {
            return Ok(0.0);
        }
        let value = gt * w;
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Quadrature(format!("integrand is not finite at t = {t:e}")))
        }
    };

    let mut h = 0.5f64;
    let steps = (EXP_SINH_SPAN / h) as i64;
    let mut sum = 0.0;
    for k in -steps..=steps {
        sum += sample(k as f64 * h)?;
    }
    let mut estimate = h * sum;
    for level in 1..=EXP_SINH_LEVELS {
        h *= 0.5;
        let steps = (EXP_SINH_SPAN / h) as i64;
        let mut k = -steps + if steps % 2 == 0 { 1 } else { 0 };
        while k <= steps {
            sum += sample(k as f64 * h)?;
            k += 2;
        }
        let next = h * sum;
        let diff = (next - estimate).abs();
        estimate = next;
        if level >= 3 && diff <= tol * next.abs().max(f64::MIN_POSITIVE) {
            return Ok(estimate);
        }
    }
    Err(Error::Quadrature(format!(
        "exp-sinh quadrature did not settle within {EXP_SINH_LEVELS} refinements"
    )))
}

/// Mellin transform `∫_0^∞ g(t) t^{s-1} dt` by exp-sinh quadrature.
pub fn mellin(g: impl Fn(f64) -> f64, s: f64, tol: f64) -> Result<f64> {
    exp_sinh(g, |ln_t, _| (s - 1.0) * ln_t, tol)
}
