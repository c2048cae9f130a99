use crate::error::{Error, Result};

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Γ(x) for real `x`, with an error at the poles `0, -1, -2, ...`.
pub fn gamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::Pole { function: "gamma", at: x });
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// ln |Γ(x)|.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::Pole { function: "ln_gamma", at: x });
    }
    if x > 0.0 {
        return Ok(statrs::function::gamma::ln_gamma(x));
    }
    let reflected = std::f64::consts::PI / (std::f64::consts::PI * x).sin().abs();
    Ok(reflected.ln() - statrs::function::gamma::ln_gamma(1.0 - x))
}

/// ln n! for a nonnegative integer.
pub(crate) fn ln_factorial(n: usize) -> f64 {
    statrs::function::gamma::ln_gamma(n as f64 + 1.0)
}

/// Upper incomplete gamma Γ(n, x) for a positive integer `n` and any real `x`,
/// through the finite form `(n-1)! e^{-x} sum_{k<n} x^k/k!`.
pub fn incomplete_gamma_upper(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("incomplete gamma order must be at least 1".into()));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..n {
        term *= x / k as f64;
        sum += term;
    }
    let factorial: f64 = (1..n).map(f64::from).product();
    Ok(factorial * (-x).exp() * sum)
}
