//! Levin u-transform for slowly convergent and mildly divergent series.

/// Accelerated sum with an error estimate taken from successive transforms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accelerated {
    pub value: f64,
    pub error: f64,
}

const MAX_ORDER: usize = 48;

fn levin_order(partial: &[f64], inv_omega: &[f64], k: usize) -> Option<f64> {
    let scale = inv_omega[..=k]
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return None;
    }
    let mut num = 0.0;
    let mut den = 0.0;
    let mut binom = 1.0f64;
    let kp1 = (k + 1) as f64;
    for j in 0..=k {
        let ratio = ((j + 1) as f64 / kp1).powi(k as i32 - 1);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * binom * ratio * (inv_omega[j] / scale);
        num += c * partial[j];
        den += c;
        binom = binom * (k - j) as f64 / (j + 1) as f64;
    }
    let value = num / den;
    value.is_finite().then_some(value)
}

/// Sums `terms` with the Levin u-transform. Exactly-zero terms are dropped
/// first since the remainder estimates divide by them. Returns `None` when
/// fewer than three nonzero terms remain.
pub fn levin_u(terms: &[f64]) -> Option<Accelerated> {
    let nonzero: Vec<f64> = terms.iter().copied().filter(|t| *t != 0.0).collect();
    if nonzero.len() < 3 {
        return None;
    }
    let mut partial = Vec::with_capacity(nonzero.len());
    let mut acc = 0.0;
    for t in &nonzero {
        acc += t;
        partial.push(acc);
    }
    let inv_omega: Vec<f64> = nonzero
        .iter()
        .enumerate()
        .map(|(j, a)| 1.0 / ((j + 1) as f64 * a))
        .collect();

    let kmax = (nonzero.len() - 1).min(MAX_ORDER);
    let transforms: Vec<Option<f64>> = (0..=kmax)
        .map(|k| levin_order(&partial, &inv_omega, k))
        .collect();

    let mut best: Option<Accelerated> = None;
    for k in 2..=kmax {
        let (Some(a), Some(b), Some(c)) = (transforms[k - 2], transforms[k - 1], transforms[k]) else {
            continue;
        };
        let error = (c - b).abs().max((b - a).abs());
        if best.is_none_or(|cur| error < cur.error) {
            best = Some(Accelerated { value: c, error });
        }
    }
    best
}
