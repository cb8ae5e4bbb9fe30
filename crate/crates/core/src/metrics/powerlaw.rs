//! Power-law exponent estimation for integer-valued samples.
//!
//! Two estimators are provided:
//!
//! * `Mle`: the discrete maximum-likelihood estimate for
//!   `P(k) = k^-γ / ζ(γ, xmin)`, `k >= xmin`, maximizing
//!   `-n ln ζ(γ, xmin) - γ Σ ln k_i` (the log-likelihood is concave in γ).
//! * `CcdfRegression`: least squares on the log-log CCDF of the tail. The
//!   CCDF of a power law decays as `k^-(γ-1)`, so `γ = 1 - slope`.
//!
//! `xmin` is either fixed or chosen by scanning candidate values and
//! keeping the one whose fitted model has the smallest Kolmogorov–Smirnov
//! distance to the empirical tail.

use serde::{Deserialize, Serialize};

use super::degree::DegreeHistogram;
use super::zeta::hurwitz_zeta;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum FitMethod {
    #[default]
    #[serde(rename = "mle")]
    Mle,
    #[serde(rename = "ccdf-regression")]
    CcdfRegression,
}

impl FitMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            FitMethod::Mle => "mle",
            FitMethod::CcdfRegression => "ccdf-regression",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum XminPolicy {
    Fixed(usize),
    #[default]
    KsScan,
}

/// Smallest tail (in samples) considered by the `xmin` scan.
pub const MIN_SCAN_TAIL: usize = 10;

/// Bracket for the likelihood maximization.
const GAMMA_RANGE: (f64, f64) = (1.0 + 1e-6, 30.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub gamma: f64,
    pub xmin: usize,
    #[serde(rename = "ks")]
    pub ks_stat: f64,
    pub method: FitMethod,
    pub n_tail: usize,
}

/// Tail of a histogram: `(value, count)` for `value >= xmin`, ascending.
struct Tail<'a> {
    points: &'a [(usize, usize)],
    n: usize,
}

impl<'a> Tail<'a> {
    fn new(points: &'a [(usize, usize)]) -> Self {
        Tail { points, n: points.iter().map(|&(_, c)| c).sum() }
    }

    fn xmin(&self) -> usize {
        self.points[0].0
    }
}

fn check_tail(tail: &Tail) -> Result<()> {
    match tail.points.len() {
        0 => Err(Error::Fit("empty tail".into())),
        1 => Err(Error::Fit("zero variance".into())),
        _ => Ok(()),
    }
}

fn mle_gamma(tail: &Tail) -> f64 {
    let xmin = tail.xmin() as f64;
    let n = tail.n as f64;
    let sum_log: f64 = tail.points.iter().map(|&(k, c)| c as f64 * (k as f64).ln()).sum();
    let neg_loglik = |g: f64| n * hurwitz_zeta(g, xmin).ln() + g * sum_log;

    // Golden-section search on a unimodal function.
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = GAMMA_RANGE;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (neg_loglik(c), neg_loglik(d));
    while b - a > 1e-10 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = neg_loglik(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = neg_loglik(d);
        }
    }
    (a + b) / 2.0
}

fn regression_gamma(tail: &Tail) -> f64 {
    let n = tail.n as f64;
    let mut remaining = tail.n;
    let mut xs = Vec::with_capacity(tail.points.len());
    let mut ys = Vec::with_capacity(tail.points.len());
    for &(k, c) in tail.points {
        xs.push((k as f64).ln());
        ys.push((remaining as f64 / n).ln());
        remaining -= c;
    }
    let m = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / m;
    let mean_y = ys.iter().sum::<f64>() / m;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(&ys) {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    1.0 - sxy / sxx
}

/// Kolmogorov–Smirnov distance between the empirical tail and the discrete
/// power law with exponent `gamma` starting at the tail's smallest value.
///
/// Both CDFs are step functions on the integers, so the supremum is reached
/// either at an observed value or just before the next one.
fn ks_distance(tail: &Tail, gamma: f64) -> f64 {
    let z = hurwitz_zeta(gamma, tail.xmin() as f64);
    let model_cdf = |x: usize| 1.0 - hurwitz_zeta(gamma, x as f64 + 1.0) / z;
    let n = tail.n as f64;
    let mut seen = 0usize;
    let mut d: f64 = 0.0;
    for (i, &(k, c)) in tail.points.iter().enumerate() {
        let before = seen as f64 / n;
        if i > 0 && k > tail.points[i - 1].0 + 1 {
            d = d.max((before - model_cdf(k - 1)).abs());
        }
        seen += c;
        d = d.max((seen as f64 / n - model_cdf(k)).abs());
    }
    d.min(1.0)
}

fn fit_tail(tail: &Tail, method: FitMethod) -> Result<PowerLawFit> {
    check_tail(tail)?;
    let gamma = match method {
        FitMethod::Mle => mle_gamma(tail),
        FitMethod::CcdfRegression => regression_gamma(tail),
    };
    // The KS statistic is only defined against a normalizable model.
    let ks_stat = if gamma > 1.0 { ks_distance(tail, gamma) } else { 1.0 };
    Ok(PowerLawFit { gamma, xmin: tail.xmin(), ks_stat, method, n_tail: tail.n })
}

/// Fits `P(k) ~ k^-γ` to the positive part of a histogram.
///
/// Zero values are excluded (the logarithm is undefined there) but stay in
/// the histogram itself.
pub fn fit_power_law(h: &DegreeHistogram, method: FitMethod, xmin: XminPolicy) -> Result<PowerLawFit> {
    let points: Vec<(usize, usize)> = h.iter().filter(|&(k, _)| k >= 1).collect();
    match xmin {
        XminPolicy::Fixed(x) => {
            let start = points.partition_point(|&(k, _)| k < x.max(1));
            fit_tail(&Tail::new(&points[start..]), method)
        }
        XminPolicy::KsScan => {
            let mut best: Option<PowerLawFit> = None;
            for start in 0..points.len().saturating_sub(1) {
                let tail = Tail::new(&points[start..]);
                if tail.n < MIN_SCAN_TAIL {
                    break;
                }
                let fit = fit_tail(&tail, method)?;
                if best.is_none_or(|b| fit.ks_stat < b.ks_stat) {
                    best = Some(fit);
                }
            }
            match best {
                Some(fit) => Ok(fit),
                None => fit_tail(&Tail::new(&points), method),
            }
        }
    }
}
