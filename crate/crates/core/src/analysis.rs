//! Empirical checks of the distributional behaviour of ticket numbers.
//!
//! Trial `t` always uses the seed `t.to_string()`, so every report is a pure
//! function of its parameters. Trials run in parallel; per-trial values are
//! collected in trial order and reduced sequentially, so reports are
//! bit-identical regardless of thread count.

use std::collections::BTreeMap;
use std::f64::consts::LN_10;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::sampler::{Population, Sampler};
use crate::ticket::{
    first_ticket_number, next_ticket_number, next_ticket_number_counted, TicketNumber,
};

/// Expected replacement attempts for a uniformly distributed first ticket:
/// `ln(10) / 0.9`, confirmed by an independent Monte-Carlo run (2.555 over
/// 3e5 trials).
pub const EXPECTED_G_ATTEMPTS: f64 = 2.558;

/// Published figure for the reference implementation; reported, not enforced.
pub const PUBLISHED_G_ATTEMPTS: f64 = 3.143;

/// Significant digits of `1 - x` used when taking its logarithm.
pub const LOG_DIGITS: usize = 30;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatReport {
    pub name: String,
    pub sample_count: u64,
    pub estimate: f64,
    pub reference: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, f64>,
}

impl StatReport {
    pub fn new(
        name: impl Into<String>,
        sample_count: u64,
        estimate: f64,
        reference: f64,
        tolerance: f64,
    ) -> Self {
        StatReport {
            name: name.into(),
            sample_count,
            estimate,
            reference,
            tolerance,
            pass: (estimate - reference).abs() <= tolerance,
            details: BTreeMap::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_owned(), value);
        self
    }

    pub fn detail(&self, key: &str) -> Option<f64> {
        self.details.get(key).copied()
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn trial_ticket(label: &str, trial: u64) -> TicketNumber {
    first_ticket_number(label, &trial.to_string())
        .expect("fixed labels and decimal seeds are valid")
}

/// `ln(1 - x)`, from the exact decimal complement of `x` truncated to
/// [`LOG_DIGITS`] significant digits.
pub fn ln_complement(x: &TicketNumber) -> f64 {
    let d = x.digits();
    // 1 - 0.d1..dm = 0.c1..cm: nines-complement up to the last nonzero
    // digit, tens-complement on it, zeros after.
    let last = d
        .iter()
        .rposition(|&v| v != 0)
        .expect("ticket has a nonzero digit");
    let complement = d[..last]
        .iter()
        .map(|&v| 9 - v)
        .chain(std::iter::once(10 - d[last]));
    let mut leading_zeros = 0usize;
    let mut significant = String::with_capacity(LOG_DIGITS + 2);
    significant.push_str("0.");
    for c in complement {
        if significant.len() == 2 && c == 0 {
            leading_zeros += 1;
            continue;
        }
        significant.push(char::from(b'0' + c));
        if significant.len() == LOG_DIGITS + 2 {
            break;
        }
    }
    let mantissa: f64 = significant.parse().expect("decimal literal");
    mantissa.ln() - leading_zeros as f64 * LN_10
}

fn mean_and_variance(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

/// Mean of `ln(1 - x_k)` over `trials` trajectories, where `x_k` is the
/// k-th ticket of one item. Reference `-k`, tolerance `4 * sqrt(k / trials)`.
pub fn log_gap_mean(k: u32, trials: u64) -> Result<StatReport> {
    check((1..=200).contains(&k), || {
        format!("k must be in 1..=200, got {k}")
    })?;
    check(trials >= 100, || {
        format!("trials must be at least 100, got {trials}")
    })?;

    let logs: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut x = trial_ticket("log-gap", t);
            for _ in 1..k {
                x = next_ticket_number(&x);
            }
            ln_complement(&x)
        })
        .collect();
    let (mean, variance) = mean_and_variance(&logs);
    let k = f64::from(k);
    Ok(StatReport::new(
        "log_gap_mean",
        trials,
        mean,
        -k,
        4.0 * (k / trials as f64).sqrt(),
    )
    .with_detail("k", k)
    .with_detail("variance", variance)
    .with_detail("reference_variance", k))
}

/// Attempt counts of the replacement loop applied once to `trials` first
/// tickets. Estimate is the mean; tolerance is 0.05 at 1e5 trials and scales
/// with the standard error below that.
pub fn g_attempt_stats(trials: u64) -> Result<StatReport> {
    check(trials >= 1000, || {
        format!("trials must be at least 1000, got {trials}")
    })?;

    let attempts: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|t| next_ticket_number_counted(&trial_ticket("g-attempts", t)).1)
        .collect();
    let total: u64 = attempts.iter().sum();
    let max = attempts.iter().copied().max().unwrap_or(0);
    let min = attempts.iter().copied().min().unwrap_or(0);
    let mean = total as f64 / trials as f64;
    let tolerance = 0.05 * (100_000.0 / trials as f64).sqrt().max(1.0);
    Ok(StatReport::new(
        "g_attempts_mean",
        trials,
        mean,
        EXPECTED_G_ATTEMPTS,
        tolerance,
    )
    .with_detail("max_attempts", max as f64)
    .with_detail("min_attempts", min as f64)
    .with_detail("published_mean", PUBLISHED_G_ATTEMPTS))
}

/// Mean leading-nine-run length of the k-th ticket, for `k = 1..=max_k`.
pub fn nine_run_growth(max_k: u32, trials: u64) -> Result<Vec<(u32, f64)>> {
    check((1..=100).contains(&max_k), || {
        format!("max_k must be in 1..=100, got {max_k}")
    })?;
    check(trials >= 1, || "trials must be positive".to_owned())?;

    let runs: Vec<Vec<usize>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut x = trial_ticket("nine-run", t);
            let mut out = Vec::with_capacity(max_k as usize);
            out.push(x.nine_run());
            for _ in 1..max_k {
                x = next_ticket_number(&x);
                out.push(x.nine_run());
            }
            out
        })
        .collect();
    let mut sums = vec![0u64; max_k as usize];
    for trajectory in &runs {
        for (s, &r) in sums.iter_mut().zip(trajectory) {
            *s += r as u64;
        }
    }
    Ok(sums
        .into_iter()
        .enumerate()
        .map(|(i, s)| (i as u32 + 1, s as f64 / trials as f64))
        .collect())
}

/// Ordinary least squares `y = intercept + slope * x`; returns
/// `(slope, intercept, r_squared)`.
pub fn linear_fit(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    (slope, intercept, 1.0 - ss_res / syy)
}

/// Slope (reference `1 / ln 10`, ±10%) and R² (reference 1, tolerance 0.01)
/// of the nine-run growth curve.
pub fn nine_run_reports(max_k: u32, trials: u64) -> Result<Vec<StatReport>> {
    check(max_k >= 2, || {
        "max_k must be at least 2 to fit a line".to_owned()
    })?;
    let curve = nine_run_growth(max_k, trials)?;
    let points: Vec<(f64, f64)> = curve.iter().map(|&(k, m)| (f64::from(k), m)).collect();
    let (slope, intercept, r2) = linear_fit(&points);
    let expected = 1.0 / LN_10;
    let mut slope_report =
        StatReport::new("nine_run_slope", trials, slope, expected, 0.1 * expected)
            .with_detail("intercept", intercept)
            .with_detail("max_k", f64::from(max_k));
    for (k, m) in &curve {
        slope_report.details.insert(format!("mean_run_k{k:03}"), *m);
    }
    let r2_report = StatReport::new("nine_run_r_squared", trials, r2, 1.0, 0.01);
    Ok(vec![slope_report, r2_report])
}

/// Chi-square statistic of the first-drawn item over `trials` seeds against
/// the uniform distribution on `n` items.
///
/// Reference is the `n - 1` degrees of freedom; the tolerance reaches up to
/// the 0.999 quantile.
pub fn chi_square_first_draw(n: usize, trials: u64) -> Result<StatReport> {
    check(n >= 2, || format!("n must be at least 2, got {n}"))?;
    check(trials >= 100 * n as u64, || {
        format!(
            "trials must be at least 100 * n = {}, got {trials}",
            100 * n
        )
    })?;

    let population = Population::new((1..=n).map(|i| i.to_string()))?;
    let firsts: Vec<usize> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut sampler = Sampler::new(&population, &t.to_string(), false).expect("valid seed");
            let id = sampler.draw().expect("nonempty population").id;
            id.parse::<usize>().expect("numeric ids") - 1
        })
        .collect();
    let mut counts = vec![0u64; n];
    for i in firsts {
        counts[i] += 1;
    }
    let expected = trials as f64 / n as f64;
    let statistic: f64 = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    let dof = (n - 1) as f64;
    let quantile = ChiSquared::new(dof)
        .expect("positive degrees of freedom")
        .inverse_cdf(0.999);
    Ok(StatReport::new(
        "chi_square_first_draw",
        trials,
        statistic,
        dof,
        quantile - dof,
    )
    .with_detail("n", n as f64)
    .with_detail("quantile_999", quantile))
}
