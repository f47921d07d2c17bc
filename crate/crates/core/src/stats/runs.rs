use statrs::distribution::{ContinuousCDF, Normal};

use super::StatsError;

/// Wald-Wolfowitz runs test over a two-category sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct RunsTestResult {
    pub n1: usize,
    pub n2: usize,
    pub r: usize,
    pub mu_r: f64,
    pub sigma_r: f64,
    pub z: f64,
    pub level: f64,
    pub critical: f64,
    pub reject: bool,
}

impl RunsTestResult {
    pub fn decision(&self) -> &'static str {
        if self.reject {
            "reject"
        } else {
            "accept"
        }
    }
}

/// Number of maximal blocks of equal labels.
pub fn count_runs(labels: &[bool]) -> usize {
    if labels.is_empty() {
        return 0;
    }
    1 + labels.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Runs test on `labels`; `true` is the first category (n1).
pub fn runs_test(labels: &[bool], level: f64) -> Result<RunsTestResult, StatsError> {
    let n1 = labels.iter().filter(|&&l| l).count();
    runs_test_counts(n1, labels.len() - n1, count_runs(labels), level)
}

/// Runs test from summary counts.
///
/// The critical value is the two-sided normal quantile at `level`, rounded
/// to two decimals as printed in z tables (1.96 at 0.05).
pub fn runs_test_counts(
    n1: usize,
    n2: usize,
    r: usize,
    level: f64,
) -> Result<RunsTestResult, StatsError> {
    if !(level > 0.0 && level < 1.0) {
        return Err(StatsError::InvalidLevel(level));
    }
    if n1 == 0 || n2 == 0 || r == 0 || r > n1 + n2 {
        return Err(StatsError::DegenerateSequence);
    }
    let (a, b) = (n1 as f64, n2 as f64);
    let n = a + b;
    let mu_r = 2.0 * a * b / n + 1.0;
    let var = 2.0 * a * b * (2.0 * a * b - a - b) / (n * n * (n - 1.0));
    if var <= 0.0 {
        return Err(StatsError::DegenerateSequence);
    }
    let sigma_r = var.sqrt();
    let z = (r as f64 - mu_r) / sigma_r;
    let critical = critical_value(level);
    Ok(RunsTestResult {
        n1,
        n2,
        r,
        mu_r,
        sigma_r,
        z,
        level,
        critical,
        reject: z.abs() > critical,
    })
}

fn critical_value(level: f64) -> f64 {
    let q = Normal::new(0.0, 1.0)
        .expect("standard normal")
        .inverse_cdf(1.0 - level / 2.0);
    (q * 100.0).round() / 100.0
}

/// Labels `true` for values at or above the median, `false` below.
pub fn dichotomize_median(values: &[f64]) -> Result<Vec<bool>, StatsError> {
    if values.len() < 2 {
        return Err(StatsError::TooFewObservations {
            n: values.len(),
            params: 2,
        });
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    };
    Ok(values.iter().map(|&v| v >= median).collect())
}
