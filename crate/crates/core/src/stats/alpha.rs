use super::{variance_pop, StatsError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaBand {
    VeryGood,
    Good,
    Acceptable,
    Poor,
    NotAccepted,
}

impl AlphaBand {
    pub fn label(self) -> &'static str {
        match self {
            AlphaBand::VeryGood => "VERY_GOOD",
            AlphaBand::Good => "GOOD",
            AlphaBand::Acceptable => "ACCEPTABLE",
            AlphaBand::Poor => "POOR",
            AlphaBand::NotAccepted => "NOT_ACCEPTED",
        }
    }
}

/// Boundary values go to the higher band, except 0.9 which is GOOD.
pub fn classify_alpha(alpha: f64) -> AlphaBand {
    if alpha > 0.9 {
        AlphaBand::VeryGood
    } else if alpha >= 0.7 {
        AlphaBand::Good
    } else if alpha >= 0.6 {
        AlphaBand::Acceptable
    } else if alpha >= 0.5 {
        AlphaBand::Poor
    } else {
        AlphaBand::NotAccepted
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaResult {
    pub k: usize,
    pub sum_component_variances: f64,
    pub total_variance: f64,
    pub alpha: f64,
    pub band: AlphaBand,
}

/// Cronbach's alpha over `components`, using population variances.
pub fn cronbach_alpha(components: &[&[f64]]) -> Result<AlphaResult, StatsError> {
    let k = components.len();
    if k < 2 {
        return Err(StatsError::TooFewComponents(k));
    }
    let n = components[0].len();
    if let Some(bad) = components.iter().find(|c| c.len() != n) {
        return Err(StatsError::DimensionMismatch {
            expected: n,
            got: bad.len(),
        });
    }
    if n < 2 {
        return Err(StatsError::TooFewObservations { n, params: 2 });
    }
    let total: Vec<f64> = (0..n).map(|i| components.iter().map(|c| c[i]).sum()).collect();
    let total_variance = variance_pop(&total)?;
    if total_variance == 0.0 {
        return Err(StatsError::DegenerateTotal);
    }
    let mut sum_component_variances = 0.0;
    for c in components {
        sum_component_variances += variance_pop(c)?;
    }
    let kf = k as f64;
    let alpha = kf / (kf - 1.0) * (1.0 - sum_component_variances / total_variance);
    Ok(AlphaResult {
        k,
        sum_component_variances,
        total_variance,
        alpha,
        band: classify_alpha(alpha),
    })
}
