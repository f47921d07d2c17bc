//! Regression chains, path effects, runs tests and reliability.

mod alpha;
mod chain;
mod ols;
mod runs;

use thiserror::Error;

pub use alpha::{classify_alpha, cronbach_alpha, AlphaBand, AlphaResult};
pub use chain::{fit_chain, path_effects, ChainModel, EffectDecomposition, EffectPath};
pub use ols::{ols_fit, RegressionFit};
pub use runs::{count_runs, dichotomize_median, runs_test, runs_test_counts, RunsTestResult};

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("input is empty")]
    EmptyInput,
    #[error("length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{n} observations cannot fit {params} parameters")]
    TooFewObservations { n: usize, params: usize },
    #[error("design matrix is rank deficient")]
    SingularDesign,
    #[error("fitting {stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<StatsError>,
    },
    #[error("invalid variable pair {0}")]
    InvalidPair(String),
    #[error("sequence needs both categories")]
    DegenerateSequence,
    #[error("total score has zero variance")]
    DegenerateTotal,
    #[error("need at least two components, got {0}")]
    TooFewComponents(usize),
    #[error("significance level {0} outside (0, 1)")]
    InvalidLevel(f64),
    #[error("non-finite value in input")]
    NonFinite,
}

/// Population variance (divisor n).
pub fn variance_pop(values: &[f64]) -> Result<f64, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    Ok(values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn variance_examples() {
        assert_eq!(variance_pop(&[5.0, 5.0, 5.0]), Ok(0.0));
        assert_eq!(variance_pop(&[0.0, 2.0]), Ok(1.0));
        assert_eq!(variance_pop(&[]), Err(StatsError::EmptyInput));
    }

    proptest! {
        #[test]
        fn variance_shift_invariant(v in prop::collection::vec(-1e3f64..1e3, 1..30), c in -1e3f64..1e3) {
            let a = variance_pop(&v).unwrap();
            let shifted: Vec<f64> = v.iter().map(|x| x + c).collect();
            let b = variance_pop(&shifted).unwrap();
            prop_assert!(a >= 0.0);
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a));
        }
    }
}
