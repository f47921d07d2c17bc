use super::StatsError;

#[derive(Clone, Debug, PartialEq)]
pub struct RegressionFit {
    pub intercept: f64,
    pub coefficients: Vec<f64>,
    pub n_obs: usize,
    pub residual_sum_squares: f64,
}

impl RegressionFit {
    pub fn predict(&self, x: &[f64]) -> f64 {
        self.intercept
            + self
                .coefficients
                .iter()
                .zip(x)
                .map(|(b, v)| b * v)
                .sum::<f64>()
    }

    /// Response minus fitted values, row by row.
    pub fn residuals(&self, regressors: &[&[f64]], response: &[f64]) -> Vec<f64> {
        (0..response.len())
            .map(|i| {
                let row: Vec<f64> = regressors.iter().map(|c| c[i]).collect();
                response[i] - self.predict(&row)
            })
            .collect()
    }
}

/// Least squares fit of `response` on an intercept plus `regressors` (columns).
///
/// Solved by Householder QR on the design matrix; a rank-deficient design is
/// an error rather than a pseudo-inverse solution.
pub fn ols_fit(regressors: &[&[f64]], response: &[f64]) -> Result<RegressionFit, StatsError> {
    let n = response.len();
    let p = regressors.len() + 1;
    if n == 0 {
        return Err(StatsError::EmptyInput);
    }
    for col in regressors {
        if col.len() != n {
            return Err(StatsError::DimensionMismatch {
                expected: n,
                got: col.len(),
            });
        }
    }
    if n < p {
        return Err(StatsError::TooFewObservations { n, params: p });
    }
    if response
        .iter()
        .chain(regressors.iter().flat_map(|c| c.iter()))
        .any(|v| !v.is_finite())
    {
        return Err(StatsError::NonFinite);
    }

    // column-major design with a leading column of ones
    let mut a: Vec<Vec<f64>> = Vec::with_capacity(p);
    a.push(vec![1.0; n]);
    a.extend(regressors.iter().map(|c| c.to_vec()));
    let col_norms: Vec<f64> = a.iter().map(|c| norm(c)).collect();
    let mut b = response.to_vec();

    for k in 0..p {
        let alpha = norm(&a[k][k..]);
        // |R_kk| relative to the original column norm
        if alpha <= 1e-10 * col_norms[k] {
            return Err(StatsError::SingularDesign);
        }
        let alpha = if a[k][k] > 0.0 { -alpha } else { alpha };
        let mut v: Vec<f64> = a[k][k..].to_vec();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 > 0.0 {
            for col in a.iter_mut().skip(k) {
                reflect(&v, vnorm2, &mut col[k..]);
            }
            reflect(&v, vnorm2, &mut b[k..]);
        }
    }

    // back substitution on R beta = Q^T b
    let mut beta = vec![0.0; p];
    for i in (0..p).rev() {
        let s: f64 = (i + 1..p).map(|j| a[j][i] * beta[j]).sum();
        beta[i] = (b[i] - s) / a[i][i];
    }

    let mut fit = RegressionFit {
        intercept: beta[0],
        coefficients: beta[1..].to_vec(),
        n_obs: n,
        residual_sum_squares: 0.0,
    };
    fit.residual_sum_squares = fit
        .residuals(regressors, response)
        .iter()
        .map(|r| r * r)
        .sum();
    Ok(fit)
}

fn norm(v: &[f64]) -> f64 {
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    scale * v.iter().map(|x| (x / scale).powi(2)).sum::<f64>().sqrt()
}

fn reflect(v: &[f64], vnorm2: f64, x: &mut [f64]) {
    let dot: f64 = v.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
    let f = 2.0 * dot / vnorm2;
    for (xi, vi) in x.iter_mut().zip(v) {
        *xi -= f * vi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-10 * (1.0 + b.abs())
    }

    #[test]
    fn exact_line() {
        let fit = ols_fit(&[&[1.0, 2.0, 3.0]], &[2.0, 4.0, 6.0]).unwrap();
        assert!(close(fit.intercept, 0.0));
        assert!(close(fit.coefficients[0], 2.0));
        assert!(fit.residual_sum_squares < 1e-20);
        assert_eq!(fit.n_obs, 3);
    }

    #[test]
    fn constant_response() {
        let x1 = [1.0, 4.0, 2.0, 8.0];
        let x2 = [3.0, 1.0, 0.0, 5.0];
        let fit = ols_fit(&[&x1, &x2], &[7.0; 4]).unwrap();
        assert!(close(fit.intercept, 7.0));
        assert!(fit.coefficients.iter().all(|b| b.abs() < 1e-10));
    }

    #[test]
    fn intercept_only() {
        let fit = ols_fit(&[], &[1.0, 2.0, 6.0]).unwrap();
        assert!(close(fit.intercept, 3.0));
        assert!(close(fit.residual_sum_squares, 14.0));
    }

    #[test]
    fn rejects_bad_designs() {
        assert_eq!(
            ols_fit(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]], &[1.0, 0.0, 2.0]),
            Err(StatsError::SingularDesign)
        );
        assert_eq!(
            ols_fit(&[&[5.0, 5.0, 5.0]], &[1.0, 2.0, 3.0]),
            Err(StatsError::SingularDesign)
        );
        assert_eq!(
            ols_fit(&[&[1.0, 2.0]], &[1.0, 2.0, 3.0]),
            Err(StatsError::DimensionMismatch { expected: 3, got: 2 })
        );
        assert_eq!(
            ols_fit(&[&[1.0]], &[1.0]),
            Err(StatsError::TooFewObservations { n: 1, params: 2 })
        );
        assert_eq!(ols_fit(&[], &[]), Err(StatsError::EmptyInput));
        assert_eq!(
            ols_fit(&[&[1.0, f64::NAN]], &[1.0, 2.0]),
            Err(StatsError::NonFinite)
        );
    }

    proptest! {
        #[test]
        fn residuals_orthogonal(
            rows in prop::collection::vec(prop::collection::vec(-50.0f64..50.0, 3), 6..25),
        ) {
            let y: Vec<f64> = rows.iter().map(|r| r[0]).collect();
            let x1: Vec<f64> = rows.iter().map(|r| r[1]).collect();
            let x2: Vec<f64> = rows.iter().map(|r| r[2]).collect();
            let cols: [&[f64]; 2] = [&x1, &x2];
            if let Ok(fit) = ols_fit(&cols, &y) {
                let r = fit.residuals(&cols, &y);
                let ynorm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
                let tol = 1e-8 * ynorm;
                prop_assert!(r.iter().sum::<f64>().abs() <= tol);
                for c in cols {
                    let dot: f64 = c.iter().zip(&r).map(|(a, b)| a * b).sum();
                    prop_assert!(dot.abs() <= tol);
                }
                prop_assert!(fit.residual_sum_squares >= 0.0);
            }
        }
    }
}
