use super::{ols_fit, RegressionFit, StatsError};

/// Recursive regression chain: variable `j + 1` is fitted on variables `0..=j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainModel {
    names: Vec<String>,
    fits: Vec<RegressionFit>,
}

impl ChainModel {
    /// Assembles a chain from existing fits, checking their shape.
    pub fn from_fits(names: Vec<String>, fits: Vec<RegressionFit>) -> Result<Self, StatsError> {
        if names.len() < 2 {
            return Err(StatsError::TooFewComponents(names.len()));
        }
        if fits.len() != names.len() - 1 {
            return Err(StatsError::DimensionMismatch {
                expected: names.len() - 1,
                got: fits.len(),
            });
        }
        for (j, fit) in fits.iter().enumerate() {
            if fit.coefficients.len() != j + 1 {
                return Err(StatsError::DimensionMismatch {
                    expected: j + 1,
                    got: fit.coefficients.len(),
                });
            }
        }
        Ok(Self { names, fits })
    }

    /// Chain with fixed intercepts and coefficients, e.g. published values.
    pub fn from_coefficients(
        names: Vec<String>,
        stages: Vec<(f64, Vec<f64>)>,
    ) -> Result<Self, StatsError> {
        let fits = stages
            .into_iter()
            .map(|(intercept, coefficients)| RegressionFit {
                intercept,
                n_obs: 0,
                residual_sum_squares: 0.0,
                coefficients,
            })
            .collect();
        Self::from_fits(names, fits)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn fits(&self) -> &[RegressionFit] {
        &self.fits
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Coefficient of variable `u` in the fit of variable `v` (`u < v`).
    pub fn coefficient(&self, u: usize, v: usize) -> f64 {
        self.fits[v - 1].coefficients[u]
    }

    /// Human-readable label of the fit producing variable `j + 1`.
    pub fn stage_label(&self, j: usize) -> String {
        stage_label(&self.names, j)
    }
}

fn stage_label(names: &[String], j: usize) -> String {
    format!("{} ~ {}", names[j + 1], names[..=j].join(" + "))
}

/// Fits every stage of the chain over `columns` (x1..xk, y).
pub fn fit_chain(columns: &[(String, Vec<f64>)]) -> Result<ChainModel, StatsError> {
    if columns.len() < 2 {
        return Err(StatsError::TooFewComponents(columns.len()));
    }
    let names: Vec<String> = columns.iter().map(|(n, _)| n.clone()).collect();
    let n = columns[0].1.len();
    if let Some((_, bad)) = columns.iter().find(|(_, c)| c.len() != n) {
        return Err(StatsError::DimensionMismatch {
            expected: n,
            got: bad.len(),
        });
    }
    let mut fits = Vec::with_capacity(columns.len() - 1);
    for j in 0..columns.len() - 1 {
        let regressors: Vec<&[f64]> = columns[..=j].iter().map(|(_, c)| c.as_slice()).collect();
        let fit = ols_fit(&regressors, &columns[j + 1].1).map_err(|e| StatsError::Stage {
            stage: stage_label(&names, j),
            source: Box::new(e),
        })?;
        fits.push(fit);
    }
    Ok(ChainModel { names, fits })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EffectPath {
    pub variables: Vec<String>,
    pub product: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EffectDecomposition {
    pub source: String,
    pub target: String,
    pub direct: f64,
    pub indirect: f64,
    pub total: f64,
    /// Every directed path, the single-edge one first.
    pub paths: Vec<EffectPath>,
}

/// Direct, indirect and total effect of `source` on `target`.
///
/// Each edge u -> v (u earlier in the chain) carries u's coefficient in v's
/// fit. The indirect effect sums the coefficient products of every path with
/// two or more edges.
pub fn path_effects(
    chain: &ChainModel,
    source: &str,
    target: &str,
) -> Result<EffectDecomposition, StatsError> {
    let invalid = || StatsError::InvalidPair(format!("{source} -> {target}"));
    let s = chain.position(source).ok_or_else(invalid)?;
    let t = chain.position(target).ok_or_else(invalid)?;
    if s >= t {
        return Err(invalid());
    }
    let mut found: Vec<(Vec<usize>, f64)> = Vec::new();
    let mut stack = vec![s];
    walk(chain, t, &mut stack, 1.0, &mut found);
    // shortest first, then lexicographic by position
    found.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));

    let direct = chain.coefficient(s, t);
    let indirect: f64 = found
        .iter()
        .filter(|(p, _)| p.len() > 2)
        .fold(0.0, |acc, (_, prod)| acc + prod);
    let paths = found
        .into_iter()
        .map(|(p, product)| EffectPath {
            variables: p.iter().map(|&i| chain.names[i].clone()).collect(),
            product,
        })
        .collect();
    Ok(EffectDecomposition {
        source: source.to_string(),
        target: target.to_string(),
        direct,
        indirect,
        total: direct + indirect,
        paths,
    })
}

fn walk(
    chain: &ChainModel,
    target: usize,
    stack: &mut Vec<usize>,
    product: f64,
    found: &mut Vec<(Vec<usize>, f64)>,
) {
    let u = *stack.last().expect("path starts at source");
    for v in u + 1..=target {
        let p = product * chain.coefficient(u, v);
        stack.push(v);
        if v == target {
            found.push((stack.clone(), p));
        } else {
            walk(chain, target, stack, p, found);
        }
        stack.pop();
    }
}
