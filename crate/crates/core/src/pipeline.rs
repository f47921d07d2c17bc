//! End-to-end run: seeds, networks, timelines, regression chain, effects,
//! runs tests and alpha.

use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::corpus::{Category, Corpus, SeedList};
use crate::index::{HitMode, OccurrenceIndex};
use crate::network::{classify_first_paper, extract_network, DensityDiagnostics, FirstPaperShape};
use crate::stats::{
    cronbach_alpha, dichotomize_median, fit_chain, path_effects, runs_test, AlphaResult,
    ChainModel, EffectDecomposition, RunsTestResult,
};
use crate::timeline::{
    aggregate_series, growth_series, AccretionSeries, AggregateSeries, GrowthSeries, COLUMNS,
};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<dyn std::error::Error + Send + Sync>,
    },
}

impl PipelineError {
    fn stage<E: std::error::Error + Send + Sync + 'static>(stage: &'static str) -> impl FnOnce(E) -> Self {
        move |e| PipelineError::Stage {
            stage,
            source: Box::new(e),
        }
    }

    /// 2 for configuration problems, 1 for failures while computing.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Config(_) => 2,
            PipelineError::Stage { .. } => 1,
        }
    }
}

/// Which form of the aggregate series feeds the regression chain.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Cumulative,
    Accretion,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Cumulative => "cumulative",
            Mode::Accretion => "accretion",
        }
    }
}

impl FromStr for Mode {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cumulative" | "1" => Ok(Mode::Cumulative),
            "accretion" | "2" => Ok(Mode::Accretion),
            _ => Err(PipelineError::Config(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub corpus_path: PathBuf,
    pub seeds_path: PathBuf,
    /// Defaults to the corpus's last year.
    pub horizon: Option<i32>,
    pub mode: Mode,
    pub chain: Vec<String>,
    pub significance: f64,
    pub output_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(corpus_path: impl Into<PathBuf>, seeds_path: impl Into<PathBuf>) -> Self {
        Self {
            corpus_path: corpus_path.into(),
            seeds_path: seeds_path.into(),
            horizon: None,
            mode: Mode::Cumulative,
            chain: COLUMNS.iter().map(|c| c.to_string()).collect(),
            significance: 0.05,
            output_dir: None,
        }
    }

    pub fn validate(&self) -> Result<(), PipelineError> {
        if !(self.significance > 0.0 && self.significance < 1.0) {
            return Err(PipelineError::Config(format!(
                "significance {} outside (0, 1)",
                self.significance
            )));
        }
        if self.chain.len() < 2 {
            return Err(PipelineError::Config("chain needs at least two variables".into()));
        }
        for (i, name) in self.chain.iter().enumerate() {
            if !COLUMNS.contains(&name.as_str()) {
                return Err(PipelineError::Config(format!(
                    "unknown chain variable {name:?} (expected one of {})",
                    COLUMNS.join(", ")
                )));
            }
            if self.chain[..i].contains(name) {
                return Err(PipelineError::Config(format!("chain repeats {name:?}")));
            }
        }
        Ok(())
    }
}

/// Per-seed information-source factors: n(p), "hc" and hc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorRow {
    pub seed: String,
    pub category: Category,
    pub papers: usize,
    pub phrase_hits: usize,
    pub bag_hits: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeedDiagnostics {
    pub seed: String,
    pub first_paper: Option<FirstPaperShape>,
    pub seed_degree: usize,
    pub density: DensityDiagnostics,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedRuns {
    pub factor: &'static str,
    pub result: RunsTestResult,
}

#[derive(Clone, Debug)]
pub struct ReportBundle {
    pub horizon: i32,
    pub mode: Mode,
    pub significance: f64,
    pub growth: Vec<GrowthSeries>,
    pub aggregate: AggregateSeries,
    pub accretion: AccretionSeries,
    pub chain: Option<ChainModel>,
    pub effects: Option<EffectDecomposition>,
    pub factors: Vec<FactorRow>,
    pub runs: Vec<NamedRuns>,
    pub alpha: Option<AlphaResult>,
    pub diagnostics: Vec<SeedDiagnostics>,
}

pub fn load_corpus(path: &Path) -> Result<Corpus, PipelineError> {
    let file = File::open(path)
        .map_err(|e| PipelineError::Config(format!("cannot open corpus {}: {e}", path.display())))?;
    Corpus::parse(BufReader::new(file)).map_err(PipelineError::stage("ingest"))
}

pub fn load_seeds(path: &Path) -> Result<SeedList, PipelineError> {
    let file = File::open(path)
        .map_err(|e| PipelineError::Config(format!("cannot open seeds {}: {e}", path.display())))?;
    let seeds = SeedList::parse(BufReader::new(file))
        .map_err(|e| PipelineError::Config(format!("seeds {}: {e}", path.display())))?;
    if seeds.is_empty() {
        return Err(PipelineError::Config(format!(
            "seeds file {} has no entries",
            path.display()
        )));
    }
    Ok(seeds)
}

/// Loads inputs, computes every section and, when `output_dir` is set,
/// writes the report there.
pub fn run_pipeline(config: &RunConfig) -> Result<ReportBundle, PipelineError> {
    config.validate()?;
    let corpus = load_corpus(&config.corpus_path)?;
    let seeds = load_seeds(&config.seeds_path)?;
    let bundle = analyze(&corpus, &seeds, config)?;
    if let Some(dir) = &config.output_dir {
        crate::report::emit_report(&bundle, dir).map_err(PipelineError::stage("emit"))?;
    }
    Ok(bundle)
}

/// The computational part of [`run_pipeline`], on in-memory inputs.
pub fn analyze(
    corpus: &Corpus,
    seeds: &SeedList,
    config: &RunConfig,
) -> Result<ReportBundle, PipelineError> {
    config.validate()?;
    if seeds.is_empty() {
        return Err(PipelineError::Config("seed list is empty".into()));
    }
    let horizon = resolve_horizon(corpus, config.horizon)?;

    // per seed: papers, network, timeline
    let mut growth = Vec::with_capacity(seeds.len());
    let mut diagnostics = Vec::with_capacity(seeds.len());
    for seed in seeds.iter() {
        growth.push(growth_series(corpus, &seed.name, horizon));
        let net = extract_network(corpus, &seed.name, horizon);
        diagnostics.push(SeedDiagnostics {
            seed: seed.name.raw().to_string(),
            first_paper: classify_first_paper(corpus, &seed.name).ok(),
            seed_degree: net.degree(seed.name.key()).unwrap_or(0),
            density: net.density_diagnostics(),
        });
    }

    let aggregate =
        aggregate_series(corpus, seeds, horizon).map_err(PipelineError::stage("aggregate"))?;
    let accretion = aggregate.accretion();

    let (chain, effects) = chain_stage(&aggregate, &accretion, config)?;
    let (factors, runs, alpha) = factor_stage(corpus, seeds, horizon, config.significance)?;

    Ok(ReportBundle {
        horizon,
        mode: config.mode,
        significance: config.significance,
        growth,
        aggregate,
        accretion,
        chain: Some(chain),
        effects: Some(effects),
        factors,
        runs,
        alpha: Some(alpha),
        diagnostics,
    })
}

/// Resolves the horizon: the configured year, else the corpus's last year.
pub fn resolve_horizon(corpus: &Corpus, horizon: Option<i32>) -> Result<i32, PipelineError> {
    horizon
        .or(corpus.year_range().map(|(_, hi)| hi))
        .ok_or_else(|| PipelineError::Config("empty corpus and no horizon".into()))
}

/// Fits the configured chain over the aggregate (or accretion) columns and
/// decomposes the effect of the first variable on the last.
pub fn chain_stage(
    aggregate: &AggregateSeries,
    accretion: &AccretionSeries,
    config: &RunConfig,
) -> Result<(ChainModel, EffectDecomposition), PipelineError> {
    config.validate()?;
    let columns: Vec<(String, Vec<f64>)> = config
        .chain
        .iter()
        .map(|name| {
            let col = match config.mode {
                Mode::Cumulative => aggregate.column(name),
                Mode::Accretion => accretion.column(name),
            }
            .expect("chain validated against known columns");
            (name.clone(), col.into_iter().map(|v| v as f64).collect())
        })
        .collect();
    let chain = fit_chain(&columns).map_err(PipelineError::stage("regress"))?;
    let first = &config.chain[0];
    let last = &config.chain[config.chain.len() - 1];
    let effects = path_effects(&chain, first, last).map_err(PipelineError::stage("effects"))?;
    Ok((chain, effects))
}

/// Per-seed factors, runs tests on (al, n(p), "hc", hc) and alpha over the
/// three factor columns.
pub fn factor_stage(
    corpus: &Corpus,
    seeds: &SeedList,
    horizon: i32,
    level: f64,
) -> Result<(Vec<FactorRow>, Vec<NamedRuns>, AlphaResult), PipelineError> {
    let index = OccurrenceIndex::build(corpus);
    let factors: Vec<FactorRow> = seeds
        .iter()
        .map(|s| FactorRow {
            seed: s.name.raw().to_string(),
            category: s.category,
            papers: corpus.papers_of(s.name.key(), Some(horizon)).len(),
            phrase_hits: index.hit_count(&s.name, HitMode::Phrase),
            bag_hits: index.hit_count(&s.name, HitMode::Bag),
        })
        .collect();

    let mut runs = Vec::with_capacity(4);
    let al: Vec<bool> = factors.iter().map(|f| f.category == Category::Professor).collect();
    runs.push(NamedRuns {
        factor: "al",
        result: runs_test(&al, level).map_err(PipelineError::stage("runs test (al)"))?,
    });
    let columns: [(&'static str, &'static str, Vec<f64>); 3] = [
        ("n(p)", "runs test (n(p))", factors.iter().map(|f| f.papers as f64).collect()),
        ("\"hc\"", "runs test (\"hc\")", factors.iter().map(|f| f.phrase_hits as f64).collect()),
        ("hc", "runs test (hc)", factors.iter().map(|f| f.bag_hits as f64).collect()),
    ];
    for (factor, stage, values) in &columns {
        let labels = dichotomize_median(values).map_err(PipelineError::stage(stage))?;
        let result = runs_test(&labels, level).map_err(PipelineError::stage(stage))?;
        runs.push(NamedRuns { factor, result });
    }

    let parts: Vec<&[f64]> = columns.iter().map(|(_, _, v)| v.as_slice()).collect();
    let alpha = cronbach_alpha(&parts).map_err(PipelineError::stage("alpha"))?;
    Ok((factors, runs, alpha))
}
