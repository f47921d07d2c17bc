use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use snm::corpus::{ActorName, Corpus, SeedList};
use snm::export::{export_graph, GraphFormat};
use snm::index::{HitMode, OccurrenceIndex};
use snm::network::extract_network;
use snm::pipeline::{
    chain_stage, factor_stage, load_corpus, load_seeds, resolve_horizon, run_pipeline, Mode,
    NamedRuns, PipelineError, RunConfig,
};
use snm::stats::{AlphaResult, ChainModel, EffectDecomposition};
use snm::report;
use snm::timeline::{aggregate_series, growth_series};

#[derive(Parser)]
#[command(name = "snm", version, about = "Co-authorship network growth and resource statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a corpus and print a summary.
    Ingest {
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Growth table for one seed, or the aggregate table over a seed list.
    Growth {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "seeds")]
        seed: Option<String>,
        #[arg(long, required_unless_present = "seed")]
        seeds: Option<PathBuf>,
    },
    /// Regression chain coefficients.
    Regress(Analysis),
    /// Direct, indirect and total effects from the first to the last chain variable.
    Effects(Analysis),
    /// Runs tests on academic level and the median-split factors.
    Runstest(Analysis),
    /// Cronbach's alpha over n(p), "hc" and hc.
    Alpha(Analysis),
    /// Hit counts for a name, or co-hits for two names.
    Hits {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        name: String,
        #[arg(long)]
        with: Option<String>,
    },
    /// Export one seed's network.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        seed: String,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Full pipeline; writes every report file under --out.
    All(Analysis),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    horizon: Option<i32>,
    #[arg(long, default_value = "cumulative")]
    mode: String,
    /// Write to this path instead of stdout (a directory for `all`).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Analysis {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    seeds: PathBuf,
    #[arg(long, default_value = "seeds,papers,vertices,edges", value_delimiter = ',')]
    chain: Vec<String>,
    #[arg(long = "alpha-level", default_value_t = 0.05)]
    alpha_level: f64,
}

impl Analysis {
    fn config(&self) -> Result<RunConfig, PipelineError> {
        let mut c = RunConfig::new(&self.common.corpus, &self.seeds);
        c.horizon = self.common.horizon;
        c.mode = self.common.mode.parse()?;
        c.chain = self.chain.iter().map(|s| s.trim().to_string()).collect();
        c.significance = self.alpha_level;
        Ok(c)
    }

    fn load(&self) -> Result<(RunConfig, Corpus, SeedList, i32), PipelineError> {
        let config = self.config()?;
        config.validate()?;
        let corpus = load_corpus(&config.corpus_path)?;
        let seeds = load_seeds(&config.seeds_path)?;
        let horizon = resolve_horizon(&corpus, config.horizon)?;
        Ok((config, corpus, seeds, horizon))
    }

    fn chain(&self) -> Result<(Mode, ChainModel, EffectDecomposition), PipelineError> {
        let (config, corpus, seeds, horizon) = self.load()?;
        let agg = aggregate_series(&corpus, &seeds, horizon)
            .map_err(|e| PipelineError::Config(e.to_string()))?;
        let (chain, effects) = chain_stage(&agg, &agg.accretion(), &config)?;
        Ok((config.mode, chain, effects))
    }

    fn factors(&self) -> Result<(Vec<NamedRuns>, AlphaResult), PipelineError> {
        let (config, corpus, seeds, horizon) = self.load()?;
        let (_, runs, alpha) = factor_stage(&corpus, &seeds, horizon, config.significance)?;
        Ok((runs, alpha))
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e.exit_code() {
            2 => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Compute(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn actor(name: &str) -> Result<ActorName, Failure> {
    ActorName::new(name).map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ingest { corpus } => {
            let c = load_corpus(&corpus)?;
            let years = c
                .year_range()
                .map_or("none".to_string(), |(a, b)| format!("{a}-{b}"));
            println!("records: {}", c.len());
            println!("years: {years}");
            println!("actors: {}", c.registry().len());
        }
        Command::Growth { common, seed, seeds } => {
            let corpus = load_corpus(&common.corpus)?;
            let horizon = resolve_horizon(&corpus, common.horizon)?;
            let mut buf = Vec::new();
            if let Some(name) = seed {
                growth_series(&corpus, &actor(&name)?, horizon)
                    .write_csv(&mut buf)
                    .map_err(|e| Failure::Compute(e.to_string()))?;
            } else {
                let list = load_seeds(seeds.as_deref().expect("clap requires seeds"))?;
                let agg = aggregate_series(&corpus, &list, horizon)
                    .map_err(|e| Failure::Compute(format!("aggregate: {e}")))?;
                let written = match common.mode.parse::<Mode>()? {
                    Mode::Cumulative => agg.write_csv(&mut buf),
                    Mode::Accretion => agg.accretion().write_csv(&mut buf),
                };
                written.map_err(|e| Failure::Compute(e.to_string()))?;
            }
            emit(&common.out, &String::from_utf8_lossy(&buf))?;
        }
        Command::Regress(a) => {
            let (mode, chain, _) = a.chain()?;
            emit(&a.common.out, &report::render_fits(&chain, &format!("mode: {mode}")))?;
        }
        Command::Effects(a) => {
            let (_, _, effects) = a.chain()?;
            emit(&a.common.out, &report::render_effects(&effects))?;
        }
        Command::Runstest(a) => {
            let (runs, _) = a.factors()?;
            let mut text = String::from(report::RUNS_HEADER);
            for r in &runs {
                text.push_str(&report::runs_row(r.factor, &r.result));
                text.push('\n');
            }
            emit(&a.common.out, &text)?;
        }
        Command::Alpha(a) => {
            let (_, alpha) = a.factors()?;
            emit(&a.common.out, &report::alpha_text(&alpha))?;
        }
        Command::Hits { corpus, name, with } => {
            let c = load_corpus(&corpus)?;
            let index = OccurrenceIndex::build(&c);
            let a = actor(&name)?;
            match with {
                None => {
                    println!("phrase: {}", index.hit_count(&a, HitMode::Phrase));
                    println!("bag: {}", index.hit_count(&a, HitMode::Bag));
                }
                Some(other) => {
                    let b = actor(&other)?;
                    for (label, mode) in [("phrase", HitMode::Phrase), ("bag", HitMode::Bag)] {
                        let n = index
                            .cohit_count(&a, &b, mode)
                            .map_err(|e| Failure::Usage(e.to_string()))?;
                        println!("{label}: {n}");
                    }
                }
            }
        }
        Command::Export { common, seed, format } => {
            let format: GraphFormat = format.parse().map_err(|e: snm::export::ExportError| Failure::Usage(e.to_string()))?;
            let corpus = load_corpus(&common.corpus)?;
            let horizon = resolve_horizon(&corpus, common.horizon)?;
            let net = extract_network(&corpus, &actor(&seed)?, horizon);
            let text = export_graph(&net, format).map_err(|e| Failure::Compute(e.to_string()))?;
            emit(&common.out, &text)?;
        }
        Command::All(a) => {
            let mut config = a.config()?;
            let out = a
                .common
                .out
                .clone()
                .ok_or_else(|| Failure::Usage("`all` needs --out DIR".into()))?;
            config.output_dir = Some(out.clone());
            run_pipeline(&config)?;
            println!("wrote {}", out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
