//! Text and CSV renderings of a [`ReportBundle`].

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::pipeline::ReportBundle;
use crate::stats::{AlphaResult, ChainModel, EffectDecomposition, RunsTestResult};

pub const GROWTH_CSV: &str = "growth.csv";
pub const AGGREGATE_CSV: &str = "aggregate.csv";
pub const ACCRETION_CSV: &str = "accretion.csv";
pub const FITS_TXT: &str = "fits.txt";
pub const EFFECTS_TXT: &str = "effects.txt";
pub const RUNS_CSV: &str = "runs.csv";
pub const ALPHA_TXT: &str = "alpha.txt";
pub const FACTORS_CSV: &str = "factors.csv";
pub const DIAGNOSTICS_CSV: &str = "diagnostics.csv";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Every seed's growth rows, prefixed by the seed name.
pub fn render_growth(bundle: &ReportBundle) -> String {
    let mut out = String::from("seed,year,papers,vertices,edges\n");
    for g in &bundle.growth {
        let name = csv_field(g.seed.raw());
        for r in &g.rows {
            let _ = writeln!(out, "{name},{},{},{},{}", r.year, r.papers, r.vertices, r.edges);
        }
    }
    out
}

pub fn render_aggregate(bundle: &ReportBundle) -> String {
    let mut buf = Vec::new();
    bundle.aggregate.write_csv(&mut buf).expect("write to memory");
    String::from_utf8(buf).expect("ascii csv")
}

pub fn render_accretion(bundle: &ReportBundle) -> String {
    let mut buf = Vec::new();
    bundle.accretion.write_csv(&mut buf).expect("write to memory");
    String::from_utf8(buf).expect("ascii csv")
}

/// One column per fitted variable, one row per term; blank where a term
/// does not enter that fit.
pub fn render_fits(chain: &ChainModel, header: &str) -> String {
    let names = chain.names();
    let width = names.iter().map(|n| n.len()).max().unwrap_or(0).max(12) + 2;
    let mut out = String::new();
    let _ = writeln!(out, "{header}");
    let _ = write!(out, "{:<width$}", "term");
    for n in &names[1..] {
        let _ = write!(out, "{n:>width$}");
    }
    out.push('\n');
    let _ = write!(out, "{:<width$}", "intercept");
    for f in chain.fits() {
        let _ = write!(out, "{:>width$.4}", f.intercept);
    }
    out.push('\n');
    for (i, term) in names[..names.len() - 1].iter().enumerate() {
        let _ = write!(out, "{term:<width$}");
        for (j, f) in chain.fits().iter().enumerate() {
            match f.coefficients.get(i) {
                Some(b) if i <= j => {
                    let _ = write!(out, "{b:>width$.4}");
                }
                _ => {
                    let _ = write!(out, "{:>width$}", "");
                }
            }
        }
        out.push('\n');
    }
    let _ = write!(out, "{:<width$}", "n_obs");
    for f in chain.fits() {
        let _ = write!(out, "{:>width$}", f.n_obs);
    }
    out.push('\n');
    let _ = write!(out, "{:<width$}", "rss");
    for f in chain.fits() {
        let _ = write!(out, "{:>width$.4}", f.residual_sum_squares);
    }
    out.push('\n');
    out
}

pub fn render_effects(e: &EffectDecomposition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "source: {}", e.source);
    let _ = writeln!(out, "target: {}", e.target);
    let _ = writeln!(out, "direct: {:.4}", e.direct);
    let _ = writeln!(out, "indirect: {:.4}", e.indirect);
    let _ = writeln!(out, "total: {:.4}", e.total);
    let _ = writeln!(out, "paths:");
    for p in &e.paths {
        let _ = writeln!(out, "  {}: {:.4}", p.variables.join(" -> "), p.product);
    }
    out
}

pub fn runs_row(factor: &str, t: &RunsTestResult) -> String {
    format!(
        "{},{},{},{},{:.2},{:.2},{:.2},{}",
        csv_field(factor),
        t.n1,
        t.n2,
        t.r,
        t.mu_r,
        t.sigma_r,
        t.z,
        t.decision()
    )
}

pub const RUNS_HEADER: &str = "factor,n1,n2,r,mu,sigma,z,decision\n";

pub fn render_runs(bundle: &ReportBundle) -> String {
    let mut out = String::from(RUNS_HEADER);
    for r in &bundle.runs {
        out.push_str(&runs_row(r.factor, &r.result));
        out.push('\n');
    }
    out
}

pub fn alpha_text(a: &AlphaResult) -> String {
    format!(
        "k: {}\nsum_component_variances: {:.4}\ntotal_variance: {:.4}\nalpha: {:.4}, {}\n",
        a.k,
        a.sum_component_variances,
        a.total_variance,
        a.alpha,
        a.band.label()
    )
}

pub fn render_alpha(bundle: &ReportBundle) -> String {
    bundle.alpha.as_ref().map(alpha_text).unwrap_or_default()
}

pub fn render_factors(bundle: &ReportBundle) -> String {
    let mut out = String::from("seed,category,papers,phrase_hits,bag_hits\n");
    for f in &bundle.factors {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(&f.seed),
            f.category.label(),
            f.papers,
            f.phrase_hits,
            f.bag_hits
        );
    }
    out
}

pub fn render_diagnostics(bundle: &ReportBundle) -> String {
    let mut out = String::from(
        "seed,first_paper,seed_degree,n,nes,nec,ner,reality_over_complete,star_over_complete,reality_over_star\n",
    );
    for d in &bundle.diagnostics {
        let x = &d.density;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{:.4},{:.4},{:.4}",
            csv_field(&d.seed),
            d.first_paper.map_or("none", |s| s.label()),
            d.seed_degree,
            x.n,
            x.nes,
            x.nec,
            x.ner,
            x.reality_over_complete,
            x.star_over_complete,
            x.reality_over_star
        );
    }
    out
}

fn fits_header(bundle: &ReportBundle) -> String {
    let years = match (bundle.aggregate.rows.first(), bundle.aggregate.rows.last()) {
        (Some(a), Some(b)) => format!("{}-{}", a.year, b.year),
        _ => "none".into(),
    };
    format!("mode: {}\nyears: {years}", bundle.mode)
}

/// All report files as (name, contents), in a fixed order.
pub fn render_all(bundle: &ReportBundle) -> Vec<(&'static str, String)> {
    vec![
        (GROWTH_CSV, render_growth(bundle)),
        (AGGREGATE_CSV, render_aggregate(bundle)),
        (ACCRETION_CSV, render_accretion(bundle)),
        (
            FITS_TXT,
            bundle
                .chain
                .as_ref()
                .map(|c| render_fits(c, &fits_header(bundle)))
                .unwrap_or_default(),
        ),
        (
            EFFECTS_TXT,
            bundle.effects.as_ref().map(render_effects).unwrap_or_default(),
        ),
        (RUNS_CSV, render_runs(bundle)),
        (ALPHA_TXT, render_alpha(bundle)),
        (FACTORS_CSV, render_factors(bundle)),
        (DIAGNOSTICS_CSV, render_diagnostics(bundle)),
    ]
}

/// Writes every report file under `dir`. On failure, files written by this
/// call are removed again, and so is `dir` if this call created it.
pub fn emit_report(bundle: &ReportBundle, dir: &Path) -> io::Result<Vec<PathBuf>> {
    let created = !dir.exists();
    fs::create_dir_all(dir)?;
    let mut written: Vec<PathBuf> = Vec::new();
    for (name, contents) in render_all(bundle) {
        let path = dir.join(name);
        if let Err(e) = fs::write(&path, contents) {
            for p in &written {
                let _ = fs::remove_file(p);
            }
            if created {
                let _ = fs::remove_dir(dir);
            }
            return Err(e);
        }
        written.push(path);
    }
    Ok(written)
}
