//! Graph exports: Graphviz DOT and a labelled adjacency matrix CSV.

use std::str::FromStr;

use thiserror::Error;

use crate::network::{AdjacencyMatrix, SocialNetwork};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("unknown graph format {0:?} (expected dot or csv)")]
    UnknownFormat(String),
    #[error("malformed matrix csv: {0}")]
    Malformed(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    MatrixCsv,
}

impl FromStr for GraphFormat {
    type Err = ExportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(GraphFormat::Dot),
            "csv" | "matrix" | "matrix_csv" => Ok(GraphFormat::MatrixCsv),
            _ => Err(ExportError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn export_graph(sn: &SocialNetwork, format: GraphFormat) -> Result<String, ExportError> {
    match format {
        GraphFormat::Dot => Ok(to_dot(sn)),
        GraphFormat::MatrixCsv => to_matrix_csv(&sn.adjacency_matrix()),
    }
}

fn to_dot(sn: &SocialNetwork) -> String {
    let mut out = String::from("graph coauthors {\n");
    for a in sn.actors() {
        out.push_str(&format!("  {:?};\n", a.key()));
    }
    for (u, v, w) in sn.edges() {
        out.push_str(&format!(
            "  {:?} -- {:?} [weight={w}];\n",
            sn.actor(u).key(),
            sn.actor(v).key()
        ));
    }
    out.push_str("}\n");
    out
}

fn to_matrix_csv(m: &AdjacencyMatrix) -> Result<String, ExportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(m.labels.iter().cloned());
    w.write_record(&header)?;
    for (label, row) in m.labels.iter().zip(&m.entries) {
        let mut rec = vec![label.clone()];
        rec.extend(row.iter().map(u32::to_string));
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| ExportError::Malformed(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| ExportError::Malformed(e.to_string()))
}

/// Reads back a matrix written by [`export_graph`].
pub fn parse_matrix_csv(text: &str) -> Result<AdjacencyMatrix, ExportError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows = r.records();
    let header = match rows.next() {
        Some(h) => h?,
        None => return Err(ExportError::Malformed("missing header".into())),
    };
    let labels: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut entries = Vec::with_capacity(labels.len());
    for (i, rec) in rows.enumerate() {
        let rec = rec?;
        if rec.len() != labels.len() + 1 || rec.get(0) != labels.get(i).map(String::as_str) {
            return Err(ExportError::Malformed(format!("row {}", i + 1)));
        }
        let row = rec
            .iter()
            .skip(1)
            .map(|v| v.parse::<u32>().map_err(|e| ExportError::Malformed(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        entries.push(row);
    }
    if entries.len() != labels.len() {
        return Err(ExportError::Malformed("row count differs from header".into()));
    }
    Ok(AdjacencyMatrix { labels, entries })
}
