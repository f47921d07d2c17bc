//! Yearly growth of seeds, papers, vertices and edges.

use std::collections::BTreeSet;
use std::io::{self, Write};

use thiserror::Error;

use crate::corpus::{ActorName, Corpus, PaperRecord, SeedList};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TimelineError {
    #[error("series is empty")]
    EmptySeries,
    #[error("seed list is empty")]
    NoSeeds,
}

/// Column names shared by aggregate and accretion series.
pub const COLUMNS: [&str; 4] = ["seeds", "papers", "vertices", "edges"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub year: i32,
    pub papers: usize,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSeries {
    pub seed: ActorName,
    pub rows: Vec<GrowthRow>,
}

impl GrowthSeries {
    pub fn last(&self) -> Option<&GrowthRow> {
        self.rows.last()
    }

    pub fn at(&self, year: i32) -> Option<&GrowthRow> {
        self.rows.iter().find(|r| r.year == year)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "year,papers,vertices,edges")?;
        for r in &self.rows {
            writeln!(out, "{},{},{},{}", r.year, r.papers, r.vertices, r.edges)?;
        }
        Ok(())
    }
}

/// Tracks the union of cliques over a stream of papers.
#[derive(Default)]
struct Accumulator<'a> {
    papers: usize,
    vertices: BTreeSet<&'a str>,
    edges: BTreeSet<(&'a str, &'a str)>,
}

impl<'a> Accumulator<'a> {
    fn add(&mut self, paper: &'a PaperRecord) {
        self.papers += 1;
        for a in &paper.authors {
            self.vertices.insert(a.key());
            for b in &paper.authors {
                if a.key() < b.key() {
                    self.edges.insert((a.key(), b.key()));
                }
            }
        }
    }
}

/// Cumulative counts for `seed` from its first paper through `horizon`.
///
/// Empty when the seed has no papers by `horizon`.
pub fn growth_series(corpus: &Corpus, seed: &ActorName, horizon: i32) -> GrowthSeries {
    let papers = corpus.papers_of(seed.key(), Some(horizon));
    let mut rows = Vec::new();
    if let Some(first) = papers.first() {
        let mut acc = Accumulator::default();
        let mut next = papers.iter().peekable();
        for year in first.year..=horizon {
            while let Some(p) = next.next_if(|p| p.year <= year) {
                acc.add(p);
            }
            rows.push(GrowthRow {
                year,
                papers: acc.papers,
                vertices: acc.vertices.len(),
                edges: acc.edges.len(),
            });
        }
    }
    GrowthSeries {
        seed: seed.clone(),
        rows,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AggregateRow {
    pub year: i32,
    pub seeds: usize,
    pub papers: usize,
    pub vertices: usize,
    pub edges: usize,
}

impl AggregateRow {
    fn values(&self) -> [i64; 4] {
        [self.seeds, self.papers, self.vertices, self.edges].map(|v| v as i64)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AggregateSeries {
    pub rows: Vec<AggregateRow>,
}

impl AggregateSeries {
    pub fn years(&self) -> Vec<i32> {
        self.rows.iter().map(|r| r.year).collect()
    }

    pub fn column(&self, name: &str) -> Option<Vec<i64>> {
        let i = COLUMNS.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r.values()[i]).collect())
    }

    pub fn accretion(&self) -> AccretionSeries {
        let mut rows = Vec::with_capacity(self.rows.len());
        let mut prev = [0i64; 4];
        for r in &self.rows {
            let v = r.values();
            rows.push(AccretionRow {
                year: r.year,
                values: [0, 1, 2, 3].map(|i| v[i] - prev[i]),
            });
            prev = v;
        }
        AccretionSeries { rows }
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "year,seeds,papers,vertices,edges")?;
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{}",
                r.year, r.seeds, r.papers, r.vertices, r.edges
            )?;
        }
        Ok(())
    }
}

/// Cumulative counts over every seed in `seeds`.
///
/// Vertices and edges are unions across seed networks, so an actor shared by
/// two seeds counts once. Rows start at the earliest first paper of any seed.
pub fn aggregate_series(
    corpus: &Corpus,
    seeds: &SeedList,
    horizon: i32,
) -> Result<AggregateSeries, TimelineError> {
    if seeds.is_empty() {
        return Err(TimelineError::NoSeeds);
    }
    let keys: Vec<&str> = seeds.iter().map(|s| s.name.key()).collect();
    let mut papers: Vec<&PaperRecord> = corpus
        .records()
        .iter()
        .filter(|p| p.year <= horizon && keys.iter().any(|k| p.has_author(k)))
        .collect();
    papers.sort_by(|a, b| (a.year, &a.id).cmp(&(b.year, &b.id)));
    let mut rows = Vec::new();
    if let Some(first) = papers.first() {
        let mut acc = Accumulator::default();
        let mut active: BTreeSet<&str> = BTreeSet::new();
        let mut next = papers.iter().peekable();
        for year in first.year..=horizon {
            while let Some(p) = next.next_if(|p| p.year <= year) {
                acc.add(p);
                active.extend(keys.iter().filter(|k| p.has_author(k)));
            }
            rows.push(AggregateRow {
                year,
                seeds: active.len(),
                papers: acc.papers,
                vertices: acc.vertices.len(),
                edges: acc.edges.len(),
            });
        }
    }
    Ok(AggregateSeries { rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AccretionRow {
    pub year: i32,
    /// Year-over-year change in seeds, papers, vertices, edges.
    pub values: [i64; 4],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AccretionSeries {
    pub rows: Vec<AccretionRow>,
}

impl AccretionSeries {
    pub fn column(&self, name: &str) -> Option<Vec<i64>> {
        let i = COLUMNS.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r.values[i]).collect())
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "year,seeds,papers,vertices,edges")?;
        for r in &self.rows {
            let [s, p, v, e] = r.values;
            writeln!(out, "{},{s},{p},{v},{e}", r.year)?;
        }
        Ok(())
    }
}

/// First value, then consecutive differences.
pub fn accretion(series: &[i64]) -> Result<Vec<i64>, TimelineError> {
    let (&first, _) = series.split_first().ok_or(TimelineError::EmptySeries)?;
    let mut out = vec![first];
    out.extend(series.windows(2).map(|w| w[1] - w[0]));
    Ok(out)
}

pub fn cumulative_sum(deltas: &[i64]) -> Vec<i64> {
    deltas
        .iter()
        .scan(0i64, |acc, d| {
            *acc += d;
            Some(*acc)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{Category, Seed};
    use crate::network::extract_network;

    fn name(s: &str) -> ActorName {
        ActorName::new(s).unwrap()
    }

    fn corpus(lines: &[&str]) -> Corpus {
        Corpus::parse(lines.join("\n").as_bytes()).unwrap()
    }

    fn seeds(names: &[&str]) -> SeedList {
        SeedList::new(
            names
                .iter()
                .map(|n| Seed {
                    name: name(n),
                    category: Category::Other,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_paper_plateau() {
        let c = corpus(&[r#"{"id":"1","year":2000,"authors":["S","A"]}"#]);
        let g = growth_series(&c, &name("S"), 2003);
        assert_eq!(g.rows.len(), 4);
        assert!(g
            .rows
            .iter()
            .all(|r| (r.papers, r.vertices, r.edges) == (1, 2, 1)));
        assert_eq!(g.rows.iter().map(|r| r.year).collect::<Vec<_>>(), [2000, 2001, 2002, 2003]);
    }

    #[test]
    fn no_papers_or_early_horizon_is_empty() {
        let c = corpus(&[r#"{"id":"1","year":2000,"authors":["S","A"]}"#]);
        assert!(growth_series(&c, &name("X"), 2003).rows.is_empty());
        assert!(growth_series(&c, &name("S"), 1999).rows.is_empty());
    }

    #[test]
    fn growth_agrees_with_extraction() {
        let c = corpus(&[
            r#"{"id":"1","year":2000,"authors":["S","A"]}"#,
            r#"{"id":"2","year":2002,"authors":["S","A","B"]}"#,
            r#"{"id":"3","year":2002,"authors":["B","C"]}"#,
            r#"{"id":"4","year":2004,"authors":["S","C","D","E"]}"#,
        ]);
        let s = name("S");
        for r in growth_series(&c, &s, 2005).rows {
            let net = extract_network(&c, &s, r.year);
            assert_eq!((r.vertices, r.edges), (net.vertex_count(), net.edge_count()));
            assert_eq!(r.papers, c.papers_of(s.key(), Some(r.year)).len());
        }
    }

    #[test]
    fn disjoint_cliques_union_is_sum() {
        let c = corpus(&[
            r#"{"id":"1","year":2000,"authors":["S","A","B"]}"#,
            r#"{"id":"2","year":2001,"authors":["T","C"]}"#,
            r#"{"id":"3","year":2001,"authors":["T","D","E","F"]}"#,
            r#"{"id":"4","year":2002,"authors":["S","G"]}"#,
        ]);
        let agg = aggregate_series(&c, &seeds(&["S", "T"]), 2002).unwrap();
        for row in &agg.rows {
            let parts: Vec<GrowthRow> = ["S", "T"]
                .iter()
                .filter_map(|s| growth_series(&c, &name(s), row.year).last().copied())
                .collect();
            assert_eq!(row.seeds, parts.len());
            assert_eq!(row.papers, parts.iter().map(|p| p.papers).sum::<usize>());
            assert_eq!(row.vertices, parts.iter().map(|p| p.vertices).sum::<usize>());
            assert_eq!(row.edges, parts.iter().map(|p| p.edges).sum::<usize>());
        }
        let last = agg.rows.last().unwrap();
        assert_eq!((last.seeds, last.papers, last.vertices, last.edges), (2, 4, 9, 11));
    }

    #[test]
    fn shared_papers_and_actors_count_once() {
        let c = corpus(&[
            r#"{"id":"1","year":2000,"authors":["S","T","A"]}"#,
            r#"{"id":"2","year":2001,"authors":["T","A"]}"#,
        ]);
        let agg = aggregate_series(&c, &seeds(&["S", "T"]), 2001).unwrap();
        assert_eq!(agg.rows[0], AggregateRow { year: 2000, seeds: 2, papers: 1, vertices: 3, edges: 3 });
        assert_eq!(agg.rows[1], AggregateRow { year: 2001, seeds: 2, papers: 2, vertices: 3, edges: 3 });
    }

    #[test]
    fn aggregate_edge_cases() {
        let c = corpus(&[r#"{"id":"1","year":2000,"authors":["A","B"]}"#]);
        assert_eq!(
            aggregate_series(&c, &SeedList::default(), 2000),
            Err(TimelineError::NoSeeds)
        );
        assert!(aggregate_series(&c, &seeds(&["S"]), 2000).unwrap().rows.is_empty());
    }

    #[test]
    fn accretion_examples() {
        assert_eq!(accretion(&[4, 4, 4]).unwrap(), [4, 0, 0]);
        assert_eq!(accretion(&[]), Err(TimelineError::EmptySeries));
        assert_eq!(accretion(&[3, 1]).unwrap(), [3, -2]);
        assert_eq!(cumulative_sum(&[1, 0, 2]), [1, 1, 3]);
    }

    #[test]
    fn csv_headers() {
        let mut buf = Vec::new();
        AggregateSeries::default().write_csv(&mut buf).unwrap();
        assert_eq!(buf, b"year,seeds,papers,vertices,edges\n");
        let c = corpus(&[r#"{"id":"1","year":2000,"authors":["S","A"]}"#]);
        let mut buf = Vec::new();
        growth_series(&c, &name("S"), 2000).write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "year,papers,vertices,edges\n2000,1,2,1\n");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn mini_corpus() -> impl Strategy<Value = Corpus> {
            prop::collection::vec(
                (1990i32..1998, prop::collection::btree_set(0usize..8, 1..4)),
                0..12,
            )
            .prop_map(|papers| {
                let lines: Vec<String> = papers
                    .iter()
                    .enumerate()
                    .map(|(i, (year, authors))| {
                        let names: Vec<String> =
                            authors.iter().map(|a| format!("\"a{a}\"")).collect();
                        format!(r#"{{"id":"p{i:02}","year":{year},"authors":[{}]}}"#, names.join(","))
                    })
                    .collect();
                Corpus::parse(lines.join("\n").as_bytes()).unwrap()
            })
        }

        proptest! {
            #[test]
            fn accretion_inverts_cumulative_sum(v in prop::collection::vec(-1000i64..1000, 1..40)) {
                prop_assert_eq!(cumulative_sum(&accretion(&v).unwrap()), v.clone());
                prop_assert_eq!(accretion(&cumulative_sum(&v)).unwrap(), v);
            }

            #[test]
            fn growth_monotone_and_contiguous(c in mini_corpus(), who in 0usize..3) {
                let g = growth_series(&c, &name(&format!("a{who}")), 1998);
                for w in g.rows.windows(2) {
                    prop_assert_eq!(w[1].year, w[0].year + 1);
                    prop_assert!(w[0].papers <= w[1].papers);
                    prop_assert!(w[0].vertices <= w[1].vertices);
                    prop_assert!(w[0].edges <= w[1].edges);
                }
                for r in &g.rows {
                    let net = extract_network(&c, &g.seed, r.year);
                    prop_assert_eq!((r.vertices, r.edges), (net.vertex_count(), net.edge_count()));
                }
            }

            #[test]
            fn aggregate_is_union_of_networks(c in mini_corpus()) {
                let list = seeds(&["a0", "a1", "a2"]);
                let agg = aggregate_series(&c, &list, 1998).unwrap();
                for w in agg.rows.windows(2) {
                    prop_assert_eq!(w[1].year, w[0].year + 1);
                    for col in 0..4 {
                        prop_assert!(w[0].values()[col] <= w[1].values()[col]);
                    }
                }
                for r in &agg.rows {
                    let nets: Vec<_> = list.iter().map(|s| extract_network(&c, &s.name, r.year)).collect();
                    let mut verts = BTreeSet::new();
                    let mut edges = BTreeSet::new();
                    for net in &nets {
                        verts.extend(net.actors().iter().map(|a| a.key().to_string()));
                        edges.extend(net.edges().map(|(u, v, _)| {
                            (net.actor(u).key().to_string(), net.actor(v).key().to_string())
                        }));
                    }
                    prop_assert_eq!(r.vertices, verts.len());
                    prop_assert_eq!(r.edges, edges.len());
                    prop_assert_eq!(r.seeds, nets.iter().filter(|n| n.vertex_count() > 0).count());
                    prop_assert!(r.seeds <= list.len());
                }
                let acc = agg.accretion();
                for (i, col) in COLUMNS.iter().enumerate() {
                    let cum = agg.column(col).unwrap();
                    prop_assert_eq!(cumulative_sum(&acc.column(col).unwrap()), cum.clone());
                    if !cum.is_empty() {
                        prop_assert_eq!(acc.column(COLUMNS[i]).unwrap(), accretion(&cum).unwrap());
                    }
                }
            }
        }
    }
}
