//! Seed-centric co-authorship networks.
//!
//! Actors map one-to-one onto vertices. Every paper of the seed adds a clique
//! over its authors; an edge's weight is the number of shared papers.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::corpus::{ActorName, Corpus, PaperRecord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetworkError {
    #[error("actor {0:?} is not in the network")]
    UnknownActor(String),
    #[error("seed {0:?} has no papers")]
    NoPapers(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Relation carried by an edge. Only co-authorship is extracted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Coauthor,
}

#[derive(Clone, Debug)]
pub struct SocialNetwork {
    seed: ActorName,
    as_of_year: i32,
    // vertex id = position; sorted by key
    actors: Vec<ActorName>,
    lookup: BTreeMap<String, VertexId>,
    edges: BTreeMap<(VertexId, VertexId), u32>,
    relation: Relation,
}

impl SocialNetwork {
    /// Folds `papers` into a network. Papers are expected to contain the seed.
    pub fn from_papers<'a, I>(seed: &ActorName, as_of_year: i32, papers: I) -> Self
    where
        I: IntoIterator<Item = &'a PaperRecord>,
    {
        let papers: Vec<&PaperRecord> = papers.into_iter().collect();
        let mut by_key: BTreeMap<String, ActorName> = BTreeMap::new();
        for p in &papers {
            for a in &p.authors {
                by_key.entry(a.key().to_string()).or_insert_with(|| a.clone());
            }
        }
        let actors: Vec<ActorName> = by_key.into_values().collect();
        let lookup: BTreeMap<String, VertexId> = actors
            .iter()
            .enumerate()
            .map(|(i, a)| (a.key().to_string(), VertexId(i as u32)))
            .collect();
        let mut edges = BTreeMap::new();
        for p in &papers {
            let mut ids: Vec<VertexId> = p.authors.iter().map(|a| lookup[a.key()]).collect();
            ids.sort();
            for (i, &u) in ids.iter().enumerate() {
                for &v in &ids[i + 1..] {
                    *edges.entry((u, v)).or_insert(0) += 1;
                }
            }
        }
        Self {
            seed: seed.clone(),
            as_of_year,
            actors,
            lookup,
            edges,
            relation: Relation::Coauthor,
        }
    }

    pub fn seed(&self) -> &ActorName {
        &self.seed
    }

    pub fn as_of_year(&self) -> i32 {
        self.as_of_year
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn vertex_count(&self) -> usize {
        self.actors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Actors ordered by key; index = vertex id.
    pub fn actors(&self) -> &[ActorName] {
        &self.actors
    }

    pub fn vertex(&self, key: &str) -> Option<VertexId> {
        self.lookup.get(key).copied()
    }

    pub fn actor(&self, v: VertexId) -> &ActorName {
        &self.actors[v.0 as usize]
    }

    /// Edges as `(low, high, weight)` with `low < high`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    pub fn weight(&self, a: &str, b: &str) -> u32 {
        match (self.vertex(a), self.vertex(b)) {
            (Some(u), Some(v)) if u != v => {
                let key = if u < v { (u, v) } else { (v, u) };
                self.edges.get(&key).copied().unwrap_or(0)
            }
            _ => 0,
        }
    }

    /// Number of distinct neighbours of `actor`.
    pub fn degree(&self, actor: &str) -> Result<usize, NetworkError> {
        let v = self
            .vertex(actor)
            .ok_or_else(|| NetworkError::UnknownActor(actor.to_string()))?;
        Ok(self.edges.keys().filter(|(a, b)| *a == v || *b == v).count())
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        let n = self.actors.len();
        let mut entries = vec![vec![0u32; n]; n];
        for (&(u, v), &w) in &self.edges {
            entries[u.0 as usize][v.0 as usize] = w;
            entries[v.0 as usize][u.0 as usize] = w;
        }
        AdjacencyMatrix {
            labels: self.actors.iter().map(|a| a.key().to_string()).collect(),
            entries,
        }
    }

    pub fn density_diagnostics(&self) -> DensityDiagnostics {
        DensityDiagnostics::new(self.vertex_count(), self.edge_count())
    }

    /// True when `self` is contained in `other` with pointwise smaller weights.
    pub fn is_subgraph_of(&self, other: &SocialNetwork) -> bool {
        self.actors.iter().all(|a| other.vertex(a.key()).is_some())
            && self.edges.iter().all(|(&(u, v), &w)| {
                other.weight(self.actor(u).key(), self.actor(v).key()) >= w
            })
    }
}

/// Builds `seed`'s network from its papers up to `up_to_year`.
///
/// A seed with no papers yields an empty network.
pub fn extract_network(corpus: &Corpus, seed: &ActorName, up_to_year: i32) -> SocialNetwork {
    SocialNetwork::from_papers(seed, up_to_year, corpus.papers_of(seed.key(), Some(up_to_year)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<u32>>,
}

impl AdjacencyMatrix {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.order()).all(|i| self.entries[i][i] == 0)
    }
}

/// Star (n-1) and complete (n(n-1)/2) edge counts against the observed count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityDiagnostics {
    pub n: usize,
    pub nes: usize,
    pub nec: usize,
    pub ner: usize,
    pub reality_over_complete: f64,
    pub star_over_complete: f64,
    pub reality_over_star: f64,
}

impl DensityDiagnostics {
    pub fn new(n: usize, ner: usize) -> Self {
        let (nes, nec) = if n >= 2 { (n - 1, n * (n - 1) / 2) } else { (0, 0) };
        let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
        Self {
            n,
            nes,
            nec,
            ner,
            reality_over_complete: ratio(ner, nec),
            star_over_complete: ratio(nes, nec),
            reality_over_star: ratio(ner, nes),
        }
    }
}

/// Author-count shape of a seed's earliest paper.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FirstPaperShape {
    SingleAuthor,
    TwoAuthors,
    MoreThanTwo,
}

impl FirstPaperShape {
    pub fn label(self) -> &'static str {
        match self {
            FirstPaperShape::SingleAuthor => "single-author",
            FirstPaperShape::TwoAuthors => "two-authors",
            FirstPaperShape::MoreThanTwo => "more-than-two",
        }
    }
}

/// Classifies the earliest paper (ties on year go to the smallest id).
pub fn classify_first_paper(
    corpus: &Corpus,
    seed: &ActorName,
) -> Result<FirstPaperShape, NetworkError> {
    let first = corpus
        .papers_of(seed.key(), None)
        .into_iter()
        .next()
        .ok_or_else(|| NetworkError::NoPapers(seed.key().to_string()))?;
    Ok(match first.authors.len() {
        1 => FirstPaperShape::SingleAuthor,
        2 => FirstPaperShape::TwoAuthors,
        _ => FirstPaperShape::MoreThanTwo,
    })
}
