//! Offline occurrence index standing in for search-engine hit counts.
//!
//! Each record is one document whose token sequence is its title followed by
//! its author names. Counts are document frequencies.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::corpus::{fold, ActorName, Corpus};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("co-hit needs two distinct actors, got {0:?} twice")]
    InvalidPair(String),
}

/// How a name query matches a document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HitMode {
    /// Quoted query: name tokens contiguous and in order.
    Phrase,
    /// Unquoted query: every name token somewhere in the document.
    Bag,
}

/// Lowercased, diacritic-folded tokens split on non-alphanumerics.
pub fn tokenize(text: &str) -> Vec<String> {
    fold(text)
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct OccurrenceIndex {
    doc_ids: Vec<String>,
    doc_tokens: Vec<Vec<String>>,
    // token -> ascending, duplicate-free document ordinals
    postings: BTreeMap<String, Vec<u32>>,
}

impl OccurrenceIndex {
    pub fn build(corpus: &Corpus) -> Self {
        let mut index = Self::default();
        for (ord, rec) in corpus.records().iter().enumerate() {
            let mut tokens = tokenize(&rec.title);
            for author in &rec.authors {
                tokens.extend(tokenize(author.raw()));
            }
            let ord = ord as u32;
            for tok in &tokens {
                let list = index.postings.entry(tok.clone()).or_default();
                if list.last() != Some(&ord) {
                    list.push(ord);
                }
            }
            index.doc_ids.push(rec.id.clone());
            index.doc_tokens.push(tokens);
        }
        index
    }

    pub fn doc_count(&self) -> usize {
        self.doc_ids.len()
    }

    /// Record ids containing `token`, in corpus order.
    pub fn postings(&self, token: &str) -> Vec<&str> {
        self.postings
            .get(token)
            .map(|list| list.iter().map(|&d| self.doc_ids[d as usize].as_str()).collect())
            .unwrap_or_default()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.postings.keys().map(String::as_str)
    }

    pub fn doc_tokens(&self, record_id: &str) -> Option<&[String]> {
        self.doc_ids
            .iter()
            .position(|id| id == record_id)
            .map(|d| self.doc_tokens[d].as_slice())
    }

    /// Ordinals of documents matching `name` under `mode`, ascending.
    fn matches(&self, name: &ActorName, mode: HitMode) -> Vec<u32> {
        let query = tokenize(name.raw());
        if query.is_empty() {
            return Vec::new();
        }
        let mut lists: Vec<&Vec<u32>> = Vec::with_capacity(query.len());
        for tok in &query {
            match self.postings.get(tok) {
                Some(list) => lists.push(list),
                None => return Vec::new(),
            }
        }
        lists.sort_by_key(|l| l.len());
        let mut docs = lists[0].clone();
        for list in &lists[1..] {
            docs = intersect(&docs, list);
            if docs.is_empty() {
                break;
            }
        }
        if mode == HitMode::Phrase {
            docs.retain(|&d| {
                self.doc_tokens[d as usize]
                    .windows(query.len())
                    .any(|w| w == query.as_slice())
            });
        }
        docs
    }

    pub fn hit_count(&self, name: &ActorName, mode: HitMode) -> usize {
        self.matches(name, mode).len()
    }

    /// Documents where both actors match under `mode`. Symmetric.
    pub fn cohit_count(
        &self,
        a: &ActorName,
        b: &ActorName,
        mode: HitMode,
    ) -> Result<usize, IndexError> {
        if a.key() == b.key() {
            return Err(IndexError::InvalidPair(a.key().to_string()));
        }
        Ok(intersect(&self.matches(a, mode), &self.matches(b, mode)).len())
    }
}

fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
