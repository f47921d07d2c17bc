//! Bibliographic records, actor identity, and seed lists.
//!
//! A [`Corpus`] is built once from a JSONL stream and is immutable afterwards.
//! Every other module reads actors, papers and years from it.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("invalid actor name {0:?}: empty after trimming")]
    InvalidName(String),
    #[error("line {line}: malformed record: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate record id {id:?}")]
    DuplicateRecord { line: usize, id: String },
    #[error("line {line}: invalid record: {reason}")]
    InvalidRecord { line: usize, reason: String },
    #[error("seeds line {line}: {reason}")]
    InvalidSeed { line: usize, reason: String },
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Folds diacritics, lowercases, and collapses whitespace.
///
/// `normalize_name(normalize_name(x)) == normalize_name(x)` for every valid `x`.
pub fn normalize_name(raw: &str) -> Result<String, CorpusError> {
    let folded = fold(raw);
    let key = folded.split_whitespace().collect::<Vec<_>>().join(" ");
    if key.is_empty() {
        return Err(CorpusError::InvalidName(raw.to_string()));
    }
    Ok(key)
}

/// NFD decomposition with combining marks dropped, then lowercased.
pub(crate) fn fold(text: &str) -> String {
    text.nfd()
        .filter(|c| !is_combining_mark(*c))
        .flat_map(char::to_lowercase)
        .collect()
}

/// An actor as spelled in a source, plus the identity key derived from it.
#[derive(Clone, Debug)]
pub struct ActorName {
    raw: String,
    key: String,
}

impl ActorName {
    pub fn new(raw: &str) -> Result<Self, CorpusError> {
        let key = normalize_name(raw)?;
        Ok(Self {
            raw: raw.trim().to_string(),
            key,
        })
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn key(&self) -> &str {
        &self.key
    }
}

// Identity is the key; spelling variants of one actor compare equal.
impl PartialEq for ActorName {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for ActorName {}

impl std::hash::Hash for ActorName {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl fmt::Display for ActorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raw)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperRecord {
    pub id: String,
    pub year: i32,
    pub title: String,
    pub authors: Vec<ActorName>,
}

impl PaperRecord {
    pub fn has_author(&self, key: &str) -> bool {
        self.authors.iter().any(|a| a.key() == key)
    }
}

/// On-disk shape of one JSONL line.
#[derive(Debug, Deserialize, Serialize)]
struct RawRecord {
    id: String,
    year: i32,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    title: String,
    authors: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    records: Vec<PaperRecord>,
    year_range: Option<(i32, i32)>,
    registry: BTreeMap<String, ActorName>,
    // actor key -> record positions, sorted by (year, id)
    by_author: HashMap<String, Vec<usize>>,
}

impl Corpus {
    /// Reads JSONL records, one per non-blank line.
    pub fn parse<R: BufRead>(reader: R) -> Result<Self, CorpusError> {
        let mut records = Vec::new();
        let mut ids = HashSet::new();
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let raw: RawRecord =
                serde_json::from_str(&line).map_err(|e| CorpusError::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?;
            let record = validate(raw, line_no)?;
            if !ids.insert(record.id.clone()) {
                return Err(CorpusError::DuplicateRecord {
                    line: line_no,
                    id: record.id,
                });
            }
            records.push(record);
        }
        Ok(Self::from_records(records))
    }

    /// Builds a corpus from already validated records.
    fn from_records(records: Vec<PaperRecord>) -> Self {
        let mut registry = BTreeMap::new();
        let mut by_author: HashMap<String, Vec<usize>> = HashMap::new();
        let mut year_range: Option<(i32, i32)> = None;
        for (pos, rec) in records.iter().enumerate() {
            year_range = Some(match year_range {
                None => (rec.year, rec.year),
                Some((lo, hi)) => (lo.min(rec.year), hi.max(rec.year)),
            });
            for author in &rec.authors {
                registry
                    .entry(author.key().to_string())
                    .or_insert_with(|| author.clone());
                by_author
                    .entry(author.key().to_string())
                    .or_default()
                    .push(pos);
            }
        }
        for positions in by_author.values_mut() {
            positions.sort_by(|&a, &b| {
                let (ra, rb) = (&records[a], &records[b]);
                (ra.year, &ra.id).cmp(&(rb.year, &rb.id))
            });
        }
        Self {
            records,
            year_range,
            registry,
            by_author,
        }
    }

    pub fn records(&self) -> &[PaperRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// `(year_min, year_max)`, or `None` for an empty corpus.
    pub fn year_range(&self) -> Option<(i32, i32)> {
        self.year_range
    }

    pub fn registry(&self) -> &BTreeMap<String, ActorName> {
        &self.registry
    }

    pub fn actor(&self, key: &str) -> Option<&ActorName> {
        self.registry.get(key)
    }

    /// Papers listing `actor` as an author, up to and including `up_to_year`,
    /// ordered by `(year, id)`. Unknown actors yield an empty list.
    pub fn papers_of(&self, actor: &str, up_to_year: Option<i32>) -> Vec<&PaperRecord> {
        let Some(positions) = self.by_author.get(actor) else {
            return Vec::new();
        };
        positions
            .iter()
            .map(|&p| &self.records[p])
            .take_while(|r| up_to_year.map_or(true, |y| r.year <= y))
            .collect()
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for rec in &self.records {
            let raw = RawRecord {
                id: rec.id.clone(),
                year: rec.year,
                title: rec.title.clone(),
                authors: rec.authors.iter().map(|a| a.raw().to_string()).collect(),
            };
            serde_json::to_writer(&mut out, &raw)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

impl PartialEq for Corpus {
    fn eq(&self, other: &Self) -> bool {
        self.records == other.records
            && self.year_range == other.year_range
            && self.registry.keys().eq(other.registry.keys())
    }
}

fn validate(raw: RawRecord, line: usize) -> Result<PaperRecord, CorpusError> {
    let invalid = |reason: String| CorpusError::InvalidRecord { line, reason };
    if raw.id.trim().is_empty() {
        return Err(invalid("empty id".into()));
    }
    if raw.authors.is_empty() {
        return Err(invalid(format!("record {:?} has no authors", raw.id)));
    }
    let mut seen = HashSet::new();
    let mut authors = Vec::with_capacity(raw.authors.len());
    for name in &raw.authors {
        let actor = ActorName::new(name)
            .map_err(|_| invalid(format!("record {:?} has a blank author", raw.id)))?;
        if !seen.insert(actor.key().to_string()) {
            return Err(invalid(format!(
                "record {:?} lists {:?} twice",
                raw.id,
                actor.key()
            )));
        }
        authors.push(actor);
    }
    Ok(PaperRecord {
        id: raw.id,
        year: raw.year,
        title: raw.title,
        authors,
    })
}

/// Academic level attached to a seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Category {
    Professor,
    AssociateProfessor,
    Other,
}

impl Category {
    pub fn label(self) -> &'static str {
        match self {
            Category::Professor => "pr",
            Category::AssociateProfessor => "ap",
            Category::Other => "other",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Seed {
    pub name: ActorName,
    pub category: Category,
}

/// Seeds in file order. Order matters: the runs test reads it as a sequence.
#[derive(Clone, Debug, Default)]
pub struct SeedList {
    entries: Vec<Seed>,
}

impl SeedList {
    /// Parses `name<TAB>category` lines; the category column is optional.
    pub fn parse<R: BufRead>(reader: R) -> Result<Self, CorpusError> {
        let mut entries = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut cols = line.splitn(2, '\t');
            let name = cols.next().unwrap_or_default();
            let category = match cols.next().map(str::trim) {
                None | Some("") => Category::Other,
                Some("pr") => Category::Professor,
                Some("ap") => Category::AssociateProfessor,
                Some(other) => {
                    return Err(CorpusError::InvalidSeed {
                        line: line_no,
                        reason: format!("unknown category {other:?}"),
                    })
                }
            };
            let name = ActorName::new(name).map_err(|_| CorpusError::InvalidSeed {
                line: line_no,
                reason: "blank name".into(),
            })?;
            entries.push(Seed { name, category });
        }
        Self::new(entries)
    }

    pub fn new(entries: Vec<Seed>) -> Result<Self, CorpusError> {
        let mut keys = HashSet::new();
        for (i, seed) in entries.iter().enumerate() {
            if !keys.insert(seed.name.key().to_string()) {
                return Err(CorpusError::InvalidSeed {
                    line: i + 1,
                    reason: format!("duplicate seed {:?}", seed.name.key()),
                });
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[Seed] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Seed> {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus(text: &str) -> Result<Corpus, CorpusError> {
        Corpus::parse(text.as_bytes())
    }

    #[test]
    fn normalize_folds_case_and_spacing() {
        assert_eq!(
            normalize_name("Azuraliza  Abu Bakar").unwrap(),
            "azuraliza abu bakar"
        );
        assert_eq!(
            normalize_name("azuraliza abu bakar").unwrap(),
            "azuraliza abu bakar"
        );
        assert_eq!(normalize_name("  José\tÁlvarez ").unwrap(), "jose alvarez");
    }

    #[test]
    fn normalize_rejects_blank() {
        assert!(matches!(
            normalize_name("  "),
            Err(CorpusError::InvalidName(_))
        ));
        assert!(normalize_name("").is_err());
    }

    #[test]
    fn singleton_corpus() {
        let c = corpus(r#"{"id":"p1","year":1995,"authors":["A","B"]}"#).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.year_range(), Some((1995, 1995)));
        assert_eq!(c.registry().len(), 2);
    }

    #[test]
    fn empty_stream() {
        let c = corpus("").unwrap();
        assert!(c.is_empty());
        assert!(c.registry().is_empty());
        assert_eq!(c.year_range(), None);
        let c = corpus("\n  \n").unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn zero_authors_rejected() {
        let err = corpus(r#"{"id":"p1","year":1995,"authors":[]}"#).unwrap_err();
        assert!(matches!(err, CorpusError::InvalidRecord { line: 1, .. }));
    }

    #[test]
    fn duplicate_author_within_record_rejected() {
        let err = corpus(r#"{"id":"p1","year":1995,"authors":["Ann Lee","ann  lee"]}"#)
            .unwrap_err();
        assert!(matches!(err, CorpusError::InvalidRecord { .. }));
    }

    #[test]
    fn duplicate_id_rejected() {
        let text = concat!(
            r#"{"id":"p1","year":1995,"authors":["A"]}"#,
            "\n",
            r#"{"id":"p1","year":1996,"authors":["B"]}"#
        );
        let err = corpus(text).unwrap_err();
        assert!(matches!(err, CorpusError::DuplicateRecord { line: 2, .. }));
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let text = concat!(r#"{"id":"p1","year":1995,"authors":["A"]}"#, "\n\n{oops");
        match corpus(text).unwrap_err() {
            CorpusError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_year_rejected() {
        let err = corpus(r#"{"id":"p1","authors":["A"]}"#).unwrap_err();
        assert!(matches!(err, CorpusError::Parse { line: 1, .. }));
    }

    #[test]
    fn papers_of_filters_and_sorts() {
        let text = [
            r#"{"id":"b","year":2001,"authors":["S","X"]}"#,
            r#"{"id":"a","year":2001,"authors":["S"]}"#,
            r#"{"id":"c","year":1999,"authors":["Y","S"]}"#,
            r#"{"id":"d","year":2003,"authors":["Y"]}"#,
        ]
        .join("\n");
        let c = corpus(&text).unwrap();
        let ids: Vec<_> = c.papers_of("s", None).iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["c", "a", "b"]);
        assert_eq!(c.papers_of("s", Some(2000)).len(), 1);
        assert!(c.papers_of("s", Some(1998)).is_empty());
        assert!(c.papers_of("nobody", None).is_empty());
    }

    #[test]
    fn registry_keeps_first_spelling() {
        let text = [
            r#"{"id":"a","year":2001,"authors":["Ann  LEE"]}"#,
            r#"{"id":"b","year":2002,"authors":["ann lee"]}"#,
        ]
        .join("\n");
        let c = corpus(&text).unwrap();
        assert_eq!(c.registry().len(), 1);
        assert_eq!(c.actor("ann lee").unwrap().raw(), "Ann  LEE");
        assert_eq!(c.papers_of("ann lee", None).len(), 2);
    }

    #[test]
    fn seeds_parse_with_optional_category() {
        let seeds = SeedList::parse("Ann Lee\tpr\nBo Tan\tap\nCy Ng\n".as_bytes()).unwrap();
        let cats: Vec<_> = seeds.iter().map(|s| s.category).collect();
        assert_eq!(
            cats,
            [
                Category::Professor,
                Category::AssociateProfessor,
                Category::Other
            ]
        );
        assert_eq!(seeds.entries()[2].name.key(), "cy ng");
    }

    #[test]
    fn seeds_reject_duplicates_and_unknown_categories() {
        assert!(SeedList::parse("Ann Lee\nann lee\n".as_bytes()).is_err());
        assert!(SeedList::parse("Ann Lee\tdean\n".as_bytes()).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn raw_name() -> impl Strategy<Value = String> {
            "[ ]{0,2}[A-Za-zÉé]{1,4}( {1,3}[A-Za-zé]{1,4}){0,2}[ ]{0,2}"
        }

        fn mini_corpus() -> impl Strategy<Value = Corpus> {
            prop::collection::vec(
                (1990i32..2000, "[a-z ]{0,12}", prop::collection::vec(0usize..5, 1..4)),
                0..10,
            )
            .prop_map(|recs| {
                let lines: Vec<String> = recs
                    .into_iter()
                    .enumerate()
                    .map(|(i, (year, title, mut authors))| {
                        authors.sort();
                        authors.dedup();
                        let names: Vec<String> =
                            authors.iter().map(|a| format!("\"Author {a}\"")).collect();
                        format!(
                            r#"{{"id":"p{i}","year":{year},"title":{title:?},"authors":[{}]}}"#,
                            names.join(",")
                        )
                    })
                    .collect();
                Corpus::parse(lines.join("\n").as_bytes()).unwrap()
            })
        }

        proptest! {
            #[test]
            fn normalization_is_idempotent(raw in raw_name()) {
                if let Ok(key) = normalize_name(&raw) {
                    prop_assert_eq!(normalize_name(&key).unwrap(), key.clone());
                    prop_assert_eq!(normalize_name(&raw.to_uppercase()).unwrap(), key);
                }
            }

            #[test]
            fn round_trip(c in mini_corpus()) {
                let mut buf = Vec::new();
                c.write_jsonl(&mut buf).unwrap();
                prop_assert_eq!(Corpus::parse(buf.as_slice()).unwrap(), c);
            }

            #[test]
            fn registry_closed(c in mini_corpus()) {
                for rec in c.records() {
                    for a in &rec.authors {
                        prop_assert!(c.registry().contains_key(a.key()));
                    }
                }
            }

            #[test]
            fn papers_of_monotone(c in mini_corpus(), who in 0usize..5, year in 1989i32..2000) {
                let key = format!("author {who}");
                let now = c.papers_of(&key, Some(year));
                let later = c.papers_of(&key, Some(year + 1));
                prop_assert!(now.len() <= later.len());
                prop_assert!(now.iter().all(|p| p.year <= year && p.has_author(&key)));
            }
        }
    }
}
