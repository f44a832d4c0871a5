//! Reading per-author citation records from CSV and JSONL files.
//!
//! The native CSV dialect is one row per author, `;`-delimited, UTF-8 with LF
//! line endings: the author id first, then that author's citation counts.
//! Lines starting with `#` are comments. Foreign layouts are adapted through a
//! [`ColumnMapping`], which can also describe long files with one row per
//! paper.

use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::IndexError;
use crate::vector::{parse_citation, CitationVector};

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: author `{author}` already defined on line {first_line}")]
    DuplicateAuthor {
        author: String,
        line: usize,
        first_line: usize,
    },
    #[error("line {line}, column {column}: negative citation count `{token}`")]
    NegativeCitation {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("invalid column mapping: {0}")]
    Mapping(String),
    #[error("unknown dataset format `{0}` (expected csv or jsonl)")]
    UnknownFormat(String),
}

impl DatasetError {
    /// Source line the error points at, when there is one.
    pub fn line(&self) -> Option<usize> {
        match self {
            Self::Parse { line, .. }
            | Self::DuplicateAuthor { line, .. }
            | Self::NegativeCitation { line, .. } => Some(*line),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuthorRecord {
    pub author_id: String,
    /// Raw counts in file order.
    pub citations: Vec<u64>,
    pub source_line: usize,
}

impl AuthorRecord {
    pub fn vector(&self) -> CitationVector {
        CitationVector::from_counts(self.citations.clone())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub source: String,
    pub cutoff_date: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Dataset {
    pub records: Vec<AuthorRecord>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DatasetSummary {
    pub authors: usize,
    pub papers: usize,
    pub citations: u64,
}

impl fmt::Display for DatasetSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "authors = {} papers = {} citations = {}",
            self.authors, self.papers, self.citations
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DatasetFormat {
    #[default]
    Csv,
    Jsonl,
}

impl FromStr for DatasetFormat {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "jsonl" | "ndjson" => Ok(Self::Jsonl),
            other => Err(DatasetError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    /// One row per author: id, then every citation count.
    #[default]
    Wide,
    /// One row per paper: id and a single citation count.
    Long,
}

/// Maps a foreign tabular layout onto author records. Columns are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(default, deny_unknown_fields)]
pub struct ColumnMapping {
    pub layout: Layout,
    pub delimiter: char,
    /// Leading records to drop (after comment lines are removed).
    pub header_rows: usize,
    pub comment_prefix: Option<char>,
    pub id_column: usize,
    /// Wide layout: first citation column.
    pub citations_from: usize,
    /// Wide layout: one past the last citation column; `None` reads to the end.
    pub citations_to: Option<usize>,
    /// Long layout: the citation column.
    pub citation_column: usize,
    /// JSONL keys.
    pub author_key: String,
    pub citations_key: String,
    pub cutoff_date: Option<String>,
}

impl Default for ColumnMapping {
    fn default() -> Self {
        Self {
            layout: Layout::Wide,
            delimiter: ';',
            header_rows: 0,
            comment_prefix: Some('#'),
            id_column: 0,
            citations_from: 1,
            citations_to: None,
            citation_column: 1,
            author_key: "author".into(),
            citations_key: "citations".into(),
            cutoff_date: None,
        }
    }
}

impl ColumnMapping {
    pub fn from_toml_str(text: &str) -> Result<Self, DatasetError> {
        let mapping: Self =
            toml::from_str(text).map_err(|e| DatasetError::Mapping(e.to_string()))?;
        mapping.validate()?;
        Ok(mapping)
    }

    pub fn from_path(path: &Path) -> Result<Self, DatasetError> {
        Self::from_toml_str(&read_text(path)?)
    }

    fn validate(&self) -> Result<(), DatasetError> {
        if !self.delimiter.is_ascii() || self.comment_prefix.is_some_and(|c| !c.is_ascii()) {
            return Err(DatasetError::Mapping(
                "delimiter and comment prefix must be ASCII".into(),
            ));
        }
        if let Some(to) = self.citations_to {
            if to < self.citations_from {
                return Err(DatasetError::Mapping(
                    "citations_to precedes citations_from".into(),
                ));
            }
        }
        if self.layout == Layout::Long && self.id_column == self.citation_column {
            return Err(DatasetError::Mapping(
                "id and citation columns coincide".into(),
            ));
        }
        Ok(())
    }
}

fn read_text(path: &Path) -> Result<String, DatasetError> {
    std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_dataset(
    path: &Path,
    format: DatasetFormat,
    mapping: &ColumnMapping,
) -> Result<Dataset, DatasetError> {
    let text = read_text(path)?;
    parse_dataset(&text, format, mapping, &path.display().to_string())
}

/// Parses dataset text already in memory; `source` labels the provenance.
pub fn parse_dataset(
    text: &str,
    format: DatasetFormat,
    mapping: &ColumnMapping,
    source: &str,
) -> Result<Dataset, DatasetError> {
    mapping.validate()?;
    let records = match format {
        DatasetFormat::Csv => parse_csv(text, mapping)?,
        DatasetFormat::Jsonl => parse_jsonl(text, mapping)?,
    };
    Ok(Dataset {
        records,
        provenance: Provenance {
            source: source.to_string(),
            cutoff_date: mapping.cutoff_date.clone(),
        },
    })
}

fn citation(token: &str, line: usize, column: usize) -> Result<u64, DatasetError> {
    parse_citation(token).map_err(|e| match e {
        IndexError::NegativeCitation(token) => DatasetError::NegativeCitation {
            line,
            column,
            token,
        },
        other => DatasetError::Parse {
            line,
            column,
            message: other.to_string(),
        },
    })
}

/// Accumulates records while enforcing unique, non-empty author ids.
#[derive(Default)]
struct Collector {
    records: Vec<AuthorRecord>,
    seen: HashMap<String, usize>,
}

impl Collector {
    fn insert(
        &mut self,
        author_id: &str,
        citations: Vec<u64>,
        line: usize,
    ) -> Result<(), DatasetError> {
        if let Some(&idx) = self.seen.get(author_id) {
            return Err(DatasetError::DuplicateAuthor {
                author: author_id.to_string(),
                line,
                first_line: self.records[idx].source_line,
            });
        }
        self.seen.insert(author_id.to_string(), self.records.len());
        self.records.push(AuthorRecord {
            author_id: author_id.to_string(),
            citations,
            source_line: line,
        });
        Ok(())
    }

    fn append(&mut self, author_id: &str, count: u64, line: usize) {
        match self.seen.get(author_id) {
            Some(&idx) => self.records[idx].citations.push(count),
            None => {
                self.seen.insert(author_id.to_string(), self.records.len());
                self.records.push(AuthorRecord {
                    author_id: author_id.to_string(),
                    citations: vec![count],
                    source_line: line,
                });
            }
        }
    }
}

fn parse_csv(text: &str, mapping: &ColumnMapping) -> Result<Vec<AuthorRecord>, DatasetError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(mapping.delimiter as u8)
        .has_headers(false)
        .flexible(true)
        .comment(mapping.comment_prefix.map(|c| c as u8))
        .from_reader(text.as_bytes());
    let mut out = Collector::default();
    for (n, result) in reader.records().enumerate() {
        let record = result.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            DatasetError::Parse {
                line,
                column: 0,
                message: e.to_string(),
            }
        })?;
        let line = record.position().map_or(n + 1, |p| p.line() as usize);
        if n < mapping.header_rows {
            continue;
        }
        let id = record.get(mapping.id_column).map(str::trim).unwrap_or("");
        if id.is_empty() {
            return Err(DatasetError::Parse {
                line,
                column: mapping.id_column + 1,
                message: "missing author id".into(),
            });
        }
        match mapping.layout {
            Layout::Wide => {
                let to = mapping.citations_to.unwrap_or(usize::MAX).min(record.len());
                let mut citations = Vec::new();
                for col in mapping.citations_from..to {
                    let field = record[col].trim();
                    if !field.is_empty() {
                        citations.push(citation(field, line, col + 1)?);
                    }
                }
                out.insert(id, citations, line)?;
            }
            Layout::Long => {
                let col = mapping.citation_column;
                let field = record.get(col).map(str::trim).unwrap_or("");
                if field.is_empty() {
                    return Err(DatasetError::Parse {
                        line,
                        column: col + 1,
                        message: "missing citation count".into(),
                    });
                }
                out.append(id, citation(field, line, col + 1)?, line);
            }
        }
    }
    Ok(out.records)
}

fn parse_jsonl(text: &str, mapping: &ColumnMapping) -> Result<Vec<AuthorRecord>, DatasetError> {
    let mut out = Collector::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let parse_err = |message: String| DatasetError::Parse {
            line,
            column: 0,
            message,
        };
        let value: serde_json::Value =
            serde_json::from_str(raw).map_err(|e| DatasetError::Parse {
                line,
                column: e.column(),
                message: e.to_string(),
            })?;
        let id = match value.get(&mapping.author_key) {
            Some(serde_json::Value::String(s)) => s.trim().to_string(),
            Some(serde_json::Value::Number(n)) => n.to_string(),
            _ => {
                return Err(parse_err(format!(
                    "missing string key `{}`",
                    mapping.author_key
                )))
            }
        };
        if id.is_empty() {
            return Err(parse_err("empty author id".into()));
        }
        let items = match value.get(&mapping.citations_key) {
            Some(serde_json::Value::Array(items)) => items,
            None | Some(serde_json::Value::Null) => &Vec::new(),
            _ => {
                return Err(parse_err(format!(
                    "key `{}` is not an array",
                    mapping.citations_key
                )))
            }
        };
        let citations = items
            .iter()
            .enumerate()
            .map(|(i, item)| match item {
                serde_json::Value::Number(n) => citation(&n.to_string(), line, i + 1),
                other => Err(DatasetError::Parse {
                    line,
                    column: i + 1,
                    message: format!("not a number: {other}"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.insert(&id, citations, line)?;
    }
    Ok(out.records)
}

/// Writes the canonical CSV form: `id;c1;c2;...` per author, LF endings.
pub fn write_dataset<W: Write>(d: &Dataset, mut out: W) -> std::io::Result<()> {
    for r in &d.records {
        out.write_all(r.author_id.as_bytes())?;
        for c in &r.citations {
            write!(out, ";{c}")?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn dataset_summary(d: &Dataset) -> DatasetSummary {
    DatasetSummary {
        authors: d.records.len(),
        papers: d.records.iter().map(|r| r.citations.len()).sum(),
        citations: d.records.iter().flat_map(|r| &r.citations).sum(),
    }
}
