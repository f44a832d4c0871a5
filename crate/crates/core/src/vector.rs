//! Validated citation vectors.

use serde::Serialize;

use crate::error::{IndexError, Result};

/// Per-paper citation counts of one author, sorted descending.
///
/// Input order is irrelevant: every constructor sorts, so `counts()[0]` is
/// always the top citation and `len()` is the paper count `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct CitationVector {
    counts: Vec<u64>,
}

impl CitationVector {
    /// Builds a vector from already non-negative counts in any order.
    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        counts.sort_unstable_by(|a, b| b.cmp(a));
        Self { counts }
    }

    /// Validates signed raw counts, rejecting negatives.
    pub fn from_raw(raw: &[i64]) -> Result<Self> {
        let counts = raw
            .iter()
            .map(|&c| u64::try_from(c).map_err(|_| IndexError::NegativeCitation(c.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_counts(counts))
    }

    /// Parses textual tokens (as found in files or on the command line).
    pub fn parse_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let counts = tokens
            .iter()
            .map(|t| parse_citation(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_counts(counts))
    }

    pub fn zeros(m: usize) -> Self {
        Self { counts: vec![0; m] }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of papers `m`.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Top citation `x_1`, or 0 for an empty vector.
    pub fn top(&self) -> u64 {
        self.counts.first().copied().unwrap_or(0)
    }

    /// Total citations `S_m`.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Sum of the `k` largest counts, with `S_0 = 0` and `S_k = S_m` for `k > m`.
    pub fn partial_sum(&self, k: usize) -> u64 {
        self.counts.iter().take(k).sum()
    }

    /// Returns a copy with `extra` fictitious zero-citation papers appended.
    pub fn with_zeros(&self, extra: usize) -> Self {
        let mut counts = self.counts.clone();
        counts.resize(self.counts.len() + extra, 0);
        Self { counts }
    }
}

impl From<Vec<u64>> for CitationVector {
    fn from(counts: Vec<u64>) -> Self {
        Self::from_counts(counts)
    }
}

/// Parses one citation count. Integral floats such as `3.0` are accepted.
pub fn parse_citation(token: &str) -> Result<u64> {
    let token = token.trim();
    if let Ok(v) = token.parse::<i64>() {
        return u64::try_from(v).map_err(|_| IndexError::NegativeCitation(token.to_string()));
    }
    if let Ok(v) = token.parse::<u64>() {
        return Ok(v);
    }
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() && v < 0.0 => Err(IndexError::NegativeCitation(token.to_string())),
        Ok(v) if v.is_finite() && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        Ok(_) => Err(IndexError::NonIntegerCitation(token.to_string())),
        Err(_) => Err(IndexError::InvalidToken(token.to_string())),
    }
}
