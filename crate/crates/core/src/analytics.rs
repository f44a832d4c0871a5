//! Batch index computation, ranking, alpha curves and correlation matrices.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::alpha::{nu_alpha_index, nu_infinity_index, validate_alpha, AlphaCurve};
use crate::dataset::Dataset;
use crate::error::IndexError;
use crate::indexes::full_report;
use crate::vector::CitationVector;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticsError {
    #[error("need at least 2 authors with papers for correlations, have {usable}")]
    InsufficientData { usable: usize },
    #[error("unknown correlation method `{0}` (expected pearson or spearman)")]
    UnknownMethod(String),
}

/// Indexes of one author, raw and divided by the paper count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuthorIndexRow {
    pub author_id: String,
    pub m: u64,
    pub total_citations: u64,
    pub h: u64,
    pub nu: u64,
    pub nu_bar: u64,
    pub g: u64,
    pub g_star: u64,
    pub h_m: f64,
    pub nu_m: f64,
    pub nu_bar_m: f64,
    pub g_m: f64,
    pub g_star_m: f64,
    /// False when `m = 0`; the ratios above are then reported as 0.
    pub normalized: bool,
}

impl AuthorIndexRow {
    pub fn from_vector(author_id: &str, x: &CitationVector) -> Self {
        let r = full_report(x);
        let ratio = |v: u64| if r.m == 0 { 0.0 } else { v as f64 / r.m as f64 };
        Self {
            author_id: author_id.to_string(),
            m: r.m,
            total_citations: r.total_citations,
            h: r.h,
            nu: r.nu,
            nu_bar: r.nu_bar,
            g: r.g,
            g_star: r.g_star,
            h_m: ratio(r.h),
            nu_m: ratio(r.nu),
            nu_bar_m: ratio(r.nu_bar),
            g_m: ratio(r.g),
            g_star_m: ratio(r.g_star),
            normalized: r.m > 0,
        }
    }

    pub fn value(&self, column: Column) -> u64 {
        match column {
            Column::H => self.h,
            Column::Nu => self.nu,
            Column::NuBar => self.nu_bar,
            Column::G => self.g,
            Column::GStar => self.g_star,
            Column::M => self.m,
        }
    }
}

/// One row per author, in dataset order.
pub fn compute_rows(d: &Dataset) -> Vec<AuthorIndexRow> {
    d.records
        .par_iter()
        .map(|r| AuthorIndexRow::from_vector(&r.author_id, &r.vector()))
        .collect()
}

/// Ascending by `h/m`, ties broken by author id.
pub fn rank_rows(rows: &[AuthorIndexRow]) -> Vec<AuthorIndexRow> {
    let mut ranked = rows.to_vec();
    ranked.sort_by(|a, b| {
        a.h_m
            .total_cmp(&b.h_m)
            .then_with(|| a.author_id.cmp(&b.author_id))
    });
    ranked
}

pub fn alpha_curve(x: &CitationVector, alphas: &[f64]) -> Result<AlphaCurve, IndexError> {
    for &a in alphas {
        validate_alpha(a)?;
    }
    if alphas.windows(2).any(|w| w[1] < w[0]) {
        return Err(IndexError::UnsortedAlphas);
    }
    let values = alphas
        .iter()
        .map(|&a| nu_alpha_index(x, a))
        .collect::<Result<_, _>>()?;
    Ok(AlphaCurve {
        alphas: alphas.to_vec(),
        values,
        nu_infinity: nu_infinity_index(x),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Column {
    H,
    Nu,
    NuBar,
    G,
    GStar,
    M,
}

impl Column {
    pub const ALL: [Column; 6] = [
        Self::H,
        Self::Nu,
        Self::NuBar,
        Self::G,
        Self::GStar,
        Self::M,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Self::H => "h",
            Self::Nu => "nu",
            Self::NuBar => "nu.bar",
            Self::G => "g",
            Self::GStar => "g.star",
            Self::M => "m",
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrelationMethod {
    #[default]
    Pearson,
    Spearman,
}

impl FromStr for CorrelationMethod {
    type Err = AnalyticsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pearson" => Ok(Self::Pearson),
            "spearman" => Ok(Self::Spearman),
            other => Err(AnalyticsError::UnknownMethod(other.to_string())),
        }
    }
}

/// Symmetric correlation matrix over [`Column::ALL`].
///
/// Entries touching a zero-variance column are NaN and that column is listed
/// in `zero_variance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationMatrix {
    pub method: CorrelationMethod,
    pub labels: Vec<Column>,
    pub values: Vec<Vec<f64>>,
    pub zero_variance: Vec<Column>,
    pub rows_used: usize,
    /// Authors with no papers, left out because their ratios are undefined.
    pub rows_excluded: usize,
}

impl CorrelationMatrix {
    pub fn get(&self, a: Column, b: Column) -> f64 {
        let idx = |c| {
            self.labels
                .iter()
                .position(|&l| l == c)
                .expect("column present")
        };
        self.values[idx(a)][idx(b)]
    }

    pub fn is_degenerate(&self) -> bool {
        !self.zero_variance.is_empty()
    }
}

pub fn correlation_matrix(
    rows: &[AuthorIndexRow],
    method: CorrelationMethod,
) -> Result<CorrelationMatrix, AnalyticsError> {
    let usable: Vec<&AuthorIndexRow> = rows.iter().filter(|r| r.m > 0).collect();
    if usable.len() < 2 {
        return Err(AnalyticsError::InsufficientData {
            usable: usable.len(),
        });
    }
    let columns: Vec<Vec<f64>> = Column::ALL
        .iter()
        .map(|&c| {
            let raw: Vec<f64> = usable.iter().map(|r| r.value(c) as f64).collect();
            match method {
                CorrelationMethod::Pearson => raw,
                CorrelationMethod::Spearman => average_ranks(&raw),
            }
        })
        .collect();
    let centered: Vec<Option<Vec<f64>>> = columns.iter().map(|c| center(c)).collect();
    let n = Column::ALL.len();
    let mut values = vec![vec![f64::NAN; n]; n];
    for i in 0..n {
        for j in i..n {
            let r = match (&centered[i], &centered[j]) {
                (Some(_), Some(_)) if i == j => 1.0,
                (Some(a), Some(b)) => pearson_centered(a, b),
                _ => f64::NAN,
            };
            values[i][j] = r;
            values[j][i] = r;
        }
    }
    Ok(CorrelationMatrix {
        method,
        labels: Column::ALL.to_vec(),
        values,
        zero_variance: Column::ALL
            .iter()
            .zip(&centered)
            .filter(|(_, c)| c.is_none())
            .map(|(&l, _)| l)
            .collect(),
        rows_used: usable.len(),
        rows_excluded: rows.len() - usable.len(),
    })
}

/// Deviations from the mean scaled to unit norm; `None` for constant data.
fn center(values: &[f64]) -> Option<Vec<f64>> {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let dev: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let norm = dev.iter().map(|d| d * d).sum::<f64>().sqrt();
    (norm > 0.0).then(|| dev.iter().map(|d| d / norm).collect())
}

fn pearson_centered(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .sum::<f64>()
        .clamp(-1.0, 1.0)
}

/// 1-based ranks with ties sharing their average rank.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let avg = (start + end + 1) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = avg;
        }
        start = end;
    }
    ranks
}
