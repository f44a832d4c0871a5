//! The h, g, g*, nu and tempered-nu indexes.
//!
//! Every index is the largest integer satisfying a feasibility condition whose
//! left side is non-increasing and whose right side is strictly increasing, so
//! the feasible set is a prefix `1..=v`. Each maximum is found by an ascending
//! scan that stops at the first failure; an empty feasible set gives 0.

use serde::Serialize;

use crate::error::{IndexError, Result};
use crate::vector::CitationVector;

/// All indexes of one citation vector, plus `m` and `S_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub h: u64,
    pub g: u64,
    pub g_star: u64,
    pub nu: u64,
    pub nu_bar: u64,
    pub m: u64,
    pub total_citations: u64,
}

impl IndexReport {
    /// Checks `h <= nu <= g*`, `h <= nu_bar <= g <= g*` and the `m` caps.
    pub fn is_consistent(&self) -> bool {
        self.h <= self.nu
            && self.nu <= self.g_star
            && self.h <= self.nu_bar
            && self.nu_bar <= self.g
            && self.g <= self.g_star
            && self.h <= self.m
            && self.g <= self.m
            && self.nu_bar == self.nu.min(self.m)
    }
}

/// `S_1, ..., S_m`.
pub fn prefix_sums(x: &CitationVector) -> Vec<u64> {
    x.counts()
        .iter()
        .scan(0u64, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect()
}

/// Number of papers with at least `j` citations.
pub fn m_star(x: &CitationVector, j: u64) -> Result<usize> {
    if j < 1 {
        return Err(IndexError::InvalidThreshold(j));
    }
    Ok(count_at_least(x, j))
}

pub(crate) fn count_at_least(x: &CitationVector, j: u64) -> usize {
    x.counts().partition_point(|&c| c >= j)
}

fn square(v: u64) -> u128 {
    let v = v as u128;
    v * v
}

/// Largest `j` with at least `j` papers cited at least `j` times each.
pub fn h_index(x: &CitationVector) -> u64 {
    let m = x.len() as u64;
    let mut h = 0;
    while h < m && count_at_least(x, h + 1) as u64 > h {
        h += 1;
    }
    h
}

/// Largest `k <= m` whose top-`k` papers hold at least `k^2` citations.
pub fn g_index(x: &CitationVector) -> u64 {
    let mut g = 0;
    let mut sum = 0u128;
    for (k, &c) in x.counts().iter().enumerate() {
        sum += c as u128;
        if sum < square(k as u64 + 1) {
            break;
        }
        g = k as u64 + 1;
    }
    g
}

/// The g-index with the `k <= m` cap lifted by padding with zeros.
///
/// When `S_m >= m^2` the answer is the exact integer square root of `S_m`,
/// otherwise it coincides with [`g_index`].
pub fn g_star_index(x: &CitationVector) -> u64 {
    let total = x.total();
    if total as u128 >= square(x.len() as u64) {
        total.isqrt()
    } else {
        g_index(x)
    }
}

/// Largest `j` such that papers cited at least `j` times hold at least `j^2`
/// citations in total. Can exceed `m`.
pub fn nu_index(x: &CitationVector) -> u64 {
    let sums = prefix_sums(x);
    let tail = |j: u64| -> u128 {
        match count_at_least(x, j) {
            0 => 0,
            n => sums[n - 1] as u128,
        }
    };
    let bound = x.top().min(x.total().isqrt());
    let mut nu = 0;
    while nu < bound && tail(nu + 1) >= square(nu + 1) {
        nu += 1;
    }
    nu
}

/// The nu-index capped at the paper count.
pub fn nu_bar_index(x: &CitationVector) -> u64 {
    nu_index(x).min(x.len() as u64)
}

pub fn full_report(x: &CitationVector) -> IndexReport {
    IndexReport {
        h: h_index(x),
        g: g_index(x),
        g_star: g_star_index(x),
        nu: nu_index(x),
        nu_bar: nu_bar_index(x),
        m: x.len() as u64,
        total_citations: x.total(),
    }
}
