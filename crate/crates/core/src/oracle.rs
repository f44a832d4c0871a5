//! Definition-literal reference implementations used as ground truth.
//!
//! Each index is computed by testing every candidate from 1 up to
//! `m + x_1 + 1` against its defining inequality and keeping the largest
//! success. There is no early exit and no closed form, so `g*` here never
//! touches a square root. The bound is safe: h, nu and nu-alpha need a paper
//! with at least `j` citations (`j <= x_1`), g and tempered nu are capped at
//! `m`, and `g* <= sqrt(S_m) <= sqrt(m * x_1) <= (m + x_1) / 2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{IndexError, Result};
use crate::vector::CitationVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexName {
    H,
    G,
    GStar,
    Nu,
    NuBar,
    NuAlpha,
}

impl IndexName {
    pub const ALL: [IndexName; 6] = [
        Self::H,
        Self::G,
        Self::GStar,
        Self::Nu,
        Self::NuBar,
        Self::NuAlpha,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::H => "h",
            Self::G => "g",
            Self::GStar => "g_star",
            Self::Nu => "nu",
            Self::NuBar => "nu_bar",
            Self::NuAlpha => "nu_alpha",
        }
    }
}

impl fmt::Display for IndexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexName {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" => Ok(Self::H),
            "g" => Ok(Self::G),
            "g_star" | "g*" | "g.star" => Ok(Self::GStar),
            "nu" => Ok(Self::Nu),
            "nu_bar" | "nu.bar" => Ok(Self::NuBar),
            "nu_alpha" | "nu.alpha" => Ok(Self::NuAlpha),
            other => Err(IndexError::UnknownIndexName(other.to_string())),
        }
    }
}

/// Evaluates one index by exhaustive candidate enumeration.
pub fn oracle_index(x: &CitationVector, which: IndexName, alpha: Option<f64>) -> Result<u64> {
    match (which, alpha) {
        (IndexName::NuAlpha, None) => return Err(IndexError::MissingAlpha(which.to_string())),
        (IndexName::NuAlpha, Some(a)) if !(a.is_finite() && a >= 0.0) => {
            return Err(IndexError::InvalidAlpha(a))
        }
        (IndexName::NuAlpha, Some(_)) => {}
        (_, Some(_)) => return Err(IndexError::UnexpectedAlpha(which.to_string())),
        (_, None) => {}
    }
    let c = x.counts();
    let m = c.len() as u64;
    let bound = candidate_bound(x);
    let best = |cap: u64, feasible: &dyn Fn(u64) -> bool| {
        (1..=cap).filter(|&j| feasible(j)).max().unwrap_or(0)
    };
    let value = match which {
        IndexName::H => best(bound, &|j| {
            c.iter().filter(|&&xi| xi >= j).count() as u128 >= j as u128
        }),
        IndexName::G => best(m.min(bound), &|k| top_sum(c, k) >= sq(k)),
        IndexName::GStar => best(bound, &|k| top_sum(c, k) >= sq(k)),
        IndexName::Nu => best(bound, &|j| tail_sum(c, j) >= sq(j)),
        IndexName::NuBar => best(m.min(bound), &|j| tail_sum(c, j) >= sq(j)),
        IndexName::NuAlpha => {
            let a = alpha.unwrap_or_default();
            if a.fract() == 0.0 && a <= u32::MAX as f64 {
                best(bound, &|j| power_sum_exceeds(c, j, a as u32))
            } else {
                best(bound, &|j| log_ratio(c, j, a) >= 0.0)
            }
        }
    };
    Ok(value)
}

/// True when, for every candidate `j` with at least one qualifying paper,
/// `sum_{x_i >= j} x_i^alpha` differs from `j^(alpha+1)` by more than the
/// relative `margin`. Double-precision comparisons are only trusted there.
pub fn clear_of_ties(x: &CitationVector, alpha: f64, margin: f64) -> bool {
    let c = x.counts();
    (1..=candidate_bound(x))
        .filter(|&j| c.iter().any(|&xi| xi >= j))
        .all(|j| log_ratio(c, j, alpha).exp_m1().abs() > margin)
}

fn candidate_bound(x: &CitationVector) -> u64 {
    x.len() as u64 + x.top() + 1
}

fn sq(v: u64) -> u128 {
    v as u128 * v as u128
}

/// `x'_1 + ... + x'_k` over the zero-extended vector.
fn top_sum(c: &[u64], k: u64) -> u128 {
    c.iter()
        .enumerate()
        .filter(|(i, _)| (*i as u64) < k)
        .map(|(_, &xi)| xi as u128)
        .sum()
}

/// `sum_i x_i 1{x_i >= j}`.
fn tail_sum(c: &[u64], j: u64) -> u128 {
    c.iter().filter(|&&xi| xi >= j).map(|&xi| xi as u128).sum()
}

/// `sum_i x_i^a 1{x_i >= j} >= j^(a+1)` in exact arithmetic.
fn power_sum_exceeds(c: &[u64], j: u64, a: u32) -> bool {
    let fast = || -> Option<bool> {
        let rhs = (j as u128).checked_pow(a.checked_add(1)?)?;
        let mut lhs = 0u128;
        for &xi in c.iter().filter(|&&xi| xi >= j) {
            lhs = lhs.checked_add((xi as u128).checked_pow(a)?)?;
        }
        Some(lhs >= rhs)
    };
    fast().unwrap_or_else(|| {
        let lhs: BigUint = c
            .iter()
            .filter(|&&xi| xi >= j)
            .map(|&xi| BigUint::from(xi).pow(a))
            .sum();
        lhs >= BigUint::from(j).pow(a + 1)
    })
}

/// `ln(sum_{x_i >= j} x_i^a) - (a + 1) ln j`, via log-sum-exp; `-inf` when
/// no paper qualifies.
fn log_ratio(c: &[u64], j: u64, a: f64) -> f64 {
    let logs: Vec<f64> = c
        .iter()
        .filter(|&&xi| xi >= j)
        .map(|&xi| a * (xi as f64).ln())
        .collect();
    let Some(peak) = logs.iter().copied().reduce(f64::max) else {
        return f64::NEG_INFINITY;
    };
    let lse = peak + logs.iter().map(|l| (l - peak).exp()).sum::<f64>().ln();
    lse - (a + 1.0) * (j as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[u64]) -> CitationVector {
        CitationVector::from_counts(c.to_vec())
    }

    #[test]
    fn examples() {
        assert_eq!(oracle_index(&v(&[12, 3, 1]), IndexName::H, None), Ok(2));
        assert_eq!(oracle_index(&v(&[5, 4]), IndexName::GStar, None), Ok(3));
        assert_eq!(oracle_index(&v(&[6, 3, 1, 0]), IndexName::Nu, None), Ok(3));
    }

    #[test]
    fn nash() {
        let x = v(&[2000, 2000, 1500, 1000, 400, 250, 100, 100]);
        assert_eq!(oracle_index(&x, IndexName::GStar, None), Ok(85));
        assert_eq!(oracle_index(&x, IndexName::G, None), Ok(8));
        assert_eq!(oracle_index(&x, IndexName::Nu, None), Ok(85));
        assert_eq!(oracle_index(&x, IndexName::NuAlpha, Some(0.5)), Ok(35));
        assert!(clear_of_ties(&x, 0.5, 1e-6));
    }

    #[test]
    fn names_and_alpha_contract() {
        assert_eq!("g*".parse::<IndexName>(), Ok(IndexName::GStar));
        assert_eq!("nu.bar".parse::<IndexName>(), Ok(IndexName::NuBar));
        assert_eq!(
            "q".parse::<IndexName>(),
            Err(IndexError::UnknownIndexName("q".into()))
        );
        let x = v(&[3, 2, 1]);
        assert!(matches!(
            oracle_index(&x, IndexName::NuAlpha, Some(-1.0)),
            Err(IndexError::InvalidAlpha(_))
        ));
        assert!(oracle_index(&x, IndexName::NuAlpha, None).is_err());
        assert!(oracle_index(&x, IndexName::H, Some(1.0)).is_err());
    }

    #[test]
    fn zero_and_empty() {
        for name in IndexName::ALL {
            let alpha = (name == IndexName::NuAlpha).then_some(1.5);
            assert_eq!(oracle_index(&v(&[]), name, alpha), Ok(0));
            assert_eq!(oracle_index(&v(&[0, 0, 0]), name, alpha), Ok(0));
        }
    }
}
