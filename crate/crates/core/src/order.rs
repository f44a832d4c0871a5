//! Component-wise dominance and weak majorization between citation vectors.

use crate::vector::CitationVector;

/// Two vectors zero-padded to a common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedPair {
    pub left: Vec<u64>,
    pub right: Vec<u64>,
}

impl PaddedPair {
    pub fn new(x: &CitationVector, y: &CitationVector) -> Self {
        let len = x.len().max(y.len());
        let pad = |v: &CitationVector| {
            let mut c = v.counts().to_vec();
            c.resize(len, 0);
            c
        };
        Self {
            left: pad(x),
            right: pad(y),
        }
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }
}

/// `x ⪯ y`: after padding, every component of `x` is at most that of `y`.
pub fn dominates(x: &CitationVector, y: &CitationVector) -> bool {
    let p = PaddedPair::new(x, y);
    p.left.iter().zip(&p.right).all(|(a, b)| a <= b)
}

/// `x ≺_w y`: after padding, every prefix sum of `x` is at most that of `y`.
pub fn weakly_majorized(x: &CitationVector, y: &CitationVector) -> bool {
    let p = PaddedPair::new(x, y);
    let (mut sx, mut sy) = (0u128, 0u128);
    p.left.iter().zip(&p.right).all(|(&a, &b)| {
        sx += a as u128;
        sy += b as u128;
        sx <= sy
    })
}
