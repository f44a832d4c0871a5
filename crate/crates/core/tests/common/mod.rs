#![allow(dead_code)]

use nuindex::CitationVector;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every descending vector of length `0..=max_len` with entries in `0..=max_entry`.
pub fn descending_vectors(max_len: usize, max_entry: u64) -> Vec<CitationVector> {
    fn extend(prefix: &mut Vec<u64>, cap: u64, left: usize, out: &mut Vec<CitationVector>) {
        out.push(CitationVector::from_counts(prefix.clone()));
        if left == 0 {
            return;
        }
        for v in (0..=cap).rev() {
            prefix.push(v);
            extend(prefix, v, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_entry, max_len, &mut out);
    out
}

/// Seeded random vectors with `m <= max_len` and entries `<= max_entry`.
pub fn random_vectors(n: usize, max_len: usize, max_entry: u64, seed: u64) -> Vec<CitationVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let m = rng.gen_range(0..=max_len);
            CitationVector::from_counts((0..m).map(|_| rng.gen_range(0..=max_entry)).collect())
        })
        .collect()
}

pub fn v(c: &[u64]) -> CitationVector {
    CitationVector::from_counts(c.to_vec())
}

pub const NASH: [u64; 8] = [2000, 2000, 1500, 1000, 400, 250, 100, 100];

/// Worked examples: vector, then (h, nu_bar, nu, g, g*).
pub const EXAMPLE_ROWS: [(&[u64], [u64; 5]); 9] = [
    (&[3, 2, 2, 2], [2, 2, 2, 2, 2]),
    (&[12, 3, 1], [2, 3, 3, 3, 4]),
    (&[12, 3, 1, 0], [2, 3, 3, 4, 4]),
    (&[6, 3, 1, 0], [2, 3, 3, 3, 3]),
    (&[5, 3, 2, 1], [2, 2, 2, 3, 3]),
    (&[8, 1, 1], [1, 2, 2, 3, 3]),
    (&[8, 4, 3, 2, 1], [3, 3, 3, 4, 4]),
    (&[18, 18, 1, 1], [2, 4, 6, 4, 6]),
    (&[20, 20, 18, 6, 1, 0], [4, 6, 7, 6, 8]),
];

/// `0, 0.25, ..., 8`.
pub fn quarter_grid() -> Vec<f64> {
    (0..=32).map(|k| k as f64 * 0.25).collect()
}
