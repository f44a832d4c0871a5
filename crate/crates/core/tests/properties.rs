mod common;

use common::{descending_vectors, quarter_grid, v};
use nuindex::oracle::{oracle_index, IndexName};
use nuindex::order::dominates;
use nuindex::*;
use proptest::prelude::*;

fn vector(max_len: usize, max_entry: u64) -> impl Strategy<Value = CitationVector> {
    prop::collection::vec(0..=max_entry, 0..=max_len).prop_map(CitationVector::from_counts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn ordering_chain(x in vector(40, 5000)) {
        let r = full_report(&x);
        prop_assert!(r.is_consistent(), "{r:?}");
    }

    #[test]
    fn zero_append(x in vector(30, 500)) {
        let y = x.with_zeros(1);
        prop_assert_eq!(h_index(&x), h_index(&y));
        prop_assert_eq!(nu_index(&x), nu_index(&y));
        prop_assert_eq!(g_star_index(&x), g_star_index(&y));
        prop_assert!(g_index(&x) <= g_index(&y));
    }

    #[test]
    fn lemma_prefix_sums_stay_below_squares(x in vector(30, 60)) {
        let big = x.len() + 100;
        let mut failed = false;
        for k in 1..=big {
            let below = (x.partial_sum(k) as u128) < (k as u128 * k as u128);
            prop_assert!(!failed || below, "S_k >= k^2 after a failure at k = {k}");
            failed |= below;
        }
    }

    #[test]
    fn g_equals_m_iff_total_reaches_m_squared(x in vector(30, 60)) {
        let m = x.len() as u64;
        prop_assert_eq!(g_index(&x) == m, x.total() as u128 >= (m as u128) * (m as u128));
    }

    #[test]
    fn g_star_closed_form(x in vector(30, 2000)) {
        let m = x.len() as u128;
        let expected = if x.total() as u128 >= m * m { x.total().isqrt() } else { g_index(&x) };
        prop_assert_eq!(g_star_index(&x), expected);
    }

    #[test]
    fn dominance_monotone(x in vector(20, 300), bumps in prop::collection::vec(0u64..50, 0..25)) {
        let mut c = x.counts().to_vec();
        c.resize(c.len().max(bumps.len()), 0);
        c.iter_mut().zip(&bumps).for_each(|(ci, b)| *ci += b);
        let y = CitationVector::from_counts(c);
        prop_assert!(dominates(&x, &y));
        let (rx, ry) = (full_report(&x), full_report(&y));
        prop_assert!(rx.h <= ry.h && rx.g <= ry.g && rx.g_star <= ry.g_star);
        prop_assert!(rx.nu <= ry.nu && rx.nu_bar <= ry.nu_bar);
        prop_assert!(nu_alpha_index(&x, 1.5).unwrap() <= nu_alpha_index(&y, 1.5).unwrap());
    }

    #[test]
    fn nu_alpha_non_decreasing(x in vector(15, 400), a in 0.0f64..6.0, d in 0.0f64..3.0) {
        prop_assert!(nu_alpha_index(&x, a).unwrap() <= nu_alpha_index(&x, a + d).unwrap());
    }

    #[test]
    fn matches_oracle(x in vector(25, 300)) {
        let r = full_report(&x);
        prop_assert_eq!(r.h, oracle_index(&x, IndexName::H, None).unwrap());
        prop_assert_eq!(r.g, oracle_index(&x, IndexName::G, None).unwrap());
        prop_assert_eq!(r.g_star, oracle_index(&x, IndexName::GStar, None).unwrap());
        prop_assert_eq!(r.nu, oracle_index(&x, IndexName::Nu, None).unwrap());
        prop_assert_eq!(r.nu_bar, oracle_index(&x, IndexName::NuBar, None).unwrap());
        for a in [0.0, 1.0, 2.0, 5.0] {
            prop_assert_eq!(nu_alpha_index(&x, a).unwrap(), oracle_index(&x, IndexName::NuAlpha, Some(a)).unwrap());
        }
    }

    #[test]
    fn fractional_alpha_matches_oracle_away_from_ties(x in vector(12, 200), a in 0.05f64..4.0) {
        prop_assume!(nuindex::oracle::clear_of_ties(&x, a, 1e-6));
        prop_assert_eq!(nu_alpha_index(&x, a).unwrap(), oracle_index(&x, IndexName::NuAlpha, Some(a)).unwrap());
    }
}

/// Brute-force evaluation of the normalized nu-alpha condition over j = 1..=x_1.
fn brute_nu_alpha(c: &[u64], alpha: f64) -> u64 {
    let top = c.iter().copied().max().unwrap_or(0);
    (1..=top)
        .filter(|&j| {
            c.iter()
                .filter(|&&x| x >= j)
                .map(|&x| (x as f64 / j as f64).powf(alpha))
                .sum::<f64>()
                >= j as f64
        })
        .max()
        .unwrap_or(0)
}

#[test]
fn alpha_grid_on_table_row() {
    let grid = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0];
    let brute: Vec<u64> = grid
        .iter()
        .map(|&a| brute_nu_alpha(&[12, 3, 1], a))
        .collect();
    assert_eq!(brute, vec![2, 3, 3, 5, 7, 9]);
    let x = v(&[12, 3, 1]);
    let core: Vec<u64> = grid
        .iter()
        .map(|&a| nu_alpha_index(&x, a).unwrap())
        .collect();
    assert_eq!(core, brute);
}

#[test]
fn alpha_grid_on_nine_seven_one() {
    let x = v(&[9, 7, 1]);
    let values: Vec<u64> = (0..=16)
        .map(|k| nu_alpha_index(&x, k as f64 * 0.25).unwrap())
        .collect();
    let brute: Vec<u64> = (0..=16)
        .map(|k| brute_nu_alpha(&[9, 7, 1], k as f64 * 0.25))
        .collect();
    assert_eq!(values, brute);
    assert_eq!(values[0], 2);
    assert_eq!(values[4], 4);
}

#[test]
fn theorem_three_on_small_set() {
    let grid = quarter_grid();
    for x in descending_vectors(4, 9) {
        let vals: Vec<u64> = grid
            .iter()
            .map(|&a| nu_alpha_index(&x, a).unwrap())
            .collect();
        assert!(vals.windows(2).all(|w| w[0] <= w[1]), "{x:?}: {vals:?}");
        assert_eq!(vals[0], h_index(&x));
        assert_eq!(vals[4], nu_index(&x));
    }
}

#[test]
fn enumeration_size() {
    // multisets of size <= 5 from 13 values
    assert_eq!(
        descending_vectors(5, 12).len(),
        1 + 13 + 91 + 455 + 1820 + 6188
    );
}

#[test]
fn tempered_nu_grows_with_appended_zeros() {
    // The cap at m moves with the paper count, so like g it is not zero-insensitive.
    assert_eq!(nu_bar_index(&v(&[12])), 1);
    assert_eq!(nu_bar_index(&v(&[12, 0])), 2);
    for x in descending_vectors(4, 10) {
        assert!(nu_bar_index(&x) <= nu_bar_index(&x.with_zeros(1)));
        assert_eq!(nu_bar_index(&x.with_zeros(x.top() as usize)), nu_index(&x));
    }
}
