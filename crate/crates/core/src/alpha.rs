//! The parametric nu-alpha family and its limit as alpha grows.
//!
//! `nu_alpha` is the largest `j` with `sum_{x_i >= j} x_i^alpha >= j^(alpha+1)`,
//! equivalently `sum_{x_i >= j} (x_i / j)^alpha >= j`. Alpha 0 gives h and
//! alpha 1 gives nu.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{IndexError, Result};
use crate::indexes::count_at_least;
use crate::vector::CitationVector;

/// Sampled `(alpha, nu_alpha)` pairs for one vector, plus the limit value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaCurve {
    pub alphas: Vec<f64>,
    pub values: Vec<u64>,
    pub nu_infinity: u64,
}

impl AlphaCurve {
    pub fn samples(&self) -> impl Iterator<Item = (f64, u64)> + '_ {
        self.alphas.iter().copied().zip(self.values.iter().copied())
    }
}

pub fn validate_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha >= 0.0 {
        Ok(())
    } else {
        Err(IndexError::InvalidAlpha(alpha))
    }
}

/// The nu-alpha index.
///
/// Integer alphas are decided in exact integer arithmetic. Fractional alphas
/// use double precision on the normalized form with a strict `>=`.
pub fn nu_alpha_index(x: &CitationVector, alpha: f64) -> Result<u64> {
    validate_alpha(alpha)?;
    let exponent = (alpha.fract() == 0.0 && alpha <= u32::MAX as f64).then_some(alpha as u32);
    let mut nu = 0;
    while nu < x.top() && condition_holds(x, nu + 1, alpha, exponent) {
        nu += 1;
    }
    Ok(nu)
}

fn condition_holds(x: &CitationVector, j: u64, alpha: f64, exponent: Option<u32>) -> bool {
    let n = count_at_least(x, j);
    if n == 0 {
        return false;
    }
    // every qualifying term is at least 1
    if n as u64 >= j {
        return true;
    }
    let qualifying = &x.counts()[..n];
    let top_log = alpha * (x.top() as f64 / j as f64).ln();
    let rhs_log = (j as f64).ln();
    match exponent {
        Some(a) => {
            // the top term alone clears j with room to spare
            if top_log > rhs_log * (1.0 + 1e-9) + 1e-9 {
                return true;
            }
            exact_integer_condition(qualifying, j, a)
        }
        None => {
            if top_log > rhs_log {
                return true;
            }
            let jf = j as f64;
            let sum: f64 = qualifying
                .iter()
                .map(|&c| (c as f64 / jf).powf(alpha))
                .sum();
            sum >= jf
        }
    }
}

/// `sum x_i^a >= j^(a+1)` over the qualifying counts, exactly.
fn exact_integer_condition(qualifying: &[u64], j: u64, a: u32) -> bool {
    let small = || -> Option<bool> {
        let rhs = (j as u128).checked_pow(a.checked_add(1)?)?;
        let mut sum = 0u128;
        for &c in qualifying {
            sum = sum.checked_add((c as u128).checked_pow(a)?)?;
            if sum >= rhs {
                return Some(true);
            }
        }
        Some(false)
    };
    if let Some(answer) = small() {
        return answer;
    }
    let rhs = BigUint::from(j).pow(a + 1);
    let mut sum = BigUint::from(0u32);
    for &c in qualifying {
        sum += BigUint::from(c).pow(a);
        if sum >= rhs {
            return true;
        }
    }
    false
}

/// Limit of nu-alpha as alpha grows without bound.
///
/// With `l1` the multiplicity of the top citation `x_1`, this is `x_1 - 1`
/// when `l1 < x_1` and `x_1` otherwise.
pub fn nu_infinity_index(x: &CitationVector) -> u64 {
    let top = x.top();
    if top == 0 {
        return 0;
    }
    let multiplicity = count_at_least(x, top) as u64;
    if multiplicity < top {
        top - 1
    } else {
        top
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexes::{h_index, nu_index};

    fn v(c: &[u64]) -> CitationVector {
        CitationVector::from_counts(c.to_vec())
    }

    #[test]
    fn nash_half() {
        let nash = v(&[2000, 2000, 1500, 1000, 400, 250, 100, 100]);
        assert_eq!(nu_alpha_index(&nash, 0.5), Ok(35));
    }

    #[test]
    fn endpoints_match_h_and_nu() {
        for c in [
            &[12, 3, 1][..],
            &[18, 18, 1, 1],
            &[20, 20, 18, 6, 1, 0],
            &[9, 7, 1],
        ] {
            let x = v(c);
            assert_eq!(nu_alpha_index(&x, 0.0).unwrap(), h_index(&x));
            assert_eq!(nu_alpha_index(&x, 1.0).unwrap(), nu_index(&x));
        }
    }

    #[test]
    fn invalid_alpha() {
        let x = v(&[3, 2, 1]);
        assert!(matches!(
            nu_alpha_index(&x, -0.5),
            Err(IndexError::InvalidAlpha(_))
        ));
        assert!(nu_alpha_index(&x, f64::NAN).is_err());
        assert!(nu_alpha_index(&x, f64::INFINITY).is_err());
    }

    #[test]
    fn nu_infinity_cases() {
        assert_eq!(nu_infinity_index(&v(&[5, 3, 2, 1])), 4);
        assert_eq!(nu_infinity_index(&v(&[2, 2])), 2);
        assert_eq!(nu_infinity_index(&v(&[0, 0])), 0);
        assert_eq!(nu_infinity_index(&v(&[])), 0);
        let x = v(&[3, 2, 1]);
        assert_eq!(nu_alpha_index(&x, 64.0).unwrap(), nu_infinity_index(&x));
        assert_eq!(nu_infinity_index(&x), 2);
    }

    #[test]
    fn exact_path_handles_huge_powers() {
        // 20^64 does not fit in u128; the tie at j = x_1 needs the big path.
        let x = v(&[20; 20]);
        assert_eq!(nu_alpha_index(&x, 64.0), Ok(20));
        let x = v(&[20; 19]);
        assert_eq!(nu_alpha_index(&x, 64.0), Ok(19));
        assert!(exact_integer_condition(&[20; 20], 20, 64));
        assert!(!exact_integer_condition(&[20; 19], 20, 64));
    }

    #[test]
    fn zero_vector_any_alpha() {
        for a in [0.0, 0.3, 1.0, 7.5] {
            assert_eq!(nu_alpha_index(&v(&[0, 0, 0]), a), Ok(0));
        }
    }
}
