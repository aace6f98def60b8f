//! Exact q-polynomial sequences from the descent recurrences. These scale
//! far beyond brute-force range and serve as the trusted ground truth for
//! the generating-function expansions.
//!
//! The recurrences for the "+" subsequences (first letter colored 0) fail
//! at n = 1 as printed: they would give p_1^+ = 2 and g_1^+ = r against
//! the true value 1 in both cases. So n = 1 is seeded explicitly and
//! those recurrences only run from n = 2.

use crate::algebra::{binomial, QPoly};
use crate::formulas::FormulaError;
use num_rational::BigRational;

/// A distribution-polynomial sequence split by the color of the first
/// letter: `total[n] = plus[n] + minus[n]`, and `total[n](1)` is the group
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequenceTriple {
    pub total: Vec<QPoly>,
    pub plus: Vec<QPoly>,
    pub minus: Vec<QPoly>,
}

fn choose(n: i64, k: i64) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

/// Positive-descent polynomials on signed permutations, `n = 0..=n_max`.
///
/// Seeds: p_0 = p_0^+ = 1, p_0^- = 0, p_1^+ = p_1^- = 1. The total
/// recurrence runs from n = 1:
/// `p_n = 2 p_{n-1} + sum_j C(n-1,j-1) p_{j-1} p_{n-j}
///        + sum_j C(n-1,j-1) p_{j-1} (p^-_{n-j} + q p^+_{n-j})`,
/// and the "+" recurrence (its middle sum starting at j = 2) from n = 2.
pub fn p_sequence(n_max: u32) -> PolySequenceTriple {
    let n_max = n_max as usize;
    let q = QPoly::q();
    let mut total = vec![QPoly::one()];
    let mut plus = vec![QPoly::one()];
    let mut minus = vec![QPoly::zero()];

    for n in 1..=n_max {
        let ni = n as i64;
        let mut p = total[n - 1].scale_int(2);
        for j in 1..=n - 1 {
            let c = choose(ni - 1, j as i64 - 1);
            let mixed = &minus[n - j] + &(&q * &plus[n - j]);
            p = &p + &(&total[j - 1] * &total[n - j]).scale(&c);
            p = &p + &(&total[j - 1] * &mixed).scale(&c);
        }
        total.push(p);

        let p_plus = if n == 1 {
            QPoly::one()
        } else {
            let mut acc = plus[n - 1].scale_int(2);
            for j in 2..=n - 1 {
                let c = choose(ni - 1, j as i64 - 1);
                acc = &acc + &(&plus[j - 1] * &total[n - j]).scale(&c);
            }
            for j in 1..=n - 1 {
                let c = choose(ni - 1, j as i64 - 1);
                let mixed = &minus[n - j] + &(&q * &plus[n - j]);
                acc = &acc + &(&plus[j - 1] * &mixed).scale(&c);
            }
            acc
        };
        minus.push(&total[n] - &p_plus);
        plus.push(p_plus);
    }
    PolySequenceTriple { total, plus, minus }
}

/// `(c,d)`-descent polynomials (`c < d`) via the two-term recurrence
/// `A_n = r n A_{n-1} + (q-1) n (n-1) A_{n-2}`, seeded with `A_0 = 1`.
pub fn a_sequence(r: u32, n_max: u32) -> Result<Vec<QPoly>, FormulaError> {
    if r < 2 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the (c,d)-descent recurrence",
            min_r: 2,
            r,
        });
    }
    let n_max = n_max as usize;
    let q_minus_1 = QPoly::from_ints(&[-1, 1]);
    let mut seq = vec![QPoly::one()];
    for n in 1..=n_max {
        let ni = n as i64;
        let mut a = seq[n - 1].scale_int(i64::from(r) * ni);
        if n >= 2 {
            let prev = (&q_minus_1 * &seq[n - 2]).scale_int(ni * (ni - 1));
            a = &a + &prev;
        }
        seq.push(a);
    }
    Ok(seq)
}

/// `(0,0)`-descent polynomials on the r-colored group, `n = 0..=n_max`.
///
/// Seeds: g_0 = g_0^+ = 1, g_0^- = 0, g_1^+ = 1, g_1^- = r - 1. The total
/// recurrence runs from n = 1:
/// `g_n = r g_{n-1} + (r-1) sum_j C(n-1,j-1) g_{j-1} g_{n-j}
///        + sum_j C(n-1,j-1) g_{j-1} (g^-_{n-j} + q g^+_{n-j})`,
/// and the "+" recurrence (middle sum from j = 2) from n = 2. At r = 2
/// this coincides with the positive-descent recurrence symbol for symbol,
/// and at r = 1 it generates the Eulerian polynomials.
pub fn g_sequence(r: u32, n_max: u32) -> Result<PolySequenceTriple, FormulaError> {
    if r < 1 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the (0,0)-descent recurrence",
            min_r: 1,
            r,
        });
    }
    let n_max = n_max as usize;
    let q = QPoly::q();
    let ri = i64::from(r);
    let mut total = vec![QPoly::one()];
    let mut plus = vec![QPoly::one()];
    let mut minus = vec![QPoly::zero()];

    for n in 1..=n_max {
        let ni = n as i64;
        let mut g = total[n - 1].scale_int(ri);
        for j in 1..=n - 1 {
            let c = choose(ni - 1, j as i64 - 1);
            let mixed = &minus[n - j] + &(&q * &plus[n - j]);
            g = &g + &(&total[j - 1] * &total[n - j]).scale(&c).scale_int(ri - 1);
            g = &g + &(&total[j - 1] * &mixed).scale(&c);
        }
        total.push(g);

        let g_plus = if n == 1 {
            QPoly::one()
        } else {
            let mut acc = plus[n - 1].scale_int(ri);
            for j in 2..=n - 1 {
                let c = choose(ni - 1, j as i64 - 1);
                acc = &acc + &(&plus[j - 1] * &total[n - j]).scale(&c).scale_int(ri - 1);
            }
            for j in 1..=n - 1 {
                let c = choose(ni - 1, j as i64 - 1);
                let mixed = &minus[n - j] + &(&q * &plus[n - j]);
                acc = &acc + &(&plus[j - 1] * &mixed).scale(&c);
            }
            acc
        };
        minus.push(&total[n] - &g_plus);
        plus.push(g_plus);
    }
    Ok(PolySequenceTriple { total, plus, minus })
}
