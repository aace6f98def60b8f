//! Closed-form descent counts, evaluated verbatim in exact arithmetic.
//!
//! Sign conventions used throughout: out-of-range binomials vanish
//! (including a negative top argument) and `0^0 = 1`. Both are forced by
//! desk checks of the formulas at small sizes.
//!
//! `cc_count` is special: it evaluates the printed `(c,c)`-descent formula
//! faithfully even though that formula disagrees with ground truth for
//! r != 2. Its output is compared, never trusted; see the erratum report.

use crate::algebra::{binomial, factorial, QPoly};
use crate::stats::{block_params, ColoredComposition, StatsError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{formula} requires r >= {min_r}, got r={r}")]
    NeedsMoreColors {
        formula: &'static str,
        min_r: u32,
        r: u32,
    },

    #[error("the composition sum needs n >= 1; the empty word has no block composition")]
    EmptyWord,

    #[error("sum evaluated to {0}, which is not an integer")]
    NonIntegerSum(String),

    #[error(transparent)]
    Stats(#[from] StatsError),
}

fn sign(exp: i64) -> BigInt {
    if exp.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn int_pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// Number of signed permutations of `n` with exactly `m` pn-descents:
/// `n! * C(n+1, n-2m)`.
pub fn pndes_count(n: u64, m: u64) -> BigInt {
    let n = n as i64;
    let m = m as i64;
    factorial(n as u64) * binomial(n + 1, n - 2 * m)
}

/// Number of signed permutations of `n` with exactly `m` positive descents
/// (equivalently negative descents, by the sign-swap bijection): the
/// quadruple alternating sum with the outer index truncated to `0..=n`.
/// Terms beyond `n` vanish under the binomial conventions.
pub fn pdes_count(n: u64, m: u64) -> BigInt {
    let n = n as i64;
    let m = m as i64;
    let mut acc = BigInt::zero();
    for i in 0..=n {
        for j in 0..=i {
            let outer = binomial(n, i - j) * binomial(i, j) * binomial(n - i, m);
            if outer.is_zero() {
                continue;
            }
            let outer = outer * factorial((i - j) as u64);
            for k in 0..=j {
                let term = int_pow(k, (n + j - i) as u32) * binomial(j, k);
                if term.is_zero() {
                    continue;
                }
                acc += sign(i + j + k + n + m) * term * &outer;
            }
        }
    }
    acc
}

/// Number of colored permutations with exactly `m` `(c,d)`-descents,
/// `c < d` (the count does not depend on which pair): the single
/// alternating sum in powers of r. The power of r is evaluated exactly in
/// the rationals and the total is asserted integral.
pub fn cd_count(r: u32, n: u64, m: u64) -> Result<BigInt, FormulaError> {
    if r < 2 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the (c,d)-descent count",
            min_r: 2,
            r,
        });
    }
    let n = n as i64;
    let m = m as i64;
    let r_rat = BigRational::from_integer(BigInt::from(r));
    let mut acc = BigRational::zero();
    for j in 0..=(n - 2 * m).max(-1) {
        let coeff = binomial(m + j, j) * binomial(j, n - 2 * m - j);
        if coeff.is_zero() {
            continue;
        }
        let power = (2 * j + 2 * m - n) as i32;
        let term = BigRational::from_integer(sign(n - j) * coeff) * r_rat.clone().pow(power);
        acc += term;
    }
    acc *= BigRational::from_integer(factorial(n as u64));
    if !acc.is_integer() {
        return Err(FormulaError::NonIntegerSum(acc.to_string()));
    }
    Ok(acc.to_integer())
}

/// The two-case block proposition for `(c,d)`-descent counts, `c < d`.
/// For `m = 0`, the printed `(1-(r-1)^{n+1})/(2-r)` factor is evaluated as
/// the geometric sum so that the removable singularity at r = 2 never
/// divides by zero; `(r-2)^0 = 1` even at r = 2.
pub fn cd_count_blocks(r: u32, n: u64, m: u64) -> Result<BigInt, FormulaError> {
    if r < 2 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the block-count proposition",
            min_r: 2,
            r,
        });
    }
    let n = n as i64;
    let m = m as i64;
    let r_minus_1 = i64::from(r) - 1;
    let r_minus_2 = i64::from(r) - 2;
    let mut acc = BigInt::zero();
    if m == 0 {
        for i in 0..=n {
            acc += int_pow(r_minus_1, i as u32);
        }
    }
    for k in 1..=(n - 1).max(0) {
        for b in 1..=k {
            let choose = binomial(k, b) * binomial(n - k, b) * binomial(b, m.max(0));
            if choose.is_zero() {
                continue;
            }
            // b >= m and b <= n-k here, so both exponents are nonnegative
            acc += choose * int_pow(r_minus_2, (b - m) as u32) * int_pow(r_minus_1, (n - k - b) as u32);
        }
    }
    Ok(factorial(n as u64) * acc)
}

/// All compositions of `n >= 1` into positive parts, in gap-mask order.
pub fn compositions(n: u32) -> impl Iterator<Item = Vec<u32>> {
    assert!((1..=63).contains(&n), "composition generation needs 1 <= n <= 63");
    (0u64..(1u64 << (n - 1))).map(move |mask| {
        let mut parts = Vec::new();
        let mut run = 1u32;
        for gap in 0..n - 1 {
            if mask & (1 << gap) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts
    })
}

/// The full `(c,d)`-descent distribution polynomial as a sum over all `2^n`
/// colored compositions of `n`: each contributes
/// `(q+r-2)^transitions * (r-1)^(n - colored_count - transitions)`,
/// all scaled by `n!`.
pub fn composition_sum_poly(r: u32, n: u64) -> Result<QPoly, FormulaError> {
    if r < 2 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the composition sum",
            min_r: 2,
            r,
        });
    }
    if n == 0 {
        return Err(FormulaError::EmptyWord);
    }
    let n = n as u32;
    let base = QPoly::from_ints(&[i64::from(r) - 2, 1]); // q + r - 2
    let mut acc = QPoly::zero();
    for parts in compositions(n) {
        for first_colored in [true, false] {
            let mu = ColoredComposition::new(parts.clone(), first_colored)?;
            let params = block_params(&mu, n)?;
            let weight = base.pow(params.transitions as usize).scale(
                &BigRational::from_integer(int_pow(
                    i64::from(r) - 1,
                    n - params.colored_count - params.transitions,
                )),
            );
            acc = &acc + &weight;
        }
    }
    Ok(acc.scale(&BigRational::from_integer(factorial(u64::from(n)))))
}

/// The printed `(c,c)`-descent count, evaluated exactly as written. The
/// value is exact but NOT trusted: for r != 2 it disagrees with ground
/// truth, so it is returned as a rational and compared downstream.
pub fn cc_count(r: u32, n: u64, m: u64) -> Result<BigRational, FormulaError> {
    if r < 1 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the (c,c)-descent count",
            min_r: 1,
            r,
        });
    }
    let n = n as i64;
    let m = m as i64;
    let one_minus_r = 1 - i64::from(r);
    let mut acc = BigRational::zero();
    for j in 0..=(n - m).max(-1) {
        let outer = binomial(n - j, m);
        if outer.is_zero() {
            continue;
        }
        let outer = BigRational::from_integer(sign(n + m + j) * outer);
        for i in 0..=j {
            for k in 0..=i {
                let coeff = binomial(j, i) * binomial(i, k);
                if coeff.is_zero() {
                    continue;
                }
                let numer = coeff * int_pow(one_minus_r, (i - k) as u32) * int_pow(k, (n - j + i) as u32);
                if numer.is_zero() {
                    continue;
                }
                let term = BigRational::new(numer, factorial((n - j + i) as u64));
                acc += &outer * term;
            }
        }
    }
    Ok(acc * BigRational::from_integer(factorial(n as u64)))
}

/// The two sides of the r = 2 specialization identity at `(n, m)`: the
/// alternating binomial sum, evaluated exactly in the rationals, and
/// `C(n+1, n-2m)`.
pub fn identity_r2_values(n: u64, m: u64) -> (BigRational, BigInt) {
    let n = n as i64;
    let m = m as i64;
    let two = BigRational::from_integer(BigInt::from(2));
    let mut lhs = BigRational::zero();
    for j in 0..=(n - 2 * m).max(-1) {
        let coeff = binomial(m + j, j) * binomial(j, n - 2 * m - j);
        if coeff.is_zero() {
            continue;
        }
        lhs += BigRational::from_integer(sign(n - j) * coeff)
            * two.clone().pow((2 * j + 2 * m - n) as i32);
    }
    (lhs, binomial(n + 1, n - 2 * m))
}

/// The r = 2 specialization identity: the alternating binomial sum for
/// `(c,d)`-descents collapses to `C(n+1, n-2m)`. Checked exactly.
pub fn identity_r2(n: u64, m: u64) -> bool {
    let (lhs, rhs) = identity_r2_values(n, m);
    lhs == BigRational::from_integer(rhs)
}

/// First `(n, m)` with `n <= n_max`, `m <= n/2` where the identity fails,
/// or `None` when it holds everywhere in range.
pub fn identity_r2_first_failure(n_max: u64) -> Option<(u64, u64)> {
    for n in 0..=n_max {
        for m in 0..=n / 2 {
            if !identity_r2(n, m) {
                return Some((n, m));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(int(v))
    }

    #[test]
    fn pndes_values() {
        assert_eq!(pndes_count(2, 0), int(6));
        assert_eq!(pndes_count(2, 1), int(2));
        assert_eq!(pndes_count(4, 1), int(240));
        assert_eq!(pndes_count(3, 2), int(0));
        assert_eq!(pndes_count(0, 0), int(1));
    }

    #[test]
    fn pdes_values() {
        assert_eq!(pdes_count(0, 0), int(1));
        assert_eq!(pdes_count(1, 0), int(2));
        assert_eq!(pdes_count(2, 0), int(7));
        assert_eq!(pdes_count(2, 1), int(1));
        assert_eq!(pdes_count(3, 2), int(1));
        assert_eq!(pdes_count(3, 0), int(37));
        assert_eq!(pdes_count(3, 1), int(10));
    }

    #[test]
    fn pn_total_is_group_order() {
        for n in 0..=40u64 {
            let total: BigInt = (0..=n).map(|m| pndes_count(n, m)).sum();
            assert_eq!(total, int_pow(2, n as u32) * factorial(n), "n={n}");
        }
    }

    #[test]
    fn pdes_total_is_group_order() {
        for n in 0..=12u64 {
            let total: BigInt = (0..=n).map(|m| pdes_count(n, m)).sum();
            assert_eq!(total, int_pow(2, n as u32) * factorial(n));
        }
    }

    #[test]
    fn cd_total_is_group_order() {
        for r in 2..=6u32 {
            for n in 0..=12u64 {
                let total: BigInt = (0..=n).map(|m| cd_count(r, n, m).unwrap()).sum();
                assert_eq!(total, int_pow(i64::from(r), n as u32) * factorial(n), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn cd_values() {
        assert_eq!(cd_count(3, 2, 1).unwrap(), int(2));
        assert_eq!(cd_count(3, 2, 0).unwrap(), int(16));
        assert_eq!(cd_count(2, 0, 0).unwrap(), int(1));
        assert!(cd_count(1, 2, 0).is_err());
        // r = 2 specializes to the pn-descent count
        for n in 0..=8u64 {
            for m in 0..=n {
                assert_eq!(cd_count(2, n, m).unwrap(), pndes_count(n, m));
            }
        }
    }

    #[test]
    fn cd_blocks_values() {
        assert_eq!(cd_count_blocks(2, 2, 0).unwrap(), int(6));
        assert_eq!(cd_count_blocks(2, 2, 1).unwrap(), int(2));
        assert_eq!(cd_count_blocks(3, 2, 0).unwrap(), int(16));
        assert_eq!(cd_count_blocks(3, 2, 1).unwrap(), int(2));
        assert!(cd_count_blocks(1, 2, 0).is_err());
        for r in 2..=5u32 {
            for n in 0..=10u64 {
                for m in 0..=n {
                    assert_eq!(
                        cd_count_blocks(r, n, m).unwrap(),
                        cd_count(r, n, m).unwrap(),
                        "r={r} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn composition_generation() {
        assert_eq!(compositions(1).count(), 1);
        assert_eq!(compositions(4).count(), 8);
        for parts in compositions(5) {
            assert_eq!(parts.iter().sum::<u32>(), 5);
            assert!(parts.iter().all(|&p| p >= 1));
        }
    }

    #[test]
    fn composition_sum_small() {
        assert_eq!(composition_sum_poly(2, 2).unwrap(), QPoly::from_ints(&[6, 2]));
        assert_eq!(composition_sum_poly(3, 2).unwrap(), QPoly::from_ints(&[16, 2]));
        for r in 2..=5i64 {
            assert_eq!(
                composition_sum_poly(r as u32, 1).unwrap(),
                QPoly::from_ints(&[r])
            );
        }
        assert!(matches!(composition_sum_poly(3, 0), Err(FormulaError::EmptyWord)));
    }

    #[test]
    fn composition_sum_matches_closed_forms() {
        for r in 2..=5u32 {
            for n in 1..=10u64 {
                let poly = composition_sum_poly(r, n).unwrap();
                for m in 0..=n {
                    assert_eq!(
                        BigRational::from_integer(cd_count(r, n, m).unwrap()),
                        poly.coeff(m as usize),
                        "r={r} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn cc_healthy_and_erratum_values() {
        // r = 2 reproduces the positive-descent counts
        assert_eq!(cc_count(2, 2, 0).unwrap(), rat(7));
        assert_eq!(cc_count(2, 2, 1).unwrap(), rat(1));
        // printed formula versus ground truth 3 and 17: the erratum signal
        assert_eq!(cc_count(3, 1, 0).unwrap(), rat(2));
        assert_eq!(cc_count(3, 2, 0).unwrap(), rat(5));
        // n = 0 is healthy for every r
        for r in 1..=5 {
            assert_eq!(cc_count(r, 0, 0).unwrap(), rat(1));
        }
    }

    #[test]
    fn cc_matches_pdes_at_r2() {
        for n in 0..=6u64 {
            for m in 0..=n {
                assert_eq!(
                    cc_count(2, n, m).unwrap(),
                    BigRational::from_integer(pdes_count(n, m)),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn identity_small_cases() {
        assert!(identity_r2(0, 0));
        assert!(identity_r2(1, 0));
        assert!(identity_r2(2, 0));
        assert!(identity_r2(2, 1));
        assert_eq!(identity_r2_first_failure(24), None);
    }
}
