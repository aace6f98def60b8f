//! Series expansion of the closed-form exponential generating functions,
//! extracting `n!`-scaled coefficient polynomials.
//!
//! The signed-permutation generating function and its quadratic cousin
//! expand entirely inside the polynomial ring: their numerator and
//! denominator share a factor of `1 - q`, which is cancelled symbolically
//! before taking the series reciprocal. The `(c,c)`-descent generating
//! function admits no such cancellation when r != 2, so it is expanded
//! verbatim over the rational-function field and each coefficient is
//! classified: an integer polynomial, or a non-polynomial report carrying
//! the irreducible value. The non-polynomial outcomes are exactly what the
//! erratum report documents.

use crate::algebra::{factorial, AlgebraError, CoeffOutcome, QPoly, XSeries};
use crate::formulas::FormulaError;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EgfError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Coefficient sequences for a generating function together with its
/// first-letter refinements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfTriple {
    pub total: Vec<QPoly>,
    pub plus: Vec<QPoly>,
    pub minus: Vec<QPoly>,
}

/// `-(q-1)^{k-1}/k!`, the generic tail coefficient of the cancelled
/// denominators below.
fn tail_coeff(k: usize) -> QPoly {
    let q_minus_1 = QPoly::from_ints(&[-1, 1]);
    let k_fact = BigRational::from_integer(factorial(k as u64));
    q_minus_1.pow(k - 1).scale(&-k_fact.recip())
}

fn take_polynomial(series: &XSeries, n: usize) -> Result<QPoly, AlgebraError> {
    match series.integral_scale(n)? {
        CoeffOutcome::Polynomial(p) => Ok(p),
        CoeffOutcome::NonPolynomial(value) => Err(AlgebraError::IntegralityViolation(format!(
            "coefficient of x^{n} is not a polynomial: {value}"
        ))),
    }
}

/// Expand the positive-descent generating function and its first-letter
/// refinements to order `n_max`. After cancelling `1 - q`, the denominator
/// is `1 - 2x - sum_{k>=2} (q-1)^{k-1} x^k / k!`; the refinements are the
/// `(1-x)` and `x` multiples of the reciprocal.
pub fn expand_p(n_max: u32) -> Result<EgfTriple, EgfError> {
    let order = n_max as usize;
    let mut den = vec![QPoly::one(), QPoly::constant_int(-2)];
    for k in 2..=order {
        den.push(tail_coeff(k));
    }
    let total_series = XSeries::from_polys(den, order).reciprocal()?;
    let one_minus_x = XSeries::from_polys(vec![QPoly::one(), QPoly::constant_int(-1)], order);
    let plus_series = total_series.mul(&one_minus_x);
    let minus_series = total_series.mul_x();

    let mut triple = EgfTriple {
        total: Vec::with_capacity(order + 1),
        plus: Vec::with_capacity(order + 1),
        minus: Vec::with_capacity(order + 1),
    };
    for n in 0..=order {
        triple.total.push(take_polynomial(&total_series, n)?);
        triple.plus.push(take_polynomial(&plus_series, n)?);
        triple.minus.push(take_polynomial(&minus_series, n)?);
    }
    Ok(triple)
}

/// Expand `1/(1 - rx - (q-1)x^2)`, the generating function of the
/// `(c,d)`-descent polynomials, to order `n_max`.
pub fn expand_a(r: u32, n_max: u32) -> Result<Vec<QPoly>, EgfError> {
    if r < 2 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the (c,d)-descent generating function",
            min_r: 2,
            r,
        }
        .into());
    }
    let order = n_max as usize;
    let den = XSeries::from_polys(
        vec![
            QPoly::one(),
            QPoly::constant_int(-(i64::from(r))),
            QPoly::from_ints(&[1, -1]),
        ],
        order,
    );
    let series = den.reciprocal()?;
    (0..=order)
        .map(|n| take_polynomial(&series, n).map_err(EgfError::from))
        .collect()
}

/// Expand the printed `(c,c)`-descent generating function verbatim:
/// `(1-q) / ((1-x)(1-q) - (r-1) + e^{(q-1)x})`, with rational-function
/// coefficients. Each `n!`-scaled coefficient is returned as an integer
/// polynomial when it is one, and otherwise as a non-polynomial report.
/// At r = 2 the denominator is algebraically the positive-descent one and
/// every outcome is a polynomial; for other r the constant coefficient
/// already fails, which is the erratum this artifact documents.
pub fn expand_g(r: u32, n_max: u32) -> Result<Vec<CoeffOutcome>, EgfError> {
    if r < 1 {
        return Err(FormulaError::NeedsMoreColors {
            formula: "the (c,c)-descent generating function",
            min_r: 1,
            r,
        }
        .into());
    }
    let order = n_max as usize;
    // (1-x)(1-q) - (r-1) + e^{(q-1)x}, coefficient by coefficient in x:
    // x^0 carries (3-r) - q, x^1 carries 2(q-1), x^k the exponential tail.
    let q_minus_1 = QPoly::from_ints(&[-1, 1]);
    let mut den = vec![
        QPoly::from_ints(&[3 - i64::from(r), -1]),
        QPoly::from_ints(&[-2, 2]),
    ];
    for k in 2..=order {
        let k_fact = BigRational::from_integer(factorial(k as u64));
        den.push(q_minus_1.pow(k).scale(&k_fact.recip()));
    }
    let series = XSeries::from_polys(den, order)
        .reciprocal()?
        .scale_poly(&QPoly::from_ints(&[1, -1]));

    let n_bang = |n: usize| QPoly::constant(BigRational::from_integer(factorial(n as u64)));
    Ok((0..=order)
        .map(|n| {
            let scaled = series.coeff(n).mul_poly(&n_bang(n));
            match scaled.as_poly() {
                Some(p) if p.is_integral() => CoeffOutcome::Polynomial(p.clone()),
                _ => CoeffOutcome::NonPolynomial(scaled),
            }
        })
        .collect())
}

/// Re-derive the positive-descent polynomials by the geometric-series
/// route: sum powers of the inner series `2x + sum_{k>=2} (q-1)^{k-1}
/// x^k/k!` (valuation 1, so powers beyond the order contribute nothing)
/// and compare with [`expand_p`]. Returns true on full agreement.
pub fn geometric_expansion_check(n_max: u32) -> Result<bool, EgfError> {
    let order = n_max as usize;
    let mut inner = vec![QPoly::zero(), QPoly::constant_int(2)];
    for k in 2..=order {
        inner.push(tail_coeff(k).scale_int(-1));
    }
    let inner = XSeries::from_polys(inner, order);

    let one = XSeries::one(order);
    let mut acc = one.clone();
    for _ in 0..order {
        acc = acc.mul(&inner).add(&one);
    }

    let direct = expand_p(n_max)?;
    for n in 0..=order {
        if take_polynomial(&acc, n)? != direct.total[n] {
            return Ok(false);
        }
    }
    Ok(true)
}
