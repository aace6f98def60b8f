use super::binom::factorial;
use super::poly::QPoly;
use super::ratfunc::QRatFunc;
use super::AlgebraError;
use num_rational::BigRational;
use std::fmt;

/// Truncated power series in `x` whose coefficients are rational functions
/// in `q`. A series of order `N` carries `N + 1` coefficients and all
/// arithmetic is exact modulo `x^{N+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    coeffs: Vec<QRatFunc>,
}

/// What an `n!`-scaled series coefficient turned out to be: an honest
/// polynomial in `q`, or a rational function that refuses to reduce.
/// The latter is data, not a failure; the erratum report serializes it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoeffOutcome {
    Polynomial(QPoly),
    NonPolynomial(QRatFunc),
}

impl CoeffOutcome {
    pub fn as_polynomial(&self) -> Option<&QPoly> {
        match self {
            CoeffOutcome::Polynomial(p) => Some(p),
            CoeffOutcome::NonPolynomial(_) => None,
        }
    }
}

impl fmt::Display for CoeffOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffOutcome::Polynomial(p) => write!(f, "{p}"),
            CoeffOutcome::NonPolynomial(r) => write!(f, "non-polynomial: {r}"),
        }
    }
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![QRatFunc::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = XSeries::zero(order);
        s.coeffs[0] = QRatFunc::one();
        s
    }

    /// Series with the given polynomial coefficients, zero-padded to `order`.
    pub fn from_polys(polys: Vec<QPoly>, order: usize) -> Self {
        let mut coeffs: Vec<QRatFunc> = polys.into_iter().map(QRatFunc::from_poly).collect();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, QRatFunc::zero());
        XSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &QRatFunc {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, value: QRatFunc) {
        self.coeffs[k] = value;
    }

    pub fn add(&self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].add(&rhs.coeffs[k]))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].sub(&rhs.coeffs[k]))
                .collect(),
        }
    }

    /// Truncated product, exact modulo `x^{min(order)+1}`.
    pub fn mul(&self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![QRatFunc::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        XSeries { coeffs }
    }

    pub fn scale(&self, s: &QRatFunc) -> XSeries {
        XSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn scale_poly(&self, p: &QPoly) -> XSeries {
        self.scale(&QRatFunc::from_poly(p.clone()))
    }

    /// Multiply by `x`: shift coefficients up one slot at the same truncation order.
    pub fn mul_x(&self) -> XSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(QRatFunc::zero());
        coeffs.extend(self.coeffs[..self.coeffs.len() - 1].iter().cloned());
        XSeries { coeffs }
    }

    /// Multiplicative inverse: `self * reciprocal = 1 + O(x^{N+1})`.
    /// Requires an invertible constant term.
    pub fn reciprocal(&self) -> Result<XSeries, AlgebraError> {
        if self.coeffs[0].is_zero() {
            return Err(AlgebraError::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].inv()?;
        let mut out = XSeries::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let mut acc = QRatFunc::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&out.coeffs[n - k]));
            }
            out.coeffs[n] = acc.neg().mul(&inv0);
        }
        Ok(out)
    }

    /// The exponential `e^{u·x}` truncated at `order`: the coefficient of
    /// `x^k` is `u^k / k!`. With `u = q - 1` this is the factor appearing in
    /// every generating function here.
    pub fn exp_scaled(u: &QPoly, order: usize) -> XSeries {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = QPoly::one();
        for k in 0..=order {
            if k > 0 {
                power = &power * u;
            }
            let k_fact = BigRational::from_integer(factorial(k as u64));
            coeffs.push(QRatFunc::from_poly(power.scale(&k_fact.recip())));
        }
        XSeries { coeffs }
    }

    /// `n!` times the coefficient of `x^n`. Polynomial outcomes must have
    /// integer coefficients (these are exact counts); a rational-function
    /// outcome is reported as data rather than an error.
    pub fn integral_scale(&self, n: usize) -> Result<CoeffOutcome, AlgebraError> {
        let n_fact = QPoly::constant(BigRational::from_integer(factorial(n as u64)));
        let scaled = self.coeffs[n].mul_poly(&n_fact);
        match scaled.as_poly() {
            Some(p) => {
                if p.is_integral() {
                    Ok(CoeffOutcome::Polynomial(p.clone()))
                } else {
                    Err(AlgebraError::IntegralityViolation(p.to_string()))
                }
            }
            None => Ok(CoeffOutcome::NonPolynomial(scaled)),
        }
    }
}
