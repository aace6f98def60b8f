use super::poly::QPoly;
use super::AlgebraError;
use std::fmt;

/// Rational function in `q`: a quotient of two [`QPoly`] values.
///
/// Canonical form: numerator and denominator coprime, denominator monic and
/// nonzero. Zero is `0/1`. Needed because the colored-descent generating
/// function for r != 2 has series coefficients that are not polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QRatFunc {
    num: QPoly,
    den: QPoly,
}

impl QRatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return QRatFunc {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = QPoly::gcd(&num, &den);
        let (num, rn) = num.divrem(&g);
        debug_assert!(rn.is_zero());
        let (den, rd) = den.divrem(&g);
        debug_assert!(rd.is_zero());
        // make the denominator monic, folding its leading coefficient into the numerator
        let lead = den.leading().expect("nonzero denominator").clone();
        QRatFunc {
            num: num.scale(&lead.recip()),
            den: den.scale(&lead.recip()),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    /// `Some(p)` when the reduced denominator is 1, i.e. the value is a polynomial.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, rhs: &QRatFunc) -> QRatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return QRatFunc::from_poly(&self.num + &rhs.num);
        }
        QRatFunc::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &QRatFunc) -> QRatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> QRatFunc {
        QRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &QRatFunc) -> QRatFunc {
        if self.is_zero() || rhs.is_zero() {
            return QRatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRatFunc::from_poly(&self.num * &rhs.num);
        }
        QRatFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn mul_poly(&self, rhs: &QPoly) -> QRatFunc {
        self.mul(&QRatFunc::from_poly(rhs.clone()))
    }

    pub fn inv(&self) -> Result<QRatFunc, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(QRatFunc::reduced(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QPoly {
        QPoly::q()
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (q^2 - 1)/(q - 1) reduces to q + 1
        let f = QRatFunc::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f.as_poly(), Some(&QPoly::from_ints(&[1, 1])));
    }

    #[test]
    fn denominator_is_monic() {
        // 1/(2q) -> (1/2)/q
        let f = QRatFunc::new(QPoly::one(), QPoly::from_ints(&[0, 2])).unwrap();
        assert_eq!(f.denominator(), &q());
        assert!(f.as_poly().is_none());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            QRatFunc::new(QPoly::one(), QPoly::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn field_inverse() {
        let f = QRatFunc::new(QPoly::from_ints(&[-1, 1]), q()).unwrap(); // (q-1)/q
        let prod = f.mul(&f.inv().unwrap());
        assert_eq!(prod, QRatFunc::one());
        assert!(QRatFunc::zero().inv().is_err());
    }

    #[test]
    fn display() {
        let f = QRatFunc::new(QPoly::from_ints(&[-1, 1]), q()).unwrap();
        assert_eq!(f.to_string(), "(-1 + q)/(q)");
        assert_eq!(QRatFunc::from_poly(QPoly::from_ints(&[7, 1])).to_string(), "7 + q");
    }
}
