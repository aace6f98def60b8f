use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with the vanishing convention: `binomial(a, b)` is the
/// standard value for `0 <= b <= a` and zero whenever `b < 0`, `b > a`, or
/// `a < 0`. The `a < 0` case is deliberate: the closed-form descent counts
/// rely on out-of-range binomials killing their terms.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 1..=b {
        acc = acc * BigInt::from(a - b + t) / BigInt::from(t);
    }
    acc
}

/// `n!` as an exact big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= BigInt::from(t);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(7, 7), BigInt::from(1));
    }

    #[test]
    fn out_of_range_vanishes() {
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(-3, 2), BigInt::zero());
    }

    #[test]
    fn pascal_combination() {
        // C(3,1) + 2*C(3,2) + C(3,3) collapses to C(5,2) by two Pascal steps.
        let lhs = binomial(3, 1) + 2 * binomial(3, 2) + binomial(3, 3);
        assert_eq!(lhs, BigInt::from(10));
        assert_eq!(lhs, binomial(5, 2));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(
            factorial(25).to_string(),
            "15511210043330985984000000"
        );
    }
}
