//! Exact rational scalars and the small amount of integer combinatorics the
//! rest of the crate needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Elements of the base field: arbitrary-precision rationals, always reduced.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_scalar(n: u32, k: u32) -> Scalar {
    Scalar::from_integer(binomial(n, k))
}

/// `(-1)^k` as a scalar.
pub fn sign_pow(k: u32) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// `n` or `n/d`, no spaces.
pub fn render_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Joins `(coefficient, symbol)` pairs into a canonical linear combination.
///
/// A `None` symbol is a bare constant. Unit coefficients are elided in front
/// of symbols, negative coefficients are folded into the joining operator.
pub(crate) fn render_linear<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Scalar, Option<String>)>,
{
    let mut out = String::new();
    for (coeff, symbol) in terms {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        match symbol {
            None => out.push_str(&render_scalar(&magnitude)),
            Some(sym) if magnitude.is_one() => out.push_str(&sym),
            Some(sym) => {
                out.push_str(&render_scalar(&magnitude));
                out.push('*');
                out.push_str(&sym);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(12, 6), BigInt::from(924));
    }

    #[test]
    fn scalar_rendering() {
        assert_eq!(render_scalar(&ratio(-3, 6)), "-1/2");
        assert_eq!(render_scalar(&int(4)), "4");
    }

    #[test]
    fn linear_rendering() {
        let one = int(1);
        let minus_half = ratio(-1, 2);
        let three = int(3);
        let s = render_linear([
            (&minus_half, None),
            (&one, Some("t".to_string())),
            (&three, Some("t^2".to_string())),
        ]);
        assert_eq!(s, "-1/2 + t + 3*t^2");
        assert_eq!(render_linear(std::iter::empty()), "0");
    }
}
