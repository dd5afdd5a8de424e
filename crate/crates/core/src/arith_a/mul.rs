//! Products of partial-fraction basis elements.

use num_traits::One;

use super::AMonomial;
use crate::scalar::{binomial_scalar, sign_pow, Scalar};

fn t_or_one(k: u32) -> AMonomial {
    if k == 0 {
        AMonomial::One
    } else {
        AMonomial::T(k)
    }
}

/// Expands `m1 * m2` in the partial-fraction basis.
pub(super) fn monomial_product(m1: AMonomial, m2: AMonomial) -> Vec<(AMonomial, Scalar)> {
    use AMonomial::*;
    match (m1, m2) {
        (One, m) | (m, One) => vec![(m, Scalar::one())],
        (T(a), T(b)) => vec![(T(a + b), Scalar::one())],
        (TInv(a), TInv(b)) => vec![(TInv(a + b), Scalar::one())],
        (ShiftInv(a), ShiftInv(b)) => vec![(ShiftInv(a + b), Scalar::one())],
        (T(a), TInv(b)) | (TInv(b), T(a)) => {
            let m = if a > b {
                T(a - b)
            } else if a == b {
                One
            } else {
                TInv(b - a)
            };
            vec![(m, Scalar::one())]
        }
        (T(a), ShiftInv(b)) | (ShiftInv(b), T(a)) => poly_over_shift(a, b),
        (TInv(a), ShiftInv(b)) | (ShiftInv(b), TInv(a)) => mixed_poles(a, b),
    }
}

/// `t^a (t-1)^-b`: write `t = (t-1) + 1`, so the product is
/// `sum_k C(a,k) (t-1)^(k-b)`; negative exponents stay as poles at 1 and the
/// rest is re-expanded in powers of `t`.
fn poly_over_shift(a: u32, b: u32) -> Vec<(AMonomial, Scalar)> {
    let mut out = Vec::new();
    for k in 0..=a {
        let c = binomial_scalar(a, k);
        if k < b {
            out.push((AMonomial::ShiftInv(b - k), c));
        } else {
            let e = k - b;
            for m in 0..=e {
                out.push((t_or_one(m), &c * binomial_scalar(e, m) * sign_pow(e - m)));
            }
        }
    }
    out
}

/// Partial fractions of `1 / (t^a (t-1)^b)`, `a, b >= 1`:
///
/// - coefficient of `t^-i` is `(-1)^b C(a-i+b-1, b-1)`,
/// - coefficient of `(t-1)^-j` is `(-1)^(b-j) C(b-j+a-1, a-1)`.
fn mixed_poles(a: u32, b: u32) -> Vec<(AMonomial, Scalar)> {
    let mut out = Vec::with_capacity((a + b) as usize);
    for i in 1..=a {
        out.push((
            AMonomial::TInv(i),
            sign_pow(b) * binomial_scalar(a - i + b - 1, b - 1),
        ));
    }
    for j in 1..=b {
        out.push((
            AMonomial::ShiftInv(j),
            sign_pow(b - j) * binomial_scalar(b - j + a - 1, a - 1),
        ));
    }
    out
}
