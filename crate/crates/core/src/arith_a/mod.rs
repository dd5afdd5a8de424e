//! The coordinate ring `A = F[t, t^-1, (t-1)^-1]`.
//!
//! Elements are kept in partial-fraction normal form: a constant, a
//! polynomial part in `t`, principal parts at `t = 0` and at `t = 1`. This is
//! a basis of `A`, so equality of elements is equality of coefficient maps.
//! The symmetric basis `{1, t^i, (t')^i, (t'')^i}` lives in [`sym`].

mod mul;
pub mod sym;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{binomial_scalar, int, render_linear, sign_pow, Scalar};

pub use sym::{Sector, SymCoords, SymMonomial};

/// A basis element of `A` in partial-fraction coordinates.
///
/// The derived order (constant, then `t^k`, then `t^-k`, then `(t-1)^-k`,
/// each ascending in `k`) is the canonical rendering order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AMonomial {
    One,
    /// `t^k`, `k >= 1`.
    T(u32),
    /// `t^-k`, `k >= 1`.
    TInv(u32),
    /// `(t-1)^-k`, `k >= 1`.
    ShiftInv(u32),
}

impl AMonomial {
    pub fn degree(self) -> u32 {
        match self {
            AMonomial::One => 0,
            AMonomial::T(k) | AMonomial::TInv(k) | AMonomial::ShiftInv(k) => k,
        }
    }

    /// All basis elements of degree at most `cap`, in canonical order.
    pub fn up_to_degree(cap: u32) -> Vec<AMonomial> {
        let mut out = vec![AMonomial::One];
        out.extend((1..=cap).map(AMonomial::T));
        out.extend((1..=cap).map(AMonomial::TInv));
        out.extend((1..=cap).map(AMonomial::ShiftInv));
        out
    }

    fn symbol(self) -> Option<String> {
        match self {
            AMonomial::One => None,
            AMonomial::T(1) => Some("t".into()),
            AMonomial::T(k) => Some(format!("t^{k}")),
            AMonomial::TInv(k) => Some(format!("t^-{k}")),
            AMonomial::ShiftInv(k) => Some(format!("(t-1)^-{k}")),
        }
    }
}

/// An element of `A` in canonical sparse form (no stored zeros).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AElem {
    terms: BTreeMap<AMonomial, Scalar>,
}

impl AElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(AMonomial::One, Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(AMonomial::One, c)
    }

    pub fn monomial(m: AMonomial, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, coeff);
        out
    }

    pub fn basis(m: AMonomial) -> Self {
        Self::monomial(m, Scalar::one())
    }

    pub fn t() -> Self {
        Self::basis(AMonomial::T(1))
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        match k {
            0 => Self::one(),
            k if k > 0 => Self::basis(AMonomial::T(k as u32)),
            k => Self::basis(AMonomial::TInv((-k) as u32)),
        }
    }

    /// `(t-1)^k` for any integer `k`.
    pub fn shift_pow(k: i64) -> Self {
        if k < 0 {
            return Self::basis(AMonomial::ShiftInv((-k) as u32));
        }
        let k = k as u32;
        let mut out = Self::zero();
        for m in 0..=k {
            let coeff = binomial_scalar(k, m) * sign_pow(k - m);
            out.add_term(Self::t_monomial(m), coeff);
        }
        out
    }

    /// `t' = 1 - t^-1`.
    pub fn t_prime() -> Self {
        Self::t().prime()
    }

    /// `t'' = (1 - t)^-1`.
    pub fn t_double_prime() -> Self {
        Self::t().prime().prime()
    }

    /// `f^k` for `f` one of `t, t', t''` and any integer `k`.
    pub fn sector_pow(sector: Sector, k: i64) -> Self {
        let mut out = Self::t_pow(k);
        for _ in 0..sector.prime_count() {
            out = out.prime();
        }
        out
    }

    fn t_monomial(k: u32) -> AMonomial {
        if k == 0 {
            AMonomial::One
        } else {
            AMonomial::T(k)
        }
    }

    pub(crate) fn add_term(&mut self, m: AMonomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: AMonomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn const_term(&self) -> Scalar {
        self.coeff(AMonomial::One)
    }

    pub fn terms(&self) -> impl Iterator<Item = (AMonomial, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest pole order or polynomial degree; 0 for constants and zero.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// The order-3 automorphism `'` of `A` determined by `t -> 1 - t^-1`.
    pub fn prime(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            match *m {
                AMonomial::One => out.add_term(AMonomial::One, c.clone()),
                // (1 - t^-1)^k
                AMonomial::T(k) => {
                    for j in 0..=k {
                        let mono = if j == 0 {
                            AMonomial::One
                        } else {
                            AMonomial::TInv(j)
                        };
                        out.add_term(mono, c * binomial_scalar(k, j) * sign_pow(j));
                    }
                }
                // (t / (t-1))^k = (1 + (t-1)^-1)^k
                AMonomial::TInv(k) => {
                    for j in 0..=k {
                        let mono = if j == 0 {
                            AMonomial::One
                        } else {
                            AMonomial::ShiftInv(j)
                        };
                        out.add_term(mono, c * binomial_scalar(k, j));
                    }
                }
                // (t' - 1)^-k = (-t)^k
                AMonomial::ShiftInv(k) => out.add_term(AMonomial::T(k), c * sign_pow(k)),
            }
        }
        out
    }

    pub fn to_sym(&self) -> SymCoords {
        SymCoords::from_aelem(self)
    }

    pub fn from_sym(s: &SymCoords) -> Self {
        s.to_aelem()
    }

    /// Value of the element as a rational function at `t = point`, or `None`
    /// at a pole.
    pub fn eval(&self, point: &Scalar) -> Option<Scalar> {
        let shifted = point - Scalar::one();
        if (point.is_zero() && self.terms.keys().any(|m| matches!(m, AMonomial::TInv(_))))
            || (shifted.is_zero()
                && self
                    .terms
                    .keys()
                    .any(|m| matches!(m, AMonomial::ShiftInv(_))))
        {
            return None;
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let v = match *m {
                AMonomial::One => Scalar::one(),
                AMonomial::T(k) => num_traits::pow(point.clone(), k as usize),
                AMonomial::TInv(k) => num_traits::pow(point.recip(), k as usize),
                AMonomial::ShiftInv(k) => num_traits::pow(shifted.recip(), k as usize),
            };
            acc += c * v;
        }
        Some(acc)
    }

    /// Writes the element as `N(t) / (t^p (t-1)^q)` with `N` a polynomial
    /// (dense coefficients, ascending) and `p, q` the maximal pole orders.
    fn numerator_form(&self) -> (Vec<Scalar>, u32, u32) {
        let p = self.max_order(|m| matches!(m, AMonomial::TInv(_)));
        let q = self.max_order(|m| matches!(m, AMonomial::ShiftInv(_)));
        let cleared = &(self * &Self::t_pow(p as i64)) * &Self::shift_pow(q as i64);
        let deg = cleared.degree() as usize;
        let mut dense = vec![Scalar::zero(); deg + 1];
        for (m, c) in cleared.terms() {
            match m {
                AMonomial::One => dense[0] = c.clone(),
                AMonomial::T(k) => dense[k as usize] = c.clone(),
                _ => unreachable!("clearing denominators leaves a polynomial"),
            }
        }
        (dense, p, q)
    }

    fn max_order(&self, pred: impl Fn(&AMonomial) -> bool) -> u32 {
        self.terms
            .keys()
            .filter(|m| pred(m))
            .map(|m| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// Multiplicative inverse, defined exactly for the units `c t^a (t-1)^b`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (mut poly, p, q) = self.numerator_form();
        let mut t_exp = -(p as i64);
        let mut shift_exp = -(q as i64);
        while poly.len() > 1 && poly[0].is_zero() {
            poly.remove(0);
            t_exp += 1;
        }
        while poly.len() > 1 {
            let value_at_one = poly.iter().fold(Scalar::zero(), |acc, c| acc + c);
            if !value_at_one.is_zero() {
                break;
            }
            // synthetic division by (t - 1)
            let n = poly.len() - 1;
            let mut quotient = vec![Scalar::zero(); n];
            let mut carry = Scalar::zero();
            for i in (0..n).rev() {
                carry += &poly[i + 1];
                quotient[i] = carry.clone();
            }
            poly = quotient;
            shift_exp += 1;
        }
        if poly.len() != 1 {
            return None;
        }
        let lead = poly[0].recip();
        let inv = &Self::t_pow(-t_exp) * &Self::shift_pow(-shift_exp);
        Some(inv.scale(&lead))
    }

    /// Integer power; negative exponents need a unit.
    pub fn pow(&self, n: i64) -> Option<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }
}

impl From<Scalar> for AElem {
    fn from(c: Scalar) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for AElem {
    fn from(c: i64) -> Self {
        Self::constant(int(c))
    }
}

impl<'a> Add<&'a AElem> for &'a AElem {
    type Output = AElem;
    fn add(self, rhs: &'a AElem) -> AElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&AElem> for AElem {
    fn add_assign(&mut self, rhs: &AElem) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> Sub<&'a AElem> for &'a AElem {
    type Output = AElem;
    fn sub(self, rhs: &'a AElem) -> AElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &AElem {
    type Output = AElem;
    fn neg(self) -> AElem {
        AElem {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a AElem> for &'a AElem {
    type Output = AElem;
    fn mul(self, rhs: &'a AElem) -> AElem {
        let mut out = AElem::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let coeff = ca * cb;
                for (m, c) in mul::monomial_product(*ma, *mb) {
                    out.add_term(m, &coeff * c);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<AElem> for AElem {
            type Output = AElem;
            fn $method(self, rhs: AElem) -> AElem {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for AElem {
    type Output = AElem;
    fn neg(self) -> AElem {
        -&self
    }
}

impl fmt::Display for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_linear(
            self.terms.iter().map(|(m, c)| (c, m.symbol())),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn t() -> AElem {
        AElem::t()
    }

    #[test]
    fn addition_examples() {
        let sum = &t() + &AElem::basis(AMonomial::ShiftInv(1));
        assert_eq!(sum.coeff(AMonomial::T(1)), int(1));
        assert_eq!(sum.coeff(AMonomial::ShiftInv(1)), int(1));
        assert_eq!(sum.num_terms(), 2);

        let a = &AElem::from(3) - &AElem::t_pow(-2);
        assert_eq!(&a + &AElem::zero(), a);

        let inv = AElem::t_pow(-1);
        assert!((&inv + &inv.scale(&int(-1))).is_zero());
    }

    #[test]
    fn product_identities() {
        let tp = AElem::t_prime();
        let tpp = AElem::t_double_prime();
        // t t' = t - 1
        assert_eq!(&t() * &tp, &t() - &AElem::one());
        // t' t'' = t' - 1
        assert_eq!(&tp * &tpp, &tp - &AElem::one());
        // t'' t = t'' - 1
        assert_eq!(&tpp * &t(), &tpp - &AElem::one());
        // t t' t'' = -1
        assert_eq!(&(&t() * &tp) * &tpp, AElem::from(-1));
        // 1/(t(t-1)) = 1/(t-1) - 1/t
        let lhs = &AElem::t_pow(-1) * &AElem::shift_pow(-1);
        assert_eq!(lhs, &AElem::shift_pow(-1) - &AElem::t_pow(-1));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(t().prime(), &AElem::one() - &AElem::t_pow(-1));
        // t'' = (1 - t)^-1 = -(t-1)^-1
        assert_eq!(t().prime().prime(), -AElem::shift_pow(-1));
        assert_eq!(t().prime().prime().prime(), t());
    }

    #[test]
    fn rendering() {
        let mut a = AElem::from(-1);
        a.add_term(AMonomial::T(2), int(2));
        a.add_term(AMonomial::TInv(1), ratio(1, 2));
        a.add_term(AMonomial::ShiftInv(2), int(-3));
        assert_eq!(a.to_string(), "-1 + 2*t^2 + 1/2*t^-1 - 3*(t-1)^-2");
        assert_eq!(AElem::zero().to_string(), "0");
        assert_eq!((&t() - &AElem::one()).to_string(), "-1 + t");
    }

    #[test]
    fn degree_is_max_index() {
        let a = &AElem::t_pow(2) + &AElem::shift_pow(-5);
        assert_eq!(a.degree(), 5);
        assert_eq!(AElem::from(7).degree(), 0);
        assert_eq!(AElem::zero().degree(), 0);
    }

    #[test]
    fn inverses_of_units() {
        let tp = AElem::t_prime();
        let inv = tp.inverse().unwrap();
        assert_eq!(&tp * &inv, AElem::one());
        assert_eq!(inv, AElem::sector_pow(Sector::TPrime, -1));

        let unit = &(&AElem::t_pow(3) * &AElem::shift_pow(-2)).scale(&int(5)) * &AElem::one();
        assert_eq!(&unit * &unit.inverse().unwrap(), AElem::one());

        let shift = &t() - &AElem::one();
        assert_eq!(shift.inverse().unwrap(), AElem::shift_pow(-1));

        assert!((&t() + &AElem::one()).inverse().is_none());
        assert!(AElem::zero().inverse().is_none());
    }

    #[test]
    fn powers() {
        assert_eq!(t().pow(3).unwrap(), AElem::t_pow(3));
        assert_eq!(t().pow(-2).unwrap(), AElem::t_pow(-2));
        assert_eq!(
            AElem::t_double_prime().pow(-1).unwrap(),
            &AElem::one() - &t()
        );
        assert_eq!(t().pow(0).unwrap(), AElem::one());
    }

    #[test]
    fn evaluation_matches_definition() {
        let p = ratio(3, 2);
        assert_eq!(AElem::t_prime().eval(&p), Some(ratio(1, 3)));
        assert_eq!(AElem::t_double_prime().eval(&p), Some(int(-2)));
        assert_eq!(AElem::t_pow(-1).eval(&Scalar::zero()), None);
    }
}
