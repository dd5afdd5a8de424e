//! The symmetric basis `{1} ∪ {t^i, (t')^i, (t'')^i : i >= 1}` of `A`.
//!
//! Conversion from partial fractions uses `t^-k = (1 - t')^k` and
//! `(t-1)^-k = (-1)^k (t'')^k`; both maps preserve degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{AElem, AMonomial};
use crate::scalar::{binomial_scalar, render_linear, sign_pow, Scalar};

/// Which of `t, t', t''` a symmetric basis power belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    T,
    TPrime,
    TDoublePrime,
}

impl Sector {
    pub const ALL: [Sector; 3] = [Sector::T, Sector::TPrime, Sector::TDoublePrime];

    /// Image under the automorphism `'`: `t -> t' -> t'' -> t`.
    pub fn next(self) -> Sector {
        match self {
            Sector::T => Sector::TPrime,
            Sector::TPrime => Sector::TDoublePrime,
            Sector::TDoublePrime => Sector::T,
        }
    }

    pub(crate) fn prime_count(self) -> usize {
        match self {
            Sector::T => 0,
            Sector::TPrime => 1,
            Sector::TDoublePrime => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sector::T => "t",
            Sector::TPrime => "tp",
            Sector::TDoublePrime => "tpp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymMonomial {
    One,
    /// `f^k` for `f` in the sector, `k >= 1`.
    Pow(Sector, u32),
}

impl SymMonomial {
    pub fn degree(self) -> u32 {
        match self {
            SymMonomial::One => 0,
            SymMonomial::Pow(_, k) => k,
        }
    }

    fn symbol(self) -> Option<String> {
        match self {
            SymMonomial::One => None,
            SymMonomial::Pow(s, 1) => Some(s.symbol().to_string()),
            SymMonomial::Pow(s, k) => Some(format!("{}^{}", s.symbol(), k)),
        }
    }
}

/// Coordinates of an element of `A` in the symmetric basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymCoords {
    terms: BTreeMap<SymMonomial, Scalar>,
}

impl SymCoords {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: SymMonomial, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, coeff);
        out
    }

    pub fn add_term(&mut self, m: SymMonomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn const_term(&self) -> Scalar {
        self.coeff(SymMonomial::One)
    }

    pub fn coeff(&self, m: SymMonomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero coefficients of `f^i`, `i >= 1`, for one sector.
    pub fn sector_terms(&self, sector: Sector) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().filter_map(move |(m, c)| match m {
            SymMonomial::Pow(s, k) if *s == sector => Some((*k, c)),
            _ => None,
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (SymMonomial, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn from_aelem(a: &AElem) -> Self {
        let mut out = Self::zero();
        for (m, c) in a.terms() {
            match m {
                AMonomial::One => out.add_term(SymMonomial::One, c.clone()),
                AMonomial::T(k) => out.add_term(SymMonomial::Pow(Sector::T, k), c.clone()),
                AMonomial::TInv(k) => {
                    for j in 0..=k {
                        let mono = if j == 0 {
                            SymMonomial::One
                        } else {
                            SymMonomial::Pow(Sector::TPrime, j)
                        };
                        out.add_term(mono, c * binomial_scalar(k, j) * sign_pow(j));
                    }
                }
                AMonomial::ShiftInv(k) => {
                    out.add_term(SymMonomial::Pow(Sector::TDoublePrime, k), c * sign_pow(k))
                }
            }
        }
        out
    }

    pub fn to_aelem(&self) -> AElem {
        let mut out = AElem::zero();
        for (m, c) in &self.terms {
            match *m {
                SymMonomial::One => out.add_term(AMonomial::One, c.clone()),
                SymMonomial::Pow(Sector::T, k) => out.add_term(AMonomial::T(k), c.clone()),
                // (t')^k = (1 - t^-1)^k
                SymMonomial::Pow(Sector::TPrime, k) => {
                    for j in 0..=k {
                        let mono = if j == 0 {
                            AMonomial::One
                        } else {
                            AMonomial::TInv(j)
                        };
                        out.add_term(mono, c * binomial_scalar(k, j) * sign_pow(j));
                    }
                }
                SymMonomial::Pow(Sector::TDoublePrime, k) => {
                    out.add_term(AMonomial::ShiftInv(k), c * sign_pow(k))
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for SymCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_linear(
            self.terms.iter().map(|(m, c)| (c, m.symbol())),
        ))
    }
}

/// `f^k` as a symmetric-basis vector, `k >= 0`.
pub fn sym_power(sector: Sector, k: u32) -> SymCoords {
    if k == 0 {
        SymCoords::monomial(SymMonomial::One, Scalar::one())
    } else {
        SymCoords::monomial(SymMonomial::Pow(sector, k), Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn conversion_examples() {
        let s = AElem::t_pow(-1).to_sym();
        assert_eq!(s.const_term(), int(1));
        assert_eq!(s.coeff(SymMonomial::Pow(Sector::TPrime, 1)), int(-1));

        let s = AElem::shift_pow(-1).to_sym();
        assert_eq!(
            s,
            SymCoords::monomial(SymMonomial::Pow(Sector::TDoublePrime, 1), int(-1))
        );

        let s = AElem::t_pow(-2).to_sym();
        assert_eq!(s.to_string(), "1 - 2*tp + tp^2");
    }

    #[test]
    fn sector_powers_agree_with_automorphism() {
        for sector in Sector::ALL {
            for k in 1..=6u32 {
                let via_prime = AElem::sector_pow(sector, k as i64);
                assert_eq!(via_prime.to_sym(), sym_power(sector, k), "{sector:?}^{k}");
            }
        }
    }

    #[test]
    fn round_trip_on_basis() {
        for m in AMonomial::up_to_degree(12) {
            let a = AElem::basis(m);
            assert_eq!(AElem::from_sym(&a.to_sym()), a);
        }
        for sector in Sector::ALL {
            for k in 0..=12 {
                let s = sym_power(sector, k);
                assert_eq!(s.to_aelem().to_sym(), s);
            }
        }
    }
}
