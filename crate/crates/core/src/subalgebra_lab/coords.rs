//! Coordinates on the degree-truncated `L̂`.
//!
//! The enumeration is fixed: `A`-basis elements by descending degree (for
//! `d = cap, .., 1`: `t^d`, `t^-d`, `(t-1)^-d`; then `1`), each paired with
//! `X`, `Y`, `Z`; then `c`, `c'`. Descending degree makes the pivot of a
//! reduced row its highest-degree part, so the rows whose pivot has degree
//! `<= d` span the intersection of a span with degree `<= d`.

use num_traits::Zero;

use super::LabError;
use crate::arith_a::{AElem, AMonomial};
use crate::central_extension::{CentralVec, LElem, LHatElem};
use crate::scalar::Scalar;
use crate::sl2::Equitable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeCap {
    pub cap: u32,
}

impl DegreeCap {
    pub fn new(cap: u32) -> Self {
        Self { cap }
    }

    pub fn a_dim(self) -> usize {
        3 * self.cap as usize + 1
    }

    pub fn loop_dim(self) -> usize {
        3 * self.a_dim()
    }

    pub fn dim(self) -> usize {
        self.loop_dim() + 2
    }

    /// `A`-basis elements in coordinate order.
    pub fn monomials(self) -> Vec<AMonomial> {
        let mut out: Vec<AMonomial> = (1..=self.cap)
            .rev()
            .flat_map(|d| [AMonomial::T(d), AMonomial::TInv(d), AMonomial::ShiftInv(d)])
            .collect();
        out.push(AMonomial::One);
        out
    }

    fn monomial_position(self, m: AMonomial) -> usize {
        let block = |d: u32| 3 * (self.cap - d) as usize;
        match m {
            AMonomial::T(d) => block(d),
            AMonomial::TInv(d) => block(d) + 1,
            AMonomial::ShiftInv(d) => block(d) + 2,
            AMonomial::One => 3 * self.cap as usize,
        }
    }

    pub fn c_index(self) -> usize {
        self.loop_dim()
    }

    pub fn c_prime_index(self) -> usize {
        self.loop_dim() + 1
    }

    /// Degree of the basis vector at `index`; central coordinates have degree 0.
    pub fn degree_of(self, index: usize) -> u32 {
        if index >= self.loop_dim() {
            return 0;
        }
        self.monomials()[index / 3].degree()
    }

    /// Human-readable name of the basis vector at `index`, e.g. `T(Y, t^-2)`.
    pub fn label(self, index: usize) -> String {
        if index == self.c_index() {
            return "c".into();
        }
        if index == self.c_prime_index() {
            return "c'".into();
        }
        let b = Equitable::ALL[index % 3];
        let a = AElem::basis(self.monomials()[index / 3]);
        format!("T({}, {a})", b.symbol())
    }
}

pub fn coordinates(u: &LHatElem, cap: DegreeCap) -> Result<Vec<Scalar>, LabError> {
    let mut out = vec![Scalar::zero(); cap.dim()];
    for b in Equitable::ALL {
        for (m, coeff) in u.loop_part.coeff(b).terms() {
            if m.degree() > cap.cap {
                return Err(LabError::DegreeOverflow {
                    term: LElem::basis_tensor(b, AElem::monomial(m, coeff.clone())).to_string(),
                    degree: m.degree(),
                    cap: cap.cap,
                });
            }
            out[3 * cap.monomial_position(m) + b.index()] = coeff.clone();
        }
    }
    out[cap.c_index()] = u.central.c.clone();
    out[cap.c_prime_index()] = u.central.cp.clone();
    Ok(out)
}

pub fn from_coordinates(v: &[Scalar], cap: DegreeCap) -> LHatElem {
    assert_eq!(v.len(), cap.dim(), "coordinate vector length");
    let mut loop_part = LElem::zero();
    for (pos, m) in cap.monomials().into_iter().enumerate() {
        for b in Equitable::ALL {
            let coeff = &v[3 * pos + b.index()];
            if !coeff.is_zero() {
                *loop_part.coeff_mut(b) += &AElem::monomial(m, coeff.clone());
            }
        }
    }
    let central = CentralVec::new(v[cap.c_index()].clone(), v[cap.c_prime_index()].clone());
    LHatElem::new(loop_part, central)
}
