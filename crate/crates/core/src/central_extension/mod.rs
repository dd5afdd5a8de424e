//! The loop algebra `L = sl2 ⊗ A`, its two-dimensional center `C`, the
//! cocycle `<·,·> : A × A -> C` and the universal central extension
//! `L̂ = L ⊕ C` with bracket `[x⊗a, y⊗b] = [x,y]⊗ab + (x|y)<a,b>`.

mod cocycle;
mod loop_algebra;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::scalar::{int, render_linear, Scalar};

pub use cocycle::{cocycle, cocycle_sym, cocycle_table, sector_class};
pub use loop_algebra::{pi_projection, LElem, LHatElem};

/// An element `p*c + q*c'` of the center. `c''` is `-c - c'`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CentralVec {
    pub c: Scalar,
    pub cp: Scalar,
}

impl CentralVec {
    pub fn new(c: Scalar, cp: Scalar) -> Self {
        Self { c, cp }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn c() -> Self {
        Self::new(int(1), int(0))
    }

    pub fn c_prime() -> Self {
        Self::new(int(0), int(1))
    }

    pub fn c_double_prime() -> Self {
        Self::new(int(-1), int(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.cp.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(&self.c * s, &self.cp * s)
    }

    pub(crate) fn add_scaled(&mut self, other: &CentralVec, s: &Scalar) {
        self.c += &other.c * s;
        self.cp += &other.cp * s;
    }
}

impl<'a> Add<&'a CentralVec> for &'a CentralVec {
    type Output = CentralVec;
    fn add(self, rhs: &'a CentralVec) -> CentralVec {
        CentralVec::new(&self.c + &rhs.c, &self.cp + &rhs.cp)
    }
}

impl<'a> Sub<&'a CentralVec> for &'a CentralVec {
    type Output = CentralVec;
    fn sub(self, rhs: &'a CentralVec) -> CentralVec {
        CentralVec::new(&self.c - &rhs.c, &self.cp - &rhs.cp)
    }
}

impl Neg for &CentralVec {
    type Output = CentralVec;
    fn neg(self) -> CentralVec {
        CentralVec::new(-&self.c, -&self.cp)
    }
}

impl fmt::Display for CentralVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.c, Some("c".to_string())),
            (&self.cp, Some("c'".to_string())),
        ];
        f.write_str(&render_linear(terms))
    }
}
