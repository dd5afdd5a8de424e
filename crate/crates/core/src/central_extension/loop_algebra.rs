use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{cocycle_sym, CentralVec};
use crate::arith_a::{AElem, SymCoords};
use crate::scalar::Scalar;
use crate::sl2::{killing_gram, Equitable, Sl2Vec};

/// `X⊗x + Y⊗y + Z⊗z` in `L = sl2 ⊗ A`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LElem {
    pub x: AElem,
    pub y: AElem,
    pub z: AElem,
}

impl LElem {
    pub fn new(x: AElem, y: AElem, z: AElem) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `v ⊗ a`.
    pub fn tensor(v: &Sl2Vec, a: &AElem) -> Self {
        Self::new(a.scale(&v.x), a.scale(&v.y), a.scale(&v.z))
    }

    pub fn basis_tensor(b: Equitable, a: AElem) -> Self {
        let mut out = Self::zero();
        *out.coeff_mut(b) = a;
        out
    }

    pub fn coeff(&self, b: Equitable) -> &AElem {
        match b {
            Equitable::X => &self.x,
            Equitable::Y => &self.y,
            Equitable::Z => &self.z,
        }
    }

    pub fn coeff_mut(&mut self, b: Equitable) -> &mut AElem {
        match b {
            Equitable::X => &mut self.x,
            Equitable::Y => &mut self.y,
            Equitable::Z => &mut self.z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.x.degree().max(self.y.degree()).max(self.z.degree())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.x.scale(s), self.y.scale(s), self.z.scale(s))
    }

    /// `[x⊗a, y⊗b] = [x,y] ⊗ ab`, extended bilinearly.
    pub fn bracket(&self, other: &LElem) -> LElem {
        let mut out = LElem::zero();
        for p in Equitable::ALL {
            let a = self.coeff(p);
            if a.is_zero() {
                continue;
            }
            for q in Equitable::ALL {
                let b = other.coeff(q);
                if p == q || b.is_zero() {
                    continue;
                }
                let product = a * b;
                let structure = Sl2Vec::basis(p).bracket(&Sl2Vec::basis(q));
                for r in Equitable::ALL {
                    let s = structure.coord(r);
                    if !num_traits::Zero::is_zero(s) {
                        *out.coeff_mut(r) += &product.scale(s);
                    }
                }
            }
        }
        out
    }

    fn render_parts(&self) -> Vec<String> {
        Equitable::ALL
            .iter()
            .filter(|b| !self.coeff(**b).is_zero())
            .map(|b| format!("T({}, {})", b.symbol(), self.coeff(*b)))
            .collect()
    }
}

/// An element of `L̂ = L ⊕ C`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LHatElem {
    pub loop_part: LElem,
    pub central: CentralVec,
}

impl LHatElem {
    pub fn new(loop_part: LElem, central: CentralVec) -> Self {
        Self { loop_part, central }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn tensor(v: &Sl2Vec, a: &AElem) -> Self {
        LElem::tensor(v, a).into()
    }

    pub fn is_zero(&self) -> bool {
        self.loop_part.is_zero() && self.central.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.loop_part.degree()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.loop_part.scale(s), self.central.scale(s))
    }

    /// Loop part via `[L, L]`, central part `sum (e_p|e_q) <a_p, b_q>`;
    /// central summands of the arguments drop out.
    pub fn bracket(&self, other: &LHatElem) -> LHatElem {
        let loop_part = self.loop_part.bracket(&other.loop_part);
        let gram = killing_gram();
        let lhs: Vec<SymCoords> = Equitable::ALL
            .iter()
            .map(|b| self.loop_part.coeff(*b).to_sym())
            .collect();
        let rhs: Vec<SymCoords> = Equitable::ALL
            .iter()
            .map(|b| other.loop_part.coeff(*b).to_sym())
            .collect();
        let mut central = CentralVec::zero();
        for p in Equitable::ALL {
            if lhs[p.index()].is_zero() {
                continue;
            }
            for q in Equitable::ALL {
                if rhs[q.index()].is_zero() {
                    continue;
                }
                let pairing = cocycle_sym(&lhs[p.index()], &rhs[q.index()]);
                central.add_scaled(&pairing, &gram[p.index()][q.index()]);
            }
        }
        LHatElem::new(loop_part, central)
    }
}

/// The projection `L̂ -> L` with kernel `C`.
pub fn pi_projection(u: &LHatElem) -> LElem {
    u.loop_part.clone()
}

impl From<LElem> for LHatElem {
    fn from(loop_part: LElem) -> Self {
        LHatElem::new(loop_part, CentralVec::zero())
    }
}

impl From<CentralVec> for LHatElem {
    fn from(central: CentralVec) -> Self {
        LHatElem::new(LElem::zero(), central)
    }
}

impl<'a> Add<&'a LElem> for &'a LElem {
    type Output = LElem;
    fn add(self, rhs: &'a LElem) -> LElem {
        LElem::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl<'a> Sub<&'a LElem> for &'a LElem {
    type Output = LElem;
    fn sub(self, rhs: &'a LElem) -> LElem {
        LElem::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Neg for &LElem {
    type Output = LElem;
    fn neg(self) -> LElem {
        LElem::new(-&self.x, -&self.y, -&self.z)
    }
}

impl<'a> Add<&'a LHatElem> for &'a LHatElem {
    type Output = LHatElem;
    fn add(self, rhs: &'a LHatElem) -> LHatElem {
        LHatElem::new(
            &self.loop_part + &rhs.loop_part,
            &self.central + &rhs.central,
        )
    }
}

impl<'a> Sub<&'a LHatElem> for &'a LHatElem {
    type Output = LHatElem;
    fn sub(self, rhs: &'a LHatElem) -> LHatElem {
        LHatElem::new(
            &self.loop_part - &rhs.loop_part,
            &self.central - &rhs.central,
        )
    }
}

impl Neg for &LHatElem {
    type Output = LHatElem;
    fn neg(self) -> LHatElem {
        LHatElem::new(-&self.loop_part, -&self.central)
    }
}

impl fmt::Display for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.render_parts();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Display for LHatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = self.loop_part.render_parts().join(" + ");
        if !self.central.is_zero() {
            let central = self.central.to_string();
            if out.is_empty() {
                out = central;
            } else if let Some(rest) = central.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&central);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
