//! `sl2` in the equitable basis `X = 2e - h`, `Y = -2f - h`, `Z = h`, where
//! `[X,Y] = 2X + 2Y`, `[Y,Z] = 2Y + 2Z`, `[Z,X] = 2Z + 2X`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::scalar::{int, render_linear, Scalar};

pub type Matrix3 = [[Scalar; 3]; 3];

/// Coordinates in the equitable basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sl2Vec {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

/// Which equitable basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Equitable {
    X,
    Y,
    Z,
}

impl Equitable {
    pub const ALL: [Equitable; 3] = [Equitable::X, Equitable::Y, Equitable::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Equitable::X => "X",
            Equitable::Y => "Y",
            Equitable::Z => "Z",
        }
    }
}

/// Coordinates in the Chevalley basis `e, f, h`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CanonicalSl2Vec {
    pub e: Scalar,
    pub f: Scalar,
    pub h: Scalar,
}

impl Sl2Vec {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: Equitable) -> Self {
        let mut v = Self::zero();
        *v.coord_mut(b) = int(1);
        v
    }

    pub fn coord(&self, b: Equitable) -> &Scalar {
        match b {
            Equitable::X => &self.x,
            Equitable::Y => &self.y,
            Equitable::Z => &self.z,
        }
    }

    pub fn coord_mut(&mut self, b: Equitable) -> &mut Scalar {
        match b {
            Equitable::X => &mut self.x,
            Equitable::Y => &mut self.y,
            Equitable::Z => &mut self.z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(&self.x * s, &self.y * s, &self.z * s)
    }

    pub fn bracket(&self, other: &Sl2Vec) -> Sl2Vec {
        // components along [X,Y], [Y,Z], [Z,X]
        let xy = &self.x * &other.y - &self.y * &other.x;
        let yz = &self.y * &other.z - &self.z * &other.y;
        let zx = &self.z * &other.x - &self.x * &other.z;
        let two = int(2);
        Sl2Vec::new(&two * (&xy + &zx), &two * (&xy + &yz), &two * (&yz + &zx))
    }

    pub fn from_canonical(v: &CanonicalSl2Vec) -> Self {
        // e = (X + Z)/2, f = -(Y + Z)/2, h = Z
        let half = Scalar::new(1.into(), 2.into());
        Sl2Vec::new(&v.e * &half, -(&v.f * &half), (&v.e - &v.f) * &half + &v.h)
    }

    pub fn to_canonical(&self) -> CanonicalSl2Vec {
        CanonicalSl2Vec {
            e: &self.x * int(2),
            f: &self.y * int(-2),
            h: &self.z - &self.x - &self.y,
        }
    }
}

impl<'a> Add<&'a Sl2Vec> for &'a Sl2Vec {
    type Output = Sl2Vec;
    fn add(self, rhs: &'a Sl2Vec) -> Sl2Vec {
        Sl2Vec::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl<'a> Sub<&'a Sl2Vec> for &'a Sl2Vec {
    type Output = Sl2Vec;
    fn sub(self, rhs: &'a Sl2Vec) -> Sl2Vec {
        Sl2Vec::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Neg for &Sl2Vec {
    type Output = Sl2Vec;
    fn neg(self) -> Sl2Vec {
        Sl2Vec::new(-&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Display for Sl2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = Equitable::ALL
            .iter()
            .map(|b| (self.coord(*b), Some(b.symbol().to_string())));
        f.write_str(&render_linear(terms))
    }
}

/// Matrix of `ad u` in the equitable basis; column `j` is `[u, e_j]`.
pub fn adjoint_matrix(u: &Sl2Vec) -> Matrix3 {
    let mut m: Matrix3 = Default::default();
    for (j, b) in Equitable::ALL.iter().enumerate() {
        let image = u.bracket(&Sl2Vec::basis(*b));
        for (i, row) in Equitable::ALL.iter().enumerate() {
            m[i][j] = image.coord(*row).clone();
        }
    }
    m
}

fn trace_of_product(a: &Matrix3, b: &Matrix3) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..3 {
        for k in 0..3 {
            acc += &a[i][k] * &b[k][i];
        }
    }
    acc
}

/// Killing form `(u|v) = tr(ad u ∘ ad v)`.
pub fn killing(u: &Sl2Vec, v: &Sl2Vec) -> Scalar {
    trace_of_product(&adjoint_matrix(u), &adjoint_matrix(v))
}

/// Gram matrix of the Killing form on `(X, Y, Z)`, computed once.
pub fn killing_gram() -> &'static Matrix3 {
    static GRAM: OnceLock<Matrix3> = OnceLock::new();
    GRAM.get_or_init(|| {
        let mut g: Matrix3 = Default::default();
        for a in Equitable::ALL {
            for b in Equitable::ALL {
                g[a.index()][b.index()] = killing(&Sl2Vec::basis(a), &Sl2Vec::basis(b));
            }
        }
        g
    })
}
