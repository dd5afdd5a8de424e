use std::fmt;

use super::combinatorics::{check_index, partition_of_pair, Partition22, Perm};
use super::TetraError;

/// Generator `x_{i,j}` of the tetrahedron algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxGen {
    pub i: u8,
    pub j: u8,
}

impl BoxGen {
    pub fn new(i: u8, j: u8) -> Result<Self, TetraError> {
        check_index(i)?;
        check_index(j)?;
        if i == j {
            return Err(TetraError::NotDistinct(vec![i, j]));
        }
        Ok(BoxGen { i, j })
    }

    pub fn all() -> Vec<BoxGen> {
        ordered_pairs()
            .into_iter()
            .map(|(i, j)| BoxGen { i, j })
            .collect()
    }
}

impl fmt::Display for BoxGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.i, self.j)
    }
}

/// Generators of the centrally extended presentation: `X_{i,j}` and `C_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSym {
    X(u8, u8),
    C(Partition22),
}

impl GenSym {
    pub fn x(i: u8, j: u8) -> Result<Self, TetraError> {
        let g = BoxGen::new(i, j)?;
        Ok(GenSym::X(g.i, g.j))
    }

    /// `C_p` for `p` the partition containing the pair `{i, j}`.
    pub fn c_of_pair(i: u8, j: u8) -> Result<Self, TetraError> {
        Ok(GenSym::C(partition_of_pair(i, j)?))
    }

    /// The 12 `X` generators followed by the 3 `C` generators.
    pub fn all() -> Vec<GenSym> {
        let mut out: Vec<GenSym> = ordered_pairs()
            .into_iter()
            .map(|(i, j)| GenSym::X(i, j))
            .collect();
        out.extend(Partition22::ALL.iter().map(|p| GenSym::C(*p)));
        out
    }

    pub fn is_central(self) -> bool {
        matches!(self, GenSym::C(_))
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSym::X(i, j) => write!(f, "Xh[{i},{j}]"),
            GenSym::C(p) => write!(f, "Ch[{p}]"),
        }
    }
}

/// Generators of the `A4`-indexed presentation: `X_α` for `α ∈ A4` and
/// `C_η` for `η ∈ N'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum A4Gen {
    X(Perm),
    C(Perm),
}

impl fmt::Display for A4Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            A4Gen::X(a) => write!(f, "X_{a}"),
            A4Gen::C(e) => write!(f, "C_{e}"),
        }
    }
}

pub(crate) fn ordered_pairs() -> Vec<(u8, u8)> {
    let mut out = Vec::with_capacity(12);
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

pub(crate) fn ordered_triples() -> Vec<(u8, u8, u8)> {
    let mut out = Vec::with_capacity(24);
    for (i, j) in ordered_pairs() {
        for k in 0..4 {
            if k != i && k != j {
                out.push((i, j, k));
            }
        }
    }
    out
}

pub(crate) fn ordered_quadruples() -> Vec<(u8, u8, u8, u8)> {
    ordered_triples()
        .into_iter()
        .map(|(i, j, k)| (i, j, k, 6 - i - j - k))
        .collect()
}
