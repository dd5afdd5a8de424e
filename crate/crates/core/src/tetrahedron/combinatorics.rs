//! Permutations of `I = {0,1,2,3}`, parity of ordered triples, and the three
//! partitions of `I` into two pairs.

use std::fmt;

use super::TetraError;

pub const INDICES: [u8; 4] = [0, 1, 2, 3];

pub(crate) fn check_index(i: u8) -> Result<u8, TetraError> {
    if i < 4 {
        Ok(i)
    } else {
        Err(TetraError::IndexOutOfRange(i))
    }
}

/// A bijection of `I`, stored as its table of images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm([u8; 4]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2, 3]);
    /// `ζ = (01)(23)`.
    pub const ZETA: Perm = Perm([1, 0, 3, 2]);
    /// `ϑ = (012)`.
    pub const THETA: Perm = Perm([1, 2, 0, 3]);

    pub fn from_images(images: [u8; 4]) -> Result<Self, TetraError> {
        let mut seen = [false; 4];
        for &i in &images {
            let i = check_index(i)? as usize;
            if seen[i] {
                return Err(TetraError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// All 24 permutations in lexicographic order of image tables.
    pub fn all() -> Vec<Perm> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Ok(p) = Perm::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn alternating() -> Vec<Perm> {
        Perm::all().into_iter().filter(|p| p.is_even()).collect()
    }

    /// `N' = {(01)(23), (02)(13), (03)(12)}`, ordered by the partner of 0.
    pub fn klein_nonidentity() -> [Perm; 3] {
        [Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1]), Perm([3, 2, 1, 0])]
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    pub fn apply(self, i: u8) -> u8 {
        self.0[i as usize]
    }

    /// The permutation that applies `first`, then `then`.
    pub fn then(first: Perm, then: Perm) -> Perm {
        Perm(first.0.map(|i| then.apply(i)))
    }

    pub fn inverse(self) -> Perm {
        let mut inv = [0u8; 4];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `+1` or `-1`, from the cycle decomposition: sign is `(-1)^(n - cycles)`.
    pub fn sign(self) -> i8 {
        let mut seen = [false; 4];
        let mut cycles = 0;
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
            }
        }
        if (4 - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(self) -> bool {
        self.sign() == 1
    }

    pub fn in_klein_nonidentity(self) -> bool {
        Perm::klein_nonidentity().contains(&self)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation without fixed points, `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 4];
        let mut wrote = false;
        for start in 0..4u8 {
            if seen[start as usize] || self.apply(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            while !seen[i as usize] {
                seen[i as usize] = true;
                write!(f, "{i}")?;
                i = self.apply(i);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Even iff the unique `τ` with `τ(0)=i, τ(1)=j, τ(2)=k` is in `A4`.
pub fn parity(i: u8, j: u8, k: u8) -> Result<Parity, TetraError> {
    for x in [i, j, k] {
        check_index(x)?;
    }
    if i == j || j == k || i == k {
        return Err(TetraError::NotDistinct(vec![i, j, k]));
    }
    let last = 6 - i - j - k;
    let tau = Perm([i, j, k, last]);
    Ok(if tau.is_even() {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// A partition of `I` into two pairs, identified by the partner of 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition22 {
    partner_of_zero: u8,
}

impl Partition22 {
    pub const ALL: [Partition22; 3] = [
        Partition22 { partner_of_zero: 1 },
        Partition22 { partner_of_zero: 2 },
        Partition22 { partner_of_zero: 3 },
    ];

    /// The two blocks, each sorted, block containing 0 first.
    pub fn blocks(self) -> [[u8; 2]; 2] {
        let p = self.partner_of_zero;
        let mut rest = INDICES.iter().copied().filter(|&i| i != 0 && i != p);
        let a = rest.next().unwrap();
        let b = rest.next().unwrap();
        [[0, p], [a, b]]
    }

    pub fn contains_pair(self, i: u8, j: u8) -> bool {
        self.blocks()
            .iter()
            .any(|b| (b[0] == i && b[1] == j) || (b[0] == j && b[1] == i))
    }

    /// Parses `01|23` style text (block order and order inside blocks free).
    pub fn parse(text: &str) -> Option<Partition22> {
        let digits: Vec<u8> = text
            .chars()
            .filter(|c| !matches!(c, '|' | '{' | '}' | ' '))
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()?;
        if digits.len() != 4 || !text.contains('|') {
            return None;
        }
        let p = partition_of_pair(digits[0], digits[1]).ok()?;
        p.contains_pair(digits[2], digits[3]).then_some(p)
    }
}

impl fmt::Display for Partition22 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.blocks();
        write!(f, "{}{}|{}{}", a[0], a[1], b[0], b[1])
    }
}

/// `{{i,j}, I \ {i,j}}`.
pub fn partition_of_pair(i: u8, j: u8) -> Result<Partition22, TetraError> {
    check_index(i)?;
    check_index(j)?;
    if i == j {
        return Err(TetraError::NotDistinct(vec![i, j]));
    }
    let partner = if i == 0 {
        j
    } else if j == 0 {
        i
    } else {
        6 - i - j
    };
    Ok(Partition22 {
        partner_of_zero: partner,
    })
}

/// The orbits of a nonidentity element of the Klein four-group.
pub fn orbit_partition(eta: Perm) -> Result<Partition22, TetraError> {
    if !eta.in_klein_nonidentity() {
        return Err(TetraError::NotInKlein(eta));
    }
    Ok(Partition22 {
        partner_of_zero: eta.apply(0),
    })
}
