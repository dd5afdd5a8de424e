use std::fmt;

use crate::scalar::Scalar;
use crate::tetrahedron::{BoxGen, GenSym};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    T,
    TPrime,
    TDoublePrime,
    X,
    Y,
    Z,
    C,
    CPrime,
    CDoublePrime,
}

impl Symbol {
    /// Accepts ASCII aliases (`tp`, `cpp`) and prime characters (`t'`, `c″`).
    pub fn lookup(name: &str) -> Option<Symbol> {
        let base: String = name
            .chars()
            .filter(|c| !matches!(c, '\'' | '′' | '″'))
            .collect();
        let primes: usize = name
            .chars()
            .map(|c| match c {
                '\'' | '′' => 1,
                '″' => 2,
                _ => 0,
            })
            .sum();
        let (stem, primes) = match (base.as_str(), primes) {
            ("tp", 0) | ("cp", 0) => (&base[..1], 1),
            ("tpp", 0) | ("cpp", 0) => (&base[..1], 2),
            (b, p) => (b, p),
        };
        Some(match (stem, primes) {
            ("t", 0) => Symbol::T,
            ("t", 1) => Symbol::TPrime,
            ("t", 2) => Symbol::TDoublePrime,
            ("c", 0) => Symbol::C,
            ("c", 1) => Symbol::CPrime,
            ("c", 2) => Symbol::CDoublePrime,
            ("X", 0) => Symbol::X,
            ("Y", 0) => Symbol::Y,
            ("Z", 0) => Symbol::Z,
            _ => return None,
        })
    }

    pub fn ty(self) -> Ty {
        match self {
            Symbol::T | Symbol::TPrime | Symbol::TDoublePrime => Ty::A,
            Symbol::X | Symbol::Y | Symbol::Z => Ty::Sl2,
            Symbol::C | Symbol::CPrime | Symbol::CDoublePrime => Ty::Lie,
        }
    }
}

/// A generator symbol: `x[i,j]` of the tetrahedron algebra, or `Xh[i,j]`,
/// `Ch[ij|kl]` of its central extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Box(BoxGen),
    Hat(GenSym),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ty {
    Scalar,
    A,
    Sl2,
    Lie,
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ty::Scalar => "a scalar",
            Ty::A => "an element of A",
            Ty::Sl2 => "an sl2 element",
            Ty::Lie => "a loop-algebra element",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Rational(Scalar),
    Symbol(Symbol),
    Gen(Generator),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Pow(Box<Node>, i64),
    Bracket(Box<Node>, Box<Node>),
    Tensor(Box<Node>, Box<Node>),
}

/// An AST node with the character offset where it starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub kind: Kind,
    pub pos: usize,
}

impl Node {
    pub fn new(kind: Kind, pos: usize) -> Self {
        Self { kind, pos }
    }
}
