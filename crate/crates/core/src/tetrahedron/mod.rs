//! The tetrahedron algebra, its central extension, and the `A4`-indexed
//! presentation: generators, relation lists, images in `L` and `L̂`, and
//! exact verification of every relation instance.

pub mod a4;
pub mod combinatorics;
pub mod expr;
pub mod generators;
pub mod images;
pub mod relations;
pub mod verify;

use thiserror::Error;

pub use combinatorics::{Partition22, Perm};
pub use expr::{Expr, Formal, Word};
pub use generators::{A4Gen, BoxGen, GenSym};
pub use images::{sigma, sigma_after_pi, sigma_hat};
pub use relations::{Clause, Convention, RelationInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TetraError {
    #[error("index {0} out of range 0..=3")]
    IndexOutOfRange(u8),
    #[error("indices {0:?} are not distinct")]
    NotDistinct(Vec<u8>),
    #[error("{0:?} is not a permutation of 0..=3")]
    NotAPermutation([u8; 4]),
    #[error("{0} is not a non-identity element of the Klein four-group")]
    NotInKlein(Perm),
    #[error("{0} is an odd permutation")]
    NotEven(Perm),
    #[error("{0} is central and has no image in the loop algebra")]
    CentralGenerator(GenSym),
}
