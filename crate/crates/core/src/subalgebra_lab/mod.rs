//! Bounded-degree linear algebra over `L̂`: coordinates on a degree
//! truncation, exact row reduction, subalgebra closure, the center, and the
//! Onsager decomposition.
//!
//! Closures discard brackets above the cap, so computed spaces are
//! subspaces of the true subalgebras. Direct-sum checks on them are sound;
//! whether they fill a truncation is recorded, not asserted.

pub mod center;
pub mod closure;
pub mod coords;
pub mod linalg;
pub mod onsager;
pub mod span;

use thiserror::Error;

pub use center::center_at_cap;
pub use closure::subalgebra_closure;
pub use coords::{coordinates, from_coordinates, DegreeCap};
pub use onsager::{onsager_report, onsager_spaces};
pub use span::{row_reduce, SpanBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("term {term} has degree {degree}, above cap {cap}")]
    DegreeOverflow { term: String, degree: u32, cap: u32 },
    #[error("cap {cap} is below the minimum {required}")]
    CapTooSmall { cap: u32, required: u32 },
}
