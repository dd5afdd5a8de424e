use num_traits::Zero;

use super::coords::{coordinates, from_coordinates, DegreeCap};
use super::linalg::{rank, rref};
use super::LabError;
use crate::central_extension::LHatElem;
use crate::scalar::Scalar;

/// A subspace of truncated `L̂` held as a reduced echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis {
    cap: DegreeCap,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn zero(cap: DegreeCap) -> Self {
        Self {
            cap,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn from_rows(rows: Vec<Vec<Scalar>>, cap: DegreeCap) -> Self {
        let (rows, pivots) = rref(rows, cap.dim());
        Self { cap, rows, pivots }
    }

    pub fn cap(&self) -> DegreeCap {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn elements(&self) -> Vec<LHatElem> {
        self.rows
            .iter()
            .map(|r| from_coordinates(r, self.cap))
            .collect()
    }

    /// Exact membership; elements above the cap are never members.
    pub fn contains(&self, u: &LHatElem) -> bool {
        let Ok(mut v) = coordinates(u, self.cap) else {
            return false;
        };
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &factor * r;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &SpanBasis) -> bool {
        self.elements().iter().all(|u| other.contains(u))
    }

    /// The part of degree at most `cap`, re-expressed at that cap.
    pub fn restrict(&self, cap: DegreeCap) -> SpanBasis {
        assert!(cap <= self.cap, "restriction must lower the cap");
        let rows = self
            .rows
            .iter()
            .zip(&self.pivots)
            .filter(|(_, &p)| self.cap.degree_of(p) <= cap.cap)
            .map(|(row, _)| {
                coordinates(&from_coordinates(row, self.cap), cap).expect("pivot bounds the degree")
            })
            .collect();
        SpanBasis::from_rows(rows, cap)
    }

    pub fn sum(&self, other: &SpanBasis) -> SpanBasis {
        assert_eq!(self.cap, other.cap, "spans at different caps");
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        SpanBasis::from_rows(rows, self.cap)
    }

    /// `dim(U ∩ W) = dim U + dim W - dim(U + W)`.
    pub fn intersection_dim(&self, other: &SpanBasis) -> usize {
        assert_eq!(self.cap, other.cap, "spans at different caps");
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        self.dim() + other.dim() - rank(rows, self.cap.dim())
    }
}

pub fn row_reduce(vectors: &[LHatElem], cap: DegreeCap) -> Result<SpanBasis, LabError> {
    let rows = vectors
        .iter()
        .map(|v| coordinates(v, cap))
        .collect::<Result<_, _>>()?;
    Ok(SpanBasis::from_rows(rows, cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith_a::AElem;
    use crate::central_extension::{CentralVec, LElem};
    use crate::scalar::int;
    use crate::sl2::Equitable;
    use crate::tetrahedron::{sigma_hat, GenSym};

    fn x_one() -> LHatElem {
        LElem::basis_tensor(Equitable::X, AElem::one()).into()
    }

    #[test]
    fn central_classes_span_two() {
        let classes: Vec<LHatElem> = [
            CentralVec::c(),
            CentralVec::c_prime(),
            CentralVec::c_double_prime(),
        ]
        .into_iter()
        .map(Into::into)
        .collect();
        let span = row_reduce(&classes, DegreeCap::new(1)).unwrap();
        assert_eq!(span.dim(), 2);
    }

    #[test]
    fn dependent_pair() {
        let span = row_reduce(&[x_one(), x_one().scale(&int(2))], DegreeCap::new(1)).unwrap();
        assert_eq!(span.dim(), 1);
        assert!(span.contains(&x_one().scale(&int(-7))));
        assert!(!span.contains(&CentralVec::c().into()));
    }

    #[test]
    fn central_generator_images_span_two() {
        let images: Vec<LHatElem> = GenSym::all()
            .into_iter()
            .filter(|g| g.is_central())
            .map(sigma_hat)
            .collect();
        assert_eq!(row_reduce(&images, DegreeCap::new(1)).unwrap().dim(), 2);
    }

    #[test]
    fn order_independent_and_idempotent() {
        let gens: Vec<LHatElem> = GenSym::all().into_iter().map(sigma_hat).collect();
        let cap = DegreeCap::new(2);
        let a = row_reduce(&gens, cap).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        assert_eq!(a, row_reduce(&reversed, cap).unwrap());
        assert_eq!(a, row_reduce(&a.elements(), cap).unwrap());
        assert!(a.pivots().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn restriction_keeps_low_degree_part() {
        let t = LElem::basis_tensor(Equitable::Y, AElem::t()).into();
        let t2: LHatElem = LElem::basis_tensor(Equitable::Y, AElem::t_pow(2)).into();
        // t + t^2 and t^2 span a space whose degree <= 1 part is T(Y, t)
        let span = row_reduce(&[&t + &t2, t2], DegreeCap::new(2)).unwrap();
        let low = span.restrict(DegreeCap::new(1));
        assert_eq!(low, row_reduce(&[t], DegreeCap::new(1)).unwrap());
    }

    #[test]
    fn intersections() {
        let cap = DegreeCap::new(1);
        let a = row_reduce(&[x_one(), CentralVec::c().into()], cap).unwrap();
        let b = row_reduce(&[&x_one() + &LHatElem::from(CentralVec::c())], cap).unwrap();
        let c = row_reduce(&[CentralVec::c_prime().into()], cap).unwrap();
        assert_eq!(a.intersection_dim(&b), 1);
        assert_eq!(a.intersection_dim(&c), 0);
        assert_eq!(a.sum(&c).dim(), 3);
        assert!(b.is_subspace_of(&a));
    }
}
