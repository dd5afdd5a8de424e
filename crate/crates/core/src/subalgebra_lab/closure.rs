use super::coords::DegreeCap;
use super::span::{row_reduce, SpanBasis};
use super::LabError;
use crate::central_extension::LHatElem;
use crate::par::Execution;

/// Least subspace containing `generators` and closed under the bracket,
/// where brackets of degree above `cap` are discarded.
///
/// Each round brackets every pair of current basis vectors, reduces
/// everything at a cap wide enough to hold the products, and keeps the part
/// of degree `<= cap`; bracketing basis pairs suffices by bilinearity.
/// Rounds stop when the dimension stops growing.
pub fn subalgebra_closure(
    generators: &[LHatElem],
    cap: DegreeCap,
    exec: Execution,
) -> Result<SpanBasis, LabError> {
    let mut basis = row_reduce(generators, cap)?;
    loop {
        let elems = basis.elements();
        let pairs: Vec<(usize, usize)> = (0..elems.len())
            .flat_map(|i| (i + 1..elems.len()).map(move |j| (i, j)))
            .collect();
        let brackets = exec.map(&pairs, |&(i, j)| elems[i].bracket(&elems[j]));
        let wide = DegreeCap::new(
            brackets
                .iter()
                .map(LHatElem::degree)
                .max()
                .unwrap_or(0)
                .max(cap.cap),
        );
        let mut all = elems;
        all.extend(brackets);
        let next = row_reduce(&all, wide)?.restrict(cap);
        if next.dim() == basis.dim() {
            return Ok(basis);
        }
        basis = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith_a::AElem;
    use crate::central_extension::{CentralVec, LElem};
    use crate::sl2::Equitable;

    #[test]
    fn central_generator_is_closed() {
        let span = subalgebra_closure(
            &[CentralVec::c().into()],
            DegreeCap::new(2),
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!(span.dim(), 1);
    }

    #[test]
    fn two_constants_are_already_closed() {
        // [X, Y] = 2X + 2Y stays in span{X, Y}
        let x = LElem::basis_tensor(Equitable::X, AElem::one()).into();
        let y = LElem::basis_tensor(Equitable::Y, AElem::one()).into();
        let span = subalgebra_closure(&[x, y], DegreeCap::new(0), Execution::Sequential).unwrap();
        assert_eq!(span.dim(), 2);
        let z: LHatElem = LElem::basis_tensor(Equitable::Z, AElem::one()).into();
        assert!(!span.contains(&z));
    }

    #[test]
    fn loop_generators_fill_degree_zero_and_one() {
        let x = LElem::basis_tensor(Equitable::X, AElem::one()).into();
        let yt = LElem::basis_tensor(Equitable::Y, AElem::t()).into();
        let y = LElem::basis_tensor(Equitable::Y, AElem::one()).into();
        let z = LElem::basis_tensor(Equitable::Z, AElem::one()).into();
        let span =
            subalgebra_closure(&[x, y, z, yt], DegreeCap::new(1), Execution::Sequential).unwrap();
        // sl2 ⊗ 1 and sl2 ⊗ t; nothing reaches the poles
        assert_eq!(span.dim(), 6);
    }

    #[test]
    fn overflowing_generator_is_rejected() {
        let g = LElem::basis_tensor(Equitable::X, AElem::t_pow(2)).into();
        assert!(subalgebra_closure(&[g], DegreeCap::new(1), Execution::Sequential).is_err());
    }
}
