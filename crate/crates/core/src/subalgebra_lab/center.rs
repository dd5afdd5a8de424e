use super::coords::{coordinates, from_coordinates, DegreeCap};
use super::linalg::nullspace;
use super::span::{row_reduce, SpanBasis};
use super::LabError;
use crate::central_extension::LHatElem;
use crate::scalar::Scalar;
use crate::tetrahedron::{sigma_hat, GenSym};

/// Elements of degree `<= cap` commuting with all 15 generator images,
/// as an exact kernel. Brackets are taken at `cap + 1`, which holds them
/// without loss since every image has degree at most 1.
pub fn center_at_cap(cap: DegreeCap) -> Result<SpanBasis, LabError> {
    if cap.cap < 1 {
        return Err(LabError::CapTooSmall {
            cap: cap.cap,
            required: 1,
        });
    }
    let target = DegreeCap::new(cap.cap + 1);
    let images: Vec<LHatElem> = GenSym::all().into_iter().map(sigma_hat).collect();
    let n = cap.dim();

    // column k: the brackets of the k-th basis vector with every image
    let mut columns = Vec::with_capacity(n);
    for k in 0..n {
        let mut unit = vec![Scalar::from_integer(0.into()); n];
        unit[k] = Scalar::from_integer(1.into());
        let e = from_coordinates(&unit, cap);
        let mut col = Vec::with_capacity(images.len() * target.dim());
        for g in &images {
            col.extend(coordinates(&e.bracket(g), target)?);
        }
        columns.push(col);
    }
    let rows: Vec<Vec<Scalar>> = (0..columns[0].len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let kernel: Vec<LHatElem> = nullspace(rows, n)
        .iter()
        .map(|v| from_coordinates(v, cap))
        .collect();
    row_reduce(&kernel, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central_extension::CentralVec;

    #[test]
    fn center_is_spanned_by_the_classes() {
        for cap in 1..=2 {
            let cap = DegreeCap::new(cap);
            let center = center_at_cap(cap).unwrap();
            let classes =
                row_reduce(&[CentralVec::c().into(), CentralVec::c_prime().into()], cap).unwrap();
            assert_eq!(center, classes);
            assert!(center.contains(&CentralVec::c_double_prime().into()));
        }
    }

    #[test]
    fn cap_zero_is_rejected() {
        assert!(center_at_cap(DegreeCap::new(0)).is_err());
    }
}
