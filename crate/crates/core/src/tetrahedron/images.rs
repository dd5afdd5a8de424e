//! Images of generators: `σ` from the tetrahedron algebra into `L`, and `σ̂`
//! from its central extension into `L̂`.

use super::combinatorics::Partition22;
use super::generators::{BoxGen, GenSym};
use super::TetraError;
use crate::arith_a::AElem;
use crate::central_extension::{CentralVec, LElem, LHatElem};
use crate::scalar::int;
use crate::sl2::Equitable;

fn pair(a: Equitable, fa: AElem, b: Equitable, fb: AElem) -> LElem {
    &LElem::basis_tensor(a, fa) + &LElem::basis_tensor(b, fb)
}

fn minus_one(a: AElem) -> AElem {
    &a - &AElem::one()
}

/// `σ(x_{i,j})`. Listed edges map as tabulated; the reversed edge maps to
/// the negative, by `x_{i,j} + x_{j,i} = 0`.
pub fn sigma(g: BoxGen) -> LElem {
    use Equitable::*;
    let listed = |i: u8, j: u8| -> Option<LElem> {
        Some(match (i, j) {
            (1, 2) => LElem::basis_tensor(X, AElem::one()),
            (2, 3) => LElem::basis_tensor(Y, AElem::one()),
            (3, 1) => LElem::basis_tensor(Z, AElem::one()),
            (0, 3) => pair(Y, AElem::t(), Z, minus_one(AElem::t())),
            (0, 1) => pair(Z, AElem::t_prime(), X, minus_one(AElem::t_prime())),
            (0, 2) => pair(
                X,
                AElem::t_double_prime(),
                Y,
                minus_one(AElem::t_double_prime()),
            ),
            _ => return None,
        })
    };
    match listed(g.i, g.j) {
        Some(v) => v,
        None => -&listed(g.j, g.i).expect("every edge is listed in one direction"),
    }
}

/// `σ` on a centrally extended symbol; only `X` generators have images.
pub fn sigma_of_sym(g: GenSym) -> Result<LElem, TetraError> {
    match g {
        GenSym::X(i, j) => Ok(sigma(BoxGen::new(i, j)?)),
        GenSym::C(_) => Err(TetraError::CentralGenerator(g)),
    }
}

/// `π : X_{i,j} -> x_{i,j}`, `C_p -> 0` (`None`).
pub fn pi_box(g: GenSym) -> Option<BoxGen> {
    match g {
        GenSym::X(i, j) => Some(BoxGen { i, j }),
        GenSym::C(_) => None,
    }
}

/// `σ ∘ π`: the loop image of a centrally extended symbol, zero for `C_p`.
pub fn sigma_after_pi(g: GenSym) -> LElem {
    pi_box(g).map(sigma).unwrap_or_else(LElem::zero)
}

fn central_of_partition(p: Partition22) -> CentralVec {
    let [[_, partner], _] = p.blocks();
    let class = match partner {
        1 => CentralVec::c_double_prime(),
        2 => CentralVec::c(),
        _ => CentralVec::c_prime(),
    };
    class.scale(&int(-4))
}

fn central_of_edge(i: u8, j: u8) -> CentralVec {
    let (class, k) = match (i, j) {
        (1, 2) => (CentralVec::c_prime(), -4),
        (2, 3) => (CentralVec::c_double_prime(), -4),
        (3, 1) => (CentralVec::c(), -4),
        (2, 1) | (3, 2) | (1, 3) => (CentralVec::zero(), 0),
        (0, 3) => (CentralVec::c(), 4),
        (3, 0) => (CentralVec::c_double_prime(), 4),
        (0, 1) => (CentralVec::c_prime(), 4),
        (1, 0) => (CentralVec::c(), 4),
        (0, 2) => (CentralVec::c_double_prime(), 4),
        (2, 0) => (CentralVec::c_prime(), 4),
        _ => unreachable!("indices validated by GenSym constructors"),
    };
    class.scale(&int(k))
}

/// `σ̂(g)`: the loop part of `σ̂(X_{i,j})` is `σ(x_{i,j})`, plus a tabulated
/// central correction; `σ̂(C_p)` is central.
pub fn sigma_hat(g: GenSym) -> LHatElem {
    match g {
        GenSym::X(i, j) => LHatElem::new(sigma(BoxGen { i, j }), central_of_edge(i, j)),
        GenSym::C(p) => central_of_partition(p).into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_examples() {
        let x12 = sigma(BoxGen::new(1, 2).unwrap());
        assert_eq!(x12.to_string(), "T(X, 1)");
        let x03 = sigma(BoxGen::new(0, 3).unwrap());
        assert_eq!(x03.to_string(), "T(Y, t) + T(Z, -1 + t)");
        let x21 = sigma(BoxGen::new(2, 1).unwrap());
        assert_eq!(x21, -&x12);
        assert!(sigma_of_sym(GenSym::C(Partition22::ALL[0])).is_err());
    }

    #[test]
    fn sigma_hat_examples() {
        let x12 = sigma_hat(GenSym::x(1, 2).unwrap());
        assert_eq!(x12.to_string(), "T(X, 1) - 4*c'");
        let c = sigma_hat(GenSym::c_of_pair(0, 2).unwrap());
        assert_eq!(c, CentralVec::c().scale(&int(-4)).into());
        let x30 = sigma_hat(GenSym::x(3, 0).unwrap());
        let expected = LHatElem::new(
            -&sigma(BoxGen::new(0, 3).unwrap()),
            CentralVec::c_double_prime().scale(&int(4)),
        );
        assert_eq!(x30, expected);
    }

    #[test]
    fn partition_images() {
        let images: Vec<String> = Partition22::ALL
            .iter()
            .map(|p| sigma_hat(GenSym::C(*p)).to_string())
            .collect();
        // -4c'', -4c, -4c'
        assert_eq!(images, ["4*c + 4*c'", "-4*c", "-4*c'"]);
    }
}
