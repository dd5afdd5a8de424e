use num_traits::Zero;

use super::CentralVec;
use crate::arith_a::{AElem, Sector, SymCoords};
use crate::scalar::{binomial_scalar, int, sign_pow, Scalar};

/// `c`, `c'`, `c''` for the sectors `t`, `t'`, `t''`.
pub fn sector_class(sector: Sector) -> CentralVec {
    match sector {
        Sector::T => CentralVec::c(),
        Sector::TPrime => CentralVec::c_prime(),
        Sector::TDoublePrime => CentralVec::c_double_prime(),
    }
}

/// `<f^i, g^j>` for symmetric basis powers, `i, j >= 1`.
///
/// Pairs inside one sector vanish. For `g = f'` the entry is
/// `(-1)^i i C(j,i)` times the class of `f`. Reversing the arguments
/// negates the entry.
pub fn cocycle_table(row: Sector, i: u32, col: Sector, j: u32) -> CentralVec {
    debug_assert!(i >= 1 && j >= 1);
    if col == row.next() {
        let coeff = sign_pow(i) * int(i as i64) * binomial_scalar(j, i);
        sector_class(row).scale(&coeff)
    } else if row == col.next() {
        let coeff = sign_pow(j + 1) * int(j as i64) * binomial_scalar(i, j);
        sector_class(col).scale(&coeff)
    } else {
        CentralVec::zero()
    }
}

/// Bilinear extension of [`cocycle_table`]; the constant `1` pairs to zero.
pub fn cocycle_sym(a: &SymCoords, b: &SymCoords) -> CentralVec {
    let mut out = CentralVec::zero();
    for row in Sector::ALL {
        for (i, ca) in a.sector_terms(row) {
            for col in [row.next(), row.next().next()] {
                for (j, cb) in b.sector_terms(col) {
                    let coeff: Scalar = ca * cb;
                    if coeff.is_zero() {
                        continue;
                    }
                    out.add_scaled(&cocycle_table(row, i, col, j), &coeff);
                }
            }
        }
    }
    out
}

pub fn cocycle(a: &AElem, b: &AElem) -> CentralVec {
    cocycle_sym(&a.to_sym(), &b.to_sym())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        use Sector::*;
        assert_eq!(
            cocycle_table(T, 1, TPrime, 1),
            CentralVec::c().scale(&int(-1))
        );
        assert_eq!(
            cocycle_table(T, 1, TPrime, 2),
            CentralVec::c().scale(&int(-2))
        );
        assert!(cocycle_table(T, 2, TPrime, 1).is_zero());
        assert_eq!(
            cocycle_table(TDoublePrime, 1, T, 1),
            CentralVec::new(int(1), int(1))
        );
        assert!(cocycle_table(TPrime, 3, TPrime, 2).is_zero());
    }

    #[test]
    fn table_matches_printed_entries() {
        use Sector::*;
        // Row (t')^i, column t^j: (-1)^(j+1) j C(i,j) c.
        for i in 1..=5u32 {
            for j in 1..=5u32 {
                let expected = CentralVec::c()
                    .scale(&(sign_pow(j + 1) * int(j as i64) * binomial_scalar(i, j)));
                assert_eq!(cocycle_table(TPrime, i, T, j), expected);
                // Row t^i, column (t'')^j: (-1)^(j+1) j C(i,j) c''.
                let expected = CentralVec::c_double_prime()
                    .scale(&(sign_pow(j + 1) * int(j as i64) * binomial_scalar(i, j)));
                assert_eq!(cocycle_table(T, i, TDoublePrime, j), expected);
                // Row (t')^i, column (t'')^j: (-1)^i i C(j,i) c'.
                let expected = CentralVec::c_prime()
                    .scale(&(sign_pow(i) * int(i as i64) * binomial_scalar(j, i)));
                assert_eq!(cocycle_table(TPrime, i, TDoublePrime, j), expected);
            }
        }
    }

    #[test]
    fn cocycle_examples() {
        let t = AElem::t();
        assert_eq!(cocycle(&t, &AElem::t_pow(-1)), CentralVec::c());
        let tp = AElem::t_prime();
        assert_eq!(cocycle(&tp, &tp.inverse().unwrap()), CentralVec::c_prime());
        assert!(cocycle(&t, &t).is_zero());

        let mut total = CentralVec::zero();
        for s in Sector::ALL {
            let f = AElem::sector_pow(s, 1);
            total = &total + &cocycle(&f, &f.inverse().unwrap());
        }
        assert!(total.is_zero());
    }

    #[test]
    fn constants_pair_to_zero() {
        let a = &AElem::t_pow(3) + &AElem::shift_pow(-2);
        assert!(cocycle(&AElem::one(), &a).is_zero());
        assert!(cocycle(&a, &AElem::from(5)).is_zero());
        assert!(cocycle(&AElem::zero(), &a).is_zero());
    }
}
