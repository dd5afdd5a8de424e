//! Dense exact row reduction over `Scalar`.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Reduced row echelon form of `rows` (each of length `ncols`), zero rows
/// dropped. Returns the rows and their pivot columns, strictly increasing.
pub fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = Scalar::one() / &rows[next][col];
        if !inv.is_one() {
            for x in rows[next].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// A basis of `{v : M v = 0}` for the matrix with the given rows.
pub fn nullspace(rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let (reduced, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rref_example() {
        let (rows, pivots) = rref(m(&[&[0, 2, 4], &[1, 1, 1], &[1, 2, 3]]), 3);
        assert_eq!(pivots, [0, 1]);
        assert_eq!(rows, m(&[&[1, 0, -1], &[0, 1, 2]]));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let kernel = nullspace(a.clone(), 4);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            for row in &a {
                let dot: Scalar = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn rank_of_empty_and_zero() {
        assert_eq!(rank(Vec::new(), 3), 0);
        assert_eq!(rank(m(&[&[0, 0]]), 2), 0);
    }
}
