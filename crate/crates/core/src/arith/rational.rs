use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;

/// Exact inverse over the rationals by Gauss-Jordan; `None` if singular.
pub fn inverse(a: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    assert!(a.is_square());
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(a[(i, j)].clone())
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `xᵀ B y` for a rational matrix `B` and integer vectors.
pub fn bilinear(b: &[Vec<BigRational>], x: &[BigInt], y: &[BigInt]) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += &b[i][j] * BigRational::from_integer(xi * yj);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_trefoil_form() {
        let a = IntMatrix::from_rows(vec![vec![-2, 1], vec![1, -2]]);
        let inv = inverse(&a).unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(inv, vec![vec![r(-2, 3), r(-1, 3)], vec![r(-1, 3), r(-2, 3)]]);
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert!(inverse(&a).is_none());
    }
}
