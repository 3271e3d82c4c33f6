use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::IntMatrix;

/// `U · A · W = D` with `U`, `W` unimodular and `D` diagonal,
/// `d₁ | d₂ | … `, all `dᵢ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub w: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `D`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with both change-of-basis matrices.
///
/// Pivots on the entry of least absolute value and clears its row and column
/// by Euclidean steps; a leftover entry not divisible by the pivot is folded
/// into the pivot row, which strictly shrinks the pivot.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut w = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = least_nonzero(&d, t..m, t..n) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        w.swap_cols(t, pj);

        loop {
            // Clear row t and column t.
            loop {
                let col = least_nonzero(&d, t..m, t..t + 1);
                let row = least_nonzero(&d, t..t + 1, t..n);
                let (bi, bj) = match (col, row) {
                    (Some(c), Some(r)) => {
                        if d[c].abs() <= d[r].abs() {
                            c
                        } else {
                            r
                        }
                    }
                    (Some(c), None) => c,
                    (None, Some(r)) => r,
                    (None, None) => unreachable!("pivot row and column cannot both vanish"),
                };
                d.swap_rows(t, bi);
                u.swap_rows(t, bi);
                d.swap_cols(t, bj);
                w.swap_cols(t, bj);

                let pivot = d[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..m {
                    if d[(i, t)].is_zero() {
                        continue;
                    }
                    let q = -d[(i, t)].div_floor(&pivot);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    clean &= d[(i, t)].is_zero();
                }
                for j in t + 1..n {
                    if d[(t, j)].is_zero() {
                        continue;
                    }
                    let q = -d[(t, j)].div_floor(&pivot);
                    d.add_col_multiple(j, t, &q);
                    w.add_col_multiple(j, t, &q);
                    clean &= d[(t, j)].is_zero();
                }
                if clean {
                    break;
                }
            }

            let pivot = d[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm { u, d, w }
}

fn least_nonzero(d: &IntMatrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = d[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| v < *b) {
                best = Some(((i, j), v));
            }
        }
    }
    best.map(|(pos, _)| pos)
}
