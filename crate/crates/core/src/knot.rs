//! Seifert matrices and the abelian invariants read directly off them.
//!
//! A knot enters the library as a Seifert matrix `V` of even size `2g`.
//! Everything downstream depends only on `V`:
//!
//! * the Alexander polynomial `Δ(t) ≐ det(V − tVᵀ)`,
//! * the determinant `|det(V + Vᵀ)| = |Δ(−1)|`, which is the order of the
//!   first homology of the 2-fold branched cover.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::matrix::bareiss_determinant;
use crate::arith::{IntMatrix, IntPoly};
use crate::error::{Error, Result};

/// Square integer matrix of even size with `det(V − Vᵀ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::MalformedSeifertMatrix(format!(
                "matrix is {}x{}, expected square",
                entries.rows(),
                entries.cols()
            )));
        }
        if !entries.rows().is_multiple_of(2) {
            return Err(Error::MalformedSeifertMatrix(format!(
                "dimension {} is odd",
                entries.rows()
            )));
        }
        let skew = entries.sub(&entries.transpose()).determinant();
        if !skew.is_one() {
            return Err(Error::MalformedSeifertMatrix(format!(
                "det(V - V^T) = {skew}, expected 1"
            )));
        }
        Ok(SeifertMatrix(entries))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let m = IntMatrix::try_from_rows(rows).ok_or_else(|| Error::MalformedSeifertMatrix("ragged rows".into()))?;
        Self::new(m)
    }

    /// The 0×0 matrix.
    pub fn unknot() -> Self {
        SeifertMatrix(IntMatrix::zeros(0, 0))
    }

    /// `[[−1, 1], [0, −1]]`, a trefoil.
    pub fn trefoil() -> Self {
        Self::from_rows(vec![vec![-1, 1], vec![0, -1]]).expect("valid literal")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.rows()
    }

    pub fn genus(&self) -> usize {
        self.0.rows() / 2
    }

    /// `V + Vᵀ`, the presentation matrix of `H₁` of the 2-fold branched cover.
    pub fn symmetrized(&self) -> IntMatrix {
        self.0.add(&self.0.transpose())
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Integer Laurent polynomial up to multiplication by `±t^k`.
///
/// Stored normalized: the lowest-degree coefficient sits at index 0 and the
/// leading coefficient is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn normalize(coeffs: Vec<BigInt>) -> Self {
        let start = coeffs.iter().position(|c| !c.is_zero());
        let mut coeffs = match start {
            None => Vec::new(),
            Some(s) => {
                let end = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                coeffs[s..=end].to_vec()
            }
        };
        if coeffs.last().is_some_and(Signed::is_negative) {
            for c in coeffs.iter_mut() {
                *c = -&*c;
            }
        }
        LaurentPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::normalize(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// Ascending coefficients of the normalized representative.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = IntPoly::new(self.coeffs.clone()).mul(&IntPoly::new(other.coeffs.clone()));
        Self::normalize(p.into_coeffs())
    }

    /// `Δ(t) ≐ Δ(t⁻¹)`: the coefficient list reads the same reversed, up to an overall sign.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        let rev: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        let neg: Vec<BigInt> = rev.iter().map(|c| -c).collect();
        rev == self.coeffs || neg == self.coeffs
    }

    /// For `Δ = a t² − (1 + 2a) t + a` with `a > 0`, returns `a`.
    pub fn quadratic_parameter(&self) -> Option<u64> {
        match self.coeffs.as_slice() {
            [a, b, c] if a == c && a.is_positive() && *b == -(BigInt::one() + a * BigInt::from(2)) => a.to_u64(),
            _ => None,
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if deg == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{deg}")?,
            }
        }
        Ok(())
    }
}

/// One row of a knot table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: u32,
    pub alexander: LaurentPolynomial,
    pub determinant: u64,
}

impl KnotRecord {
    /// Checks `Δ(1) = ±1`, Alexander symmetry, and `determinant = |Δ(−1)|` odd.
    pub fn new(
        name: impl Into<String>,
        crossings: u32,
        alexander: LaurentPolynomial,
        determinant: u64,
    ) -> Result<Self> {
        let name = name.into();
        if !alexander.eval(1).abs().is_one() {
            return Err(Error::InconsistentRecord(format!(
                "{name}: Alexander polynomial has Δ(1) = {}",
                alexander.eval(1)
            )));
        }
        if !alexander.is_palindromic_up_to_sign() {
            return Err(Error::InconsistentRecord(format!(
                "{name}: Alexander polynomial is not symmetric"
            )));
        }
        if determinant.is_multiple_of(2) {
            return Err(Error::InconsistentRecord(format!(
                "{name}: determinant {determinant} is even"
            )));
        }
        let at_minus_one = alexander.eval(-1).abs();
        if at_minus_one != BigInt::from(determinant) {
            return Err(Error::InconsistentRecord(format!(
                "{name}: determinant {determinant} but |Δ(-1)| = {at_minus_one}"
            )));
        }
        Ok(KnotRecord {
            name,
            crossings,
            alexander,
            determinant,
        })
    }
}

/// `Δ(t) ≐ det(V − tVᵀ)`, normalized.
pub fn alexander_polynomial(v: &SeifertMatrix) -> LaurentPolynomial {
    let m = v.matrix();
    let n = m.rows();
    let entries: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| IntPoly::linear(m[(i, j)].clone(), -&m[(j, i)]))
                .collect()
        })
        .collect();
    LaurentPolynomial::normalize(bareiss_determinant(entries).into_coeffs())
}

/// `|det(V + Vᵀ)|`; odd for every Seifert matrix.
pub fn knot_determinant(v: &SeifertMatrix) -> BigInt {
    let d = v.symmetrized().determinant().abs();
    debug_assert!(d.is_odd());
    d
}

/// Seifert matrix `[[−1, 1], [0, n]]` of the twisted double `K_n`:
/// `Δ = n t² − (1 + 2n) t + n` and determinant `4n + 1`.
pub fn twisted_double_seifert(n: i64) -> Result<SeifertMatrix> {
    if n < 1 {
        return Err(Error::InvalidTwistParameter(n));
    }
    SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, n]])
}

/// Block-diagonal Seifert matrix of `K₁ # K₂`.
pub fn connected_sum(v1: &SeifertMatrix, v2: &SeifertMatrix) -> SeifertMatrix {
    SeifertMatrix(v1.matrix().block_diag(v2.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_i64(c)
    }

    #[test]
    fn unknot() {
        let u = SeifertMatrix::unknot();
        assert_eq!(alexander_polynomial(&u), poly(&[1]));
        assert_eq!(knot_determinant(&u), BigInt::one());
    }

    #[test]
    fn five_eleven_five() {
        let v = SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, 5]]).unwrap();
        let delta = alexander_polynomial(&v);
        assert_eq!(delta, poly(&[5, -11, 5]));
        assert_eq!(delta.to_string(), "5t^2 - 11t + 5");
        assert_eq!(knot_determinant(&v), BigInt::from(21));
    }

    #[test]
    fn trefoil() {
        // det [[t-1, 1-t],[... ]] expanded by hand: t^2 - t + 1
        let v = SeifertMatrix::trefoil();
        assert_eq!(alexander_polynomial(&v), poly(&[1, -1, 1]));
        assert_eq!(alexander_polynomial(&v).to_string(), "t^2 - t + 1");
        assert_eq!(knot_determinant(&v), BigInt::from(3));
    }

    #[test]
    fn malformed_matrices() {
        assert!(matches!(
            SeifertMatrix::from_rows(vec![vec![1]]),
            Err(Error::MalformedSeifertMatrix(_))
        ));
        assert!(matches!(
            SeifertMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]),
            Err(Error::MalformedSeifertMatrix(_))
        ));
        // det(V - V^T) = 4
        assert!(matches!(
            SeifertMatrix::from_rows(vec![vec![0, 2], vec![0, 0]]),
            Err(Error::MalformedSeifertMatrix(_))
        ));
        assert!(matches!(
            SeifertMatrix::from_rows(vec![vec![0, 1, 0], vec![0, 0, 0]]),
            Err(Error::MalformedSeifertMatrix(_))
        ));
    }

    #[test]
    fn twisted_doubles() {
        let k5 = twisted_double_seifert(5).unwrap();
        assert_eq!(alexander_polynomial(&k5), poly(&[5, -11, 5]));
        assert_eq!(knot_determinant(&twisted_double_seifert(1).unwrap()), BigInt::from(5));
        assert_eq!(
            knot_determinant(&twisted_double_seifert(52).unwrap()),
            BigInt::from(209)
        );
        assert_eq!(twisted_double_seifert(0), Err(Error::InvalidTwistParameter(0)));
        for n in 1..=100i64 {
            let v = twisted_double_seifert(n).unwrap();
            assert_eq!(alexander_polynomial(&v), poly(&[n, -(1 + 2 * n), n]));
            assert_eq!(knot_determinant(&v), BigInt::from(4 * n + 1));
            assert_eq!(alexander_polynomial(&v).quadratic_parameter(), Some(n as u64));
        }
    }

    #[test]
    fn connected_sums() {
        let v = SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, 5]]).unwrap();
        let t = SeifertMatrix::trefoil();
        assert_eq!(connected_sum(&v, &SeifertMatrix::unknot()), v);
        assert_eq!(knot_determinant(&connected_sum(&t, &t)), BigInt::from(9));
        let sum = connected_sum(&v, &t);
        assert_eq!(alexander_polynomial(&sum), poly(&[5, -11, 5]).mul(&poly(&[1, -1, 1])));
        assert_eq!(alexander_polynomial(&sum), poly(&[5, -16, 21, -16, 5]));
    }

    #[test]
    fn seven_seven_from_knotinfo() {
        let v = SeifertMatrix::from_rows(vec![
            vec![1, 0, 0, 0],
            vec![-1, -1, 0, -1],
            vec![0, 0, 1, 0],
            vec![-1, 0, -1, -1],
        ])
        .unwrap();
        assert_eq!(alexander_polynomial(&v), poly(&[1, -5, 9, -5, 1]));
        assert_eq!(knot_determinant(&v), BigInt::from(21));
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[1]).to_string(), "1");
        assert_eq!(poly(&[0, 0, 2, -9, 19]).to_string(), "19t^2 - 9t + 2");
        assert_eq!(poly(&[-1, 1]).to_string(), "t - 1");
    }

    #[test]
    fn records() {
        let r = KnotRecord::new("7_7", 7, poly(&[1, -5, 9, -5, 1]), 21).unwrap();
        assert_eq!(r.determinant, 21);
        assert!(matches!(
            KnotRecord::new("x", 7, poly(&[1, -5, 9, -5, 1]), 84),
            Err(Error::InconsistentRecord(_))
        ));
        assert!(matches!(
            KnotRecord::new("x", 7, poly(&[1, -5, 9, -5, 1]), 23),
            Err(Error::InconsistentRecord(_))
        ));
        assert!(matches!(
            KnotRecord::new("x", 3, poly(&[2, -1, 2]), 5),
            Err(Error::InconsistentRecord(_))
        ));
    }

    /// Random valid Seifert matrices: `V = P J Pᵀ + S` with `P` unimodular,
    /// `J` the standard symplectic form and `S` symmetric, so `V − Vᵀ = P (J − Jᵀ) Pᵀ`.
    fn seifert_strategy() -> impl Strategy<Value = SeifertMatrix> {
        (1usize..=3)
            .prop_flat_map(|g| {
                let n = 2 * g;
                (
                    Just(n),
                    proptest::collection::vec(-3i64..=3, n * (n + 1) / 2),
                    proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..6),
                )
            })
            .prop_map(|(n, sym, ops)| {
                let mut s = IntMatrix::zeros(n, n);
                let mut it = sym.into_iter();
                for i in 0..n {
                    for j in i..n {
                        let x = BigInt::from(it.next().unwrap());
                        s[(i, j)] = x.clone();
                        s[(j, i)] = x;
                    }
                }
                let mut j = IntMatrix::zeros(n, n);
                for k in 0..n / 2 {
                    j[(2 * k, 2 * k + 1)] = BigInt::one();
                }
                let mut p = IntMatrix::identity(n);
                for (a, b, k) in ops {
                    if a != b {
                        p.add_row_multiple(a, b, &BigInt::from(k));
                    }
                }
                let v = (&(&p * &j) * &p.transpose()).add(&s);
                SeifertMatrix::new(v).expect("construction is valid")
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn alexander_at_minus_one_is_determinant(v in seifert_strategy()) {
            let delta = alexander_polynomial(&v);
            prop_assert_eq!(delta.eval(-1).abs(), knot_determinant(&v));
            prop_assert!(delta.eval(1).abs().is_one());
            prop_assert!(knot_determinant(&v).is_odd());
            prop_assert!(delta.is_palindromic_up_to_sign());
            prop_assert_eq!(LaurentPolynomial::normalize(delta.coeffs().to_vec()), delta);
        }

        #[test]
        fn alexander_matches_pointwise_determinants(v in seifert_strategy()) {
            // Independent route: integer determinants det(V - kV^T) at sample points
            // equal ε·k^s·Δ(k) for one fixed sign ε and shift s.
            let delta = alexander_polynomial(&v);
            let m = v.matrix();
            let shift = v.dimension() - delta.degree().unwrap();
            let direct = |k: i64| m.sub(&m.transpose().scale(&BigInt::from(k))).determinant();
            let scaled = |k: i64, s: usize| delta.eval(k) * BigInt::from(k).pow(s as u32);
            // calibrate at a point that is not a root
            let k0 = (2..=12i64).find(|&k| !delta.eval(k).is_zero()).expect("too many roots");
            let (s, eps) = (0..=shift)
                .flat_map(|s| [(s, 1), (s, -1)])
                .find(|&(s, e)| direct(k0) == scaled(k0, s) * e)
                .expect("some shift matches");
            for k in 2..=12i64 {
                prop_assert_eq!(direct(k), scaled(k, s) * eps);
            }
        }

        #[test]
        fn determinant_is_multiplicative(a in seifert_strategy(), b in seifert_strategy()) {
            let s = connected_sum(&a, &b);
            prop_assert_eq!(knot_determinant(&s), knot_determinant(&a) * knot_determinant(&b));
            prop_assert_eq!(
                alexander_polynomial(&s),
                alexander_polynomial(&a).mul(&alexander_polynomial(&b))
            );
        }
    }
}
