use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::ExactDomain;

/// Dense univariate integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `a + b t`
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient `self / divisor` when it exists in `Z[t]` with zero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dlead = divisor.leading()?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(IntPoly::default());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }
}

impl ExactDomain for IntPoly {
    fn ring_zero() -> Self {
        IntPoly::default()
    }
    fn ring_one() -> Self {
        IntPoly::constant(BigInt::one())
    }
    fn is_ring_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        IntPoly::mul(self, other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        IntPoly::sub(self, other)
    }
    fn ring_neg(&self) -> Self {
        IntPoly::neg(self)
    }
    fn div_exact(&self, other: &Self) -> Self {
        IntPoly::div_exact(self, other).expect("inexact polynomial division in Bareiss step")
    }
}
