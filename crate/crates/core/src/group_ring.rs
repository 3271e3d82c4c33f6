//! Relations among Casson–Gordon invariants as elements of `ℤ[ℤ_q]`.
//!
//! Fix a primitive root `g` mod `p`. A nonzero entry `xᵢ = g^αᵢ` of a
//! metabolizing vector contributes the symbol `t^αᵢ`, standing for
//! `τ(M_K, χ_{xᵢ})`. Since `χ_a` and `χ_{−a}` carry the same invariant and
//! `g^{(p−1)/2} = −1`, exponents may be read mod `q = (p − 1)/2`. A vector
//! therefore yields a relation `f ∈ ℤ[ℤ_q]`, and scaling the vector by
//! `a = g^α` multiplies the relation by `t^α`. The relations coming from one
//! vector and its multiples form the principal ideal `(f)`.
//!
//! If that ideal contains a positive integer `n` then `n·τ(M_K, χ₁) = 0`,
//! which is the contradiction the obstruction needs. [`integer_in_ideal`]
//! finds the least such `n` together with a cofactor `h`, `h·f = n`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::matrix::bareiss_determinant;
use crate::arith::modp::{mul_mod, pow_mod};
use crate::arith::primes::{factorize, is_prime};
use crate::arith::IntMatrix;
use crate::error::{Error, Result};
use crate::homology::smith_normal_form;

/// Discrete logarithms base the least primitive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DlogTable {
    p: u64,
    g: u64,
    /// `logs[a]` is `α` with `g^α ≡ a`; `logs[0]` is unused.
    logs: Vec<u64>,
}

impl DlogTable {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = p - 1;
        let prime_factors: Vec<u64> = factorize(order).into_iter().map(|(r, _)| r).collect();
        let g = (2..p)
            .find(|&g| prime_factors.iter().all(|&r| pow_mod(g, order / r, p) != 1))
            .expect("a primitive root exists mod an odd prime");
        let mut logs = vec![0; p as usize];
        let mut x = 1u64;
        for alpha in 0..order {
            logs[x as usize] = alpha;
            x = mul_mod(x, g, p);
        }
        Ok(DlogTable { p, g, logs })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    /// Order of the group `ℤ_q` indexing the relation ring, `(p − 1)/2`.
    pub fn q(&self) -> usize {
        ((self.p - 1) / 2) as usize
    }

    /// `α` in `0..p−1` with `g^α ≡ a`. Panics on `a ≡ 0`.
    pub fn dlog(&self, a: u64) -> u64 {
        let a = a % self.p;
        assert_ne!(a, 0, "discrete log of zero");
        self.logs[a as usize]
    }

    /// The exponent of `t` contributed by `a`, i.e. `dlog(a) mod q`.
    pub fn exponent(&self, a: u64) -> usize {
        (self.dlog(a) % self.q() as u64) as usize
    }
}

/// Element of `ℤ[ℤ_q]`: the coefficient of `t^j` sits at index `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    coeffs: Vec<BigInt>,
}

impl GroupRingElement {
    pub fn zero(q: usize) -> Self {
        assert!(q >= 1, "Z[Z_q] needs q ≥ 1");
        GroupRingElement {
            coeffs: vec![BigInt::zero(); q],
        }
    }

    pub fn constant(q: usize, n: impl Into<BigInt>) -> Self {
        let mut e = Self::zero(q);
        e.coeffs[0] = n.into();
        e
    }

    pub fn one(q: usize) -> Self {
        Self::constant(q, 1)
    }

    /// `t^j`, exponent read mod `q`.
    pub fn monomial(q: usize, j: usize) -> Self {
        let mut e = Self::zero(q);
        e.coeffs[j % q] = BigInt::one();
        e
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "Z[Z_q] needs q ≥ 1");
        GroupRingElement {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        }
    }

    pub fn q(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(n)` when the element is the constant `n·t⁰`.
    pub fn as_constant(&self) -> Option<&BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(GroupRingElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.q() != other.q() {
            return Err(Error::MismatchedOrder {
                left: self.q(),
                right: other.q(),
            });
        }
        Ok(())
    }

    /// Matrix of `h ↦ f·h` in the basis `1, t, …, t^{q−1}`; column `j` holds `t^j·f`.
    pub fn multiplication_matrix(&self) -> IntMatrix {
        let q = self.q();
        IntMatrix::from_fn(q, q, |i, j| self.coeffs[(i + q - j) % q].clone())
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if j == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match j {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Relation `Σ_{xᵢ ≠ 0} t^{dlog(xᵢ) mod q}` carried by a metabolizing vector.
pub fn relation_from_vector(x: &[u64], table: &DlogTable) -> GroupRingElement {
    let mut f = GroupRingElement::zero(table.q());
    for &xi in x {
        if xi % table.p() != 0 {
            f.coeffs[table.exponent(xi)] += 1;
        }
    }
    f
}

/// Product in `ℤ[ℤ_q]`: cyclic convolution.
pub fn ring_multiply(f: &GroupRingElement, g: &GroupRingElement) -> Result<GroupRingElement> {
    f.check_order(g)?;
    let q = f.q();
    let mut out = GroupRingElement::zero(q);
    for (i, a) in f.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate() {
            out.coeffs[(i + j) % q] += a * b;
        }
    }
    Ok(out)
}

/// Relation of the scaled vector `a·x`; equals `t^{dlog(a)}` times the relation of `x`.
pub fn scalar_action(x: &[u64], a: u64, table: &DlogTable) -> Result<GroupRingElement> {
    let p = table.p();
    if a.is_multiple_of(p) {
        return Err(Error::ZeroScalar);
    }
    let scaled: Vec<u64> = x.iter().map(|&xi| mul_mod(xi, a, p)).collect();
    Ok(relation_from_vector(&scaled, table))
}

/// `Res(f, t^q − 1)`, with `f` read as a polynomial of degree `< q`,
/// as the determinant of the Sylvester matrix.
pub fn cyclotomic_resultant(f: &GroupRingElement) -> BigInt {
    let q = f.q();
    let Some(m) = f.coeffs.iter().rposition(|c| !c.is_zero()) else {
        return BigInt::zero();
    };
    // descending coefficient lists
    let fa: Vec<BigInt> = f.coeffs[..=m].iter().rev().cloned().collect();
    let mut ga = vec![BigInt::zero(); q + 1];
    ga[0] = BigInt::one();
    ga[q] = -BigInt::one();
    let size = m + q;
    let mut syl = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in syl.iter_mut().take(q).enumerate() {
        for (k, c) in fa.iter().enumerate() {
            row[i + k] = c.clone();
        }
    }
    for (i, row) in syl.iter_mut().skip(q).enumerate() {
        for (k, c) in ga.iter().enumerate() {
            row[i + k] = c.clone();
        }
    }
    bareiss_determinant(syl)
}

/// `f` and `t^q − 1` have no common factor over `ℚ`.
pub fn is_coprime_to_cyclotomic(f: &GroupRingElement) -> bool {
    !cyclotomic_resultant(f).is_zero()
}

/// Least positive integer `n` in the ideal `(f) ⊂ ℤ[ℤ_q]`, with `h·f = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerInIdeal {
    pub n: BigInt,
    pub h: GroupRingElement,
}

impl IntegerInIdeal {
    /// Recomputes `h·f` and compares it with the constant `n`.
    pub fn verifies(&self, f: &GroupRingElement) -> bool {
        self.n.is_positive()
            && ring_multiply(&self.h, f).is_ok_and(|hf| hf == GroupRingElement::constant(f.q(), self.n.clone()))
    }
}

/// Smallest `n > 0` with `n ∈ (f)`, and a cofactor `h` with `h·f = n`.
///
/// With `M` the multiplication-by-`f` matrix and `U M W = D` its Smith form,
/// `M h = n e₀` is solvable exactly when `dᵢ | n·(U e₀)ᵢ` for every `i`; the
/// least such `n` is `lcm dᵢ / gcd(dᵢ, (U e₀)ᵢ)` and `h = W y`, `yᵢ = n (U e₀)ᵢ / dᵢ`.
pub fn integer_in_ideal(f: &GroupRingElement) -> Result<IntegerInIdeal> {
    let q = f.q();
    let m = f.multiplication_matrix();
    let snf = smith_normal_form(&m);
    let diag = snf.diagonal();
    if diag.iter().any(Zero::is_zero) {
        return Err(Error::NotCoprimeToCyclotomic(f.to_string()));
    }
    let ue0: Vec<BigInt> = (0..q).map(|i| snf.u[(i, 0)].clone()).collect();
    let n = diag
        .iter()
        .zip(&ue0)
        .fold(BigInt::one(), |acc, (d, u)| acc.lcm(&(d / d.gcd(u))));
    let y: Vec<BigInt> = diag.iter().zip(&ue0).map(|(d, u)| &n * u / d).collect();
    let h = GroupRingElement {
        coeffs: snf.w.mul_vec(&y),
    };
    let out = IntegerInIdeal { n, h };
    assert!(out.verifies(f), "cofactor fails to reproduce n");
    Ok(out)
}
