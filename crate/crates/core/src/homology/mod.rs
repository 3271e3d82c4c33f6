//! First homology of the 2-fold branched cover and its torsion linking form.
//!
//! `H₁(M_K)` is the cokernel of `V + Vᵀ`. On it the linking form is
//! `β(x, y) = −xᵀ (V + Vᵀ)⁻¹ y mod ℤ`. When an odd prime `p` divides the
//! determinant exactly once the `p`-primary part is `ℤ_p`, generated by some
//! `x`, and everything about characters `H₁ → ℤ_p` reduces to the single unit
//! `c` with `β(x, x) = c/p`.
//!
//! The character "link with `a·x`" has bordism class `a²c ∈ ℤ_p`; the
//! Casson–Gordon signature defect normalised on `L(p, 1)` is twice that.
//! Both are nonzero exactly when `a ≠ 0`.

mod snf;

pub use snf::{smith_normal_form, SmithForm};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::arith::modp::{legendre, mul_mod};
use crate::arith::primes::is_prime;
use crate::arith::{rational, IntMatrix};
use crate::error::{Error, Result};
use crate::knot::{knot_determinant, SeifertMatrix};

/// Finite abelian group in invariant-factor form `ℤ_{d₁} ⊕ … ⊕ ℤ_{d_r}`, `d₁ | d₂ | …`, `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    /// Cokernel of a square integer matrix; `None` when it is infinite.
    pub fn cokernel(a: &IntMatrix) -> Option<Self> {
        let snf = smith_normal_form(a);
        if snf.rank() < a.cols() || !a.is_square() {
            return None;
        }
        Some(FiniteAbelianGroup {
            invariant_factors: snf.diagonal().into_iter().filter(|d| !d.is_one()).collect(),
        })
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Number of cyclic factors divisible by `p`.
    pub fn p_rank(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.invariant_factors.iter().filter(|d| d.is_multiple_of(&p)).count()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z_{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `H₁` of the 2-fold branched cover, presented by `V + Vᵀ`.
pub fn branched_cover_homology(v: &SeifertMatrix) -> FiniteAbelianGroup {
    FiniteAbelianGroup::cokernel(&v.symmetrized()).expect("V + V^T has odd determinant, so its cokernel is finite")
}

/// Linking form on a cyclic `p`-primary part `ℤ_p = ⟨x⟩`, recorded as `β(x, x) = c/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryLinkingForm {
    pub p: u64,
    pub rank: usize,
    /// Self-linking numerator, a unit mod `p`.
    pub c: u64,
    /// The generator `x` in the coordinates of the Seifert matrix.
    pub generator: Vec<BigInt>,
}

impl PrimaryLinkingForm {
    /// Legendre symbol of `c`. Changing generator multiplies `c` by a square,
    /// so this is the generator-independent part of the form.
    pub fn square_class(&self) -> i8 {
        legendre(self.c, self.p)
    }

    pub fn self_linking(&self) -> BigRational {
        BigRational::new(BigInt::from(self.c), BigInt::from(self.p))
    }
}

/// Element of `ℤ_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// The character `χ_{a·x}`: linking with `a` times the fixed generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    pub p: u64,
    pub a: u64,
}

impl Character {
    pub fn new(p: u64, a: i64) -> Self {
        Character {
            p,
            a: a.rem_euclid(p as i64) as u64,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.a == 0
    }
}

/// Self-linking data of the `p`-primary part, which must be exactly `ℤ_p`.
pub fn primary_linking_form(v: &SeifertMatrix, p: u64) -> Result<PrimaryLinkingForm> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let det = knot_determinant(v);
    let pb = BigInt::from(p);
    if !det.is_multiple_of(&pb) {
        return Err(Error::NoPrimaryPart { p });
    }
    if det.is_multiple_of(&(&pb * &pb)) {
        return Err(Error::NonCyclicPrimaryPart { p });
    }

    let a = v.symmetrized();
    let snf = smith_normal_form(&a);
    let diag = snf.diagonal();
    let i = diag
        .iter()
        .position(|d| d.is_multiple_of(&pb))
        .expect("p divides the product of invariant factors");

    // The summand ℤ_{dᵢ} is generated by U⁻¹eᵢ; its p-part by (dᵢ/p)·U⁻¹eᵢ.
    let u_inv = rational::inverse(&snf.u).expect("U is unimodular");
    let scale = &diag[i] / &pb;
    let generator: Vec<BigInt> = u_inv
        .iter()
        .map(|row| {
            debug_assert!(row[i].is_integer());
            row[i].to_integer() * &scale
        })
        .collect();

    let a_inv = rational::inverse(&a).expect("V + V^T is nonsingular");
    debug_assert!(a_inv.iter().flatten().all(|x| det.is_multiple_of(x.denom())));
    let beta = -rational::bilinear(&a_inv, &generator, &generator);
    let scaled = beta * BigRational::from_integer(pb.clone());
    assert!(
        scaled.is_integer(),
        "self-linking of a p-torsion element has denominator p"
    );
    let c = scaled.to_integer().mod_floor(&pb).to_u64().unwrap();
    assert_ne!(c, 0, "linking form is nondegenerate on the p-part");

    Ok(PrimaryLinkingForm {
        p,
        rank: 1,
        c,
        generator,
    })
}

/// Class of `(M_K, χ_{a·x})` in `Ω₃(ℤ_p) ≅ ℤ_p`, namely the self-linking `a²c`.
pub fn bordism_class(form: &PrimaryLinkingForm, chi: Character) -> Result<Residue> {
    if chi.p != form.p {
        return Err(Error::PrimeMismatch {
            form: form.p,
            character: chi.p,
        });
    }
    let p = form.p;
    Ok(Residue::new(mul_mod(mul_mod(chi.a, chi.a, p), form.c, p), p))
}

/// `σ_p = 2 · class`, normalised so that `L(p, 1)` with the unit character has class 1.
pub fn sigma_p_mod_p(class: Residue) -> Residue {
    Residue::new(mul_mod(2, class.value, class.modulus), class.modulus)
}
