//! Exact-arithmetic obstructions to finite concordance order for knots.
//!
//! Starting from a Seifert matrix, the crate computes the Alexander polynomial,
//! the homology of the 2-fold branched cover and its linking form, then decides
//! whether a prime `p ≡ 3 mod 4` dividing the determinant exactly once forces
//! the knot to have infinite order in the concordance group.
//!
//! The supporting algebra is exposed as well: metabolizer enumeration for
//! `d` copies of a cyclic `p`-primary linking form, relations in the group
//! ring `ℤ[ℤ_q]`, and explicit certificates `h·f = n` showing that a relation
//! forces `n·τ = 0` for a positive integer `n`.
//!
//! ```
//! use knotorder::{alexander_polynomial, knot_determinant, infinite_order_verdict, SeifertMatrix};
//!
//! let v = SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, 5]]).unwrap();
//! assert_eq!(alexander_polynomial(&v).to_string(), "5t^2 - 11t + 5");
//! let det = knot_determinant(&v);
//! assert_eq!(det, 21.into());
//! let verdict = infinite_order_verdict(21).unwrap();
//! assert_eq!(verdict.witness_prime(), Some(3));
//! ```
//!
//! All arithmetic is exact (`BigInt`); nothing is approximated.

pub mod arith;
mod error;
pub mod group_ring;
pub mod homology;
pub mod knot;
pub mod metabolizer;
pub mod obstruction;

pub use arith::{IntMatrix, IntPoly};
pub use error::{Error, Result};
pub use group_ring::{
    cyclotomic_resultant, integer_in_ideal, is_coprime_to_cyclotomic, relation_from_vector, ring_multiply,
    scalar_action, DlogTable, GroupRingElement, IntegerInIdeal,
};
pub use homology::{
    bordism_class, branched_cover_homology, primary_linking_form, sigma_p_mod_p, smith_normal_form, Character,
    FiniteAbelianGroup, PrimaryLinkingForm, Residue, SmithForm,
};
pub use knot::{
    alexander_polynomial, connected_sum, knot_determinant, twisted_double_seifert, KnotRecord, LaurentPolynomial,
    SeifertMatrix,
};
pub use metabolizer::{
    certify, certify_metabolizer, certify_space, echelon_normalize, enumerate_metabolizers, is_self_annihilating,
    sum_basis_relation, CertifyOutcome, CertifyVerdict, DiagonalLinkingSpace, Metabolizer, MetabolizerCertificate,
    DEFAULT_BUDGET,
};
pub use obstruction::{
    connected_sum_obstruction, family_independence_certificate, independent_family, infinite_order_verdict,
    knot_verdict, quadratic_order4_check, FamilyMember, IndependenceReport, MemberCheck, Verdict, VerdictKind,
};
