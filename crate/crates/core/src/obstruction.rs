//! Top-level verdicts built from determinant factorizations.

use std::fmt;

use num_integer::Integer;

use crate::arith::primes::{factorize, is_prime, primes_three_mod_four, valuation};
use crate::error::{Error, Result};
use crate::knot::{knot_determinant, twisted_double_seifert, LaurentPolynomial, SeifertMatrix};
use crate::metabolizer::MetabolizerCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    /// `p ≡ 3 mod 4` divides the determinant exactly once.
    InfiniteOrder {
        p: u64,
    },
    /// Quadratic Alexander polynomial passing the order-4 criterion.
    Order4AlgebraicCandidate,
    Inconclusive,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::InfiniteOrder { p } => write!(f, "InfiniteOrder({p})"),
            VerdictKind::Order4AlgebraicCandidate => write!(f, "Order4AlgebraicCandidate"),
            VerdictKind::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// Prime factorization of the determinant, ascending.
    pub factorization: Vec<(u64, u32)>,
    /// Filled in only when the metabolizer search was run for the witness prime.
    pub certificates: Vec<MetabolizerCertificate>,
}

impl Verdict {
    pub fn witness_prime(&self) -> Option<u64> {
        match self.kind {
            VerdictKind::InfiniteOrder { p } => Some(p),
            _ => None,
        }
    }

    pub fn is_infinite_order(&self) -> bool {
        self.witness_prime().is_some()
    }

    pub fn with_certificates(mut self, certificates: Vec<MetabolizerCertificate>) -> Self {
        self.certificates = certificates;
        self
    }
}

/// Smallest prime `p ≡ 3 mod 4` with `p ∥ D`, if any.
pub fn witness_prime(factorization: &[(u64, u32)]) -> Option<u64> {
    factorization
        .iter()
        .find(|&&(p, e)| p % 4 == 3 && e == 1)
        .map(|&(p, _)| p)
}

/// Infinite order follows when some `p ≡ 3 mod 4` divides `D` exactly once.
pub fn infinite_order_verdict(determinant: u64) -> Result<Verdict> {
    if determinant.is_multiple_of(2) {
        return Err(Error::EvenDeterminant(determinant));
    }
    let factorization = factorize(determinant);
    let kind = match witness_prime(&factorization) {
        Some(p) => VerdictKind::InfiniteOrder { p },
        None => VerdictKind::Inconclusive,
    };
    Ok(Verdict {
        kind,
        factorization,
        certificates: Vec::new(),
    })
}

/// For `Δ = at² − (1+2a)t + a`: does some `p ≡ 3 mod 4` divide `4a + 1` to an odd power?
pub fn quadratic_order4_check(a: u64) -> bool {
    if a == 0 {
        return false;
    }
    factorize(4 * a + 1).iter().any(|&(p, e)| p % 4 == 3 && e % 2 == 1)
}

/// Verdict for a knot given by its Alexander polynomial.
///
/// The infinite-order test takes precedence; failing that, a quadratic
/// polynomial passing [`quadratic_order4_check`] is flagged as a candidate.
pub fn knot_verdict(alexander: &LaurentPolynomial) -> Result<Verdict> {
    let det: u64 = alexander
        .eval(-1)
        .magnitude()
        .try_into()
        .map_err(|_| Error::InconsistentRecord(format!("determinant of {alexander} exceeds 64 bits")))?;
    let mut verdict = infinite_order_verdict(det)?;
    if verdict.kind == VerdictKind::Inconclusive {
        if let Some(a) = alexander.quadratic_parameter() {
            if quadratic_order4_check(a) {
                verdict.kind = VerdictKind::Order4AlgebraicCandidate;
            }
        }
    }
    Ok(verdict)
}

/// Whether the witness prime of `verdict` still obstructs `dK # J` for every `d ≠ 0`.
pub fn connected_sum_obstruction(verdict: &Verdict, det_j: u64) -> Result<bool> {
    let p = verdict.witness_prime().ok_or(Error::NotInfiniteOrderVerdict)?;
    Ok(det_j.gcd(&p) == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    /// 1-based.
    pub index: usize,
    pub primes: (u64, u64),
    pub twist: i64,
    pub seifert: SeifertMatrix,
}

impl FamilyMember {
    pub fn determinant(&self) -> u64 {
        4 * self.twist as u64 + 1
    }
}

/// Twisted doubles `K_{nᵢ}` with `4nᵢ + 1 = p_{2i−1}·p_{2i}` over consecutive primes `≡ 3 mod 4`.
pub fn independent_family(count: usize) -> Vec<FamilyMember> {
    let mut primes = primes_three_mod_four();
    (1..=count)
        .map(|index| {
            let a = primes.next().expect("infinitely many primes");
            let b = primes.next().expect("infinitely many primes");
            // both ≡ 3 mod 4, so a·b ≡ 1 mod 4
            let twist = ((a * b - 1) / 4) as i64;
            let seifert = twisted_double_seifert(twist).expect("twist is positive");
            FamilyMember {
                index,
                primes: (a, b),
                twist,
                seifert,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberCheck {
    pub index: usize,
    pub determinant: u64,
    pub primes_three_mod_four: bool,
    pub primes_exact: bool,
    pub order4: bool,
    pub verdict: VerdictKind,
}

impl MemberCheck {
    pub fn passed(&self) -> bool {
        self.primes_three_mod_four && self.primes_exact && self.order4
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub members: Vec<MemberCheck>,
    /// First pair of member indices whose determinants share a factor.
    pub coprimality_violation: Option<(usize, usize)>,
}

impl IndependenceReport {
    pub fn pairwise_coprime(&self) -> bool {
        self.coprimality_violation.is_none()
    }

    pub fn passed(&self) -> bool {
        self.pairwise_coprime() && self.members.iter().all(MemberCheck::passed)
    }
}

/// Determinant-level checks that make the family linearly independent.
pub fn family_independence_certificate(members: &[FamilyMember]) -> Result<IndependenceReport> {
    if members.is_empty() {
        return Err(Error::MalformedFamily("empty family".into()));
    }
    let mut checks = Vec::with_capacity(members.len());
    let mut dets = Vec::with_capacity(members.len());
    for m in members {
        if m.twist < 1 {
            return Err(Error::MalformedFamily(format!(
                "member {} has twist {}",
                m.index, m.twist
            )));
        }
        let det = knot_determinant(&m.seifert);
        let det: u64 = det
            .try_into()
            .map_err(|_| Error::MalformedFamily(format!("member {} determinant out of range", m.index)))?;
        if det != m.determinant() {
            return Err(Error::MalformedFamily(format!(
                "member {}: Seifert matrix has determinant {det}, twist implies {}",
                m.index,
                m.determinant()
            )));
        }
        let (a, b) = m.primes;
        let primes_three_mod_four = is_prime(a) && is_prime(b) && a % 4 == 3 && b % 4 == 3;
        let primes_exact = a != b && valuation(det, a) == 1 && valuation(det, b) == 1 && a * b == det;
        checks.push(MemberCheck {
            index: m.index,
            determinant: det,
            primes_three_mod_four,
            primes_exact,
            order4: quadratic_order4_check(m.twist as u64),
            verdict: infinite_order_verdict(det)?.kind,
        });
        dets.push(det);
    }
    let mut coprimality_violation = None;
    'outer: for i in 0..dets.len() {
        for j in i + 1..dets.len() {
            if dets[i].gcd(&dets[j]) != 1 {
                coprimality_violation = Some((members[i].index, members[j].index));
                break 'outer;
            }
        }
    }
    Ok(IndependenceReport {
        members: checks,
        coprimality_violation,
    })
}
