//! Metabolizers of `d` copies of a cyclic linking form and their certificates.
//!
//! When `p` exactly divides the determinant of `K`, the `p`-primary part of
//! `H₁(M_{dK})` is `(ℤ_p)^d` with the diagonal form `β(x, y) = c·Σ xᵢyᵢ / p`.
//! A metabolizer is a subgroup of order `p^{d/2}` on which `β` vanishes. Since
//! `c` is a unit, these are exactly the Lagrangian subspaces of the standard
//! dot product over `𝔽_p`.
//!
//! For each metabolizer the certificate takes a Gauss–Jordan basis with pivots
//! moved to the front, sums it to `(1, …, 1, a₁, …, a_{d/2})`, turns the sum
//! into a relation `f = d/2 + Σ t^{dlog aᵢ}` and exhibits `n > 0` in `(f)`.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::modp::{dot_mod, inv_mod, mul_mod};
use crate::arith::primes::is_prime;
use crate::error::{Error, Result};
use crate::group_ring::{
    integer_in_ideal, is_coprime_to_cyclotomic, relation_from_vector, DlogTable, GroupRingElement,
};

/// Default cap on `p^d` for exhaustive enumeration.
pub const DEFAULT_BUDGET: u64 = 200_000;

/// `(ℤ_p)^d` with the diagonal linking form of self-linking `c/p` on each coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalLinkingSpace {
    pub p: u64,
    pub d: usize,
    pub c: u64,
}

impl DiagonalLinkingSpace {
    pub fn new(p: u64, d: usize, c: u64) -> Self {
        DiagonalLinkingSpace { p, d, c: c % p }
    }

    /// `p·β(x, y) ∈ ℤ_p`.
    pub fn pairing(&self, x: &[u64], y: &[u64]) -> u64 {
        mul_mod(self.c, dot_mod(x, y, self.p), self.p)
    }

    /// `p^d`, the size of the ambient group.
    pub fn size(&self) -> u128 {
        (self.p as u128).saturating_pow(self.d as u32)
    }
}

/// A metabolizer, stored by its reduced row echelon basis (unique per subgroup).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Metabolizer {
    basis: Vec<Vec<u64>>,
}

impl Metabolizer {
    /// Canonicalizes an arbitrary independent spanning set.
    pub fn from_basis(p: u64, basis: &[Vec<u64>]) -> Result<Self> {
        let (rref, pivots) = row_reduce(p, basis);
        if pivots.len() != basis.len() {
            return Err(Error::DependentBasis { p });
        }
        Ok(Metabolizer { basis: rref })
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    /// Subgroup order is `p^dimension`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Applies the coordinate permutation `new[i] = old[perm[i]]`.
    pub fn permuted(&self, p: u64, perm: &[usize]) -> Metabolizer {
        let moved: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|v| perm.iter().map(|&j| v[j]).collect())
            .collect();
        Metabolizer::from_basis(p, &moved).expect("permutation preserves independence")
    }
}

/// Reduced row echelon form over `𝔽_p`; returns nonzero rows and pivot columns.
fn row_reduce(p: u64, rows: &[Vec<u64>]) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let width = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(pr) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][col], p).unwrap();
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// `β(vᵢ, vⱼ) = 0` for every pair of basis vectors, including `i = j`.
pub fn is_self_annihilating(space: &DiagonalLinkingSpace, basis: &[Vec<u64>]) -> bool {
    basis
        .iter()
        .enumerate()
        .all(|(i, v)| basis[i..].iter().all(|w| space.pairing(v, w) == 0))
}

/// Every metabolizer of `space`, sorted, each in reduced echelon form.
///
/// Walks reduced echelon bases directly: for each pivot set, rows are filled
/// one at a time and kept only if isotropic and orthogonal to earlier rows.
/// Every totally isotropic subspace has exactly one such basis, so the walk
/// is exhaustive and duplicate-free. Pivot sets are searched in parallel and
/// the results sorted, so output does not depend on scheduling.
pub fn enumerate_metabolizers(space: &DiagonalLinkingSpace, budget: u64) -> Result<Vec<Metabolizer>> {
    if space.size() > budget as u128 {
        return Err(Error::BudgetExceeded {
            size: space.size(),
            budget,
        });
    }
    if space.d % 2 == 1 {
        return Ok(Vec::new());
    }
    let k = space.d / 2;
    let mut found: Vec<Metabolizer> = pivot_sets(space.d, k)
        .into_par_iter()
        .flat_map_iter(|pivots| search_pivot_set(space, &pivots))
        .collect();
    found.sort();
    Ok(found)
}

fn pivot_sets(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(d: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..d {
            cur.push(j);
            go(d, k, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, k, 0, &mut Vec::new(), &mut out);
    out
}

fn search_pivot_set(space: &DiagonalLinkingSpace, pivots: &[usize]) -> Vec<Metabolizer> {
    let d = space.d;
    // free coordinates of row i: non-pivot columns to the right of its pivot
    let free: Vec<Vec<usize>> = pivots
        .iter()
        .map(|&pc| (pc + 1..d).filter(|j| !pivots.contains(j)).collect())
        .collect();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(pivots.len());
    extend(space, pivots, &free, &mut rows, &mut out);
    out
}

fn extend(
    space: &DiagonalLinkingSpace,
    pivots: &[usize],
    free: &[Vec<usize>],
    rows: &mut Vec<Vec<u64>>,
    out: &mut Vec<Metabolizer>,
) {
    let i = rows.len();
    if i == pivots.len() {
        out.push(Metabolizer { basis: rows.clone() });
        return;
    }
    let p = space.p;
    let slots = &free[i];
    let mut digits = vec![0u64; slots.len()];
    loop {
        let mut v = vec![0u64; space.d];
        v[pivots[i]] = 1;
        for (&j, &x) in slots.iter().zip(&digits) {
            v[j] = x;
        }
        if space.pairing(&v, &v) == 0 && rows.iter().all(|r| space.pairing(r, &v) == 0) {
            rows.push(v);
            extend(space, pivots, free, rows, out);
            rows.pop();
        }
        // odometer over p^|slots|
        let mut carry = true;
        for x in digits.iter_mut() {
            *x += 1;
            if *x == p {
                *x = 0;
            } else {
                carry = false;
                break;
            }
        }
        if carry {
            break;
        }
    }
}

/// Gauss–Jordan normal form with pivots moved to the front.
///
/// Returns the permuted basis and the permutation, `new[i] = old[perm[i]]`:
/// pivot columns first in increasing order, then the remaining columns in
/// increasing order. The pivot set is the lexicographically least one.
pub fn echelon_normalize(p: u64, basis: &[Vec<u64>]) -> Result<(Vec<Vec<u64>>, Vec<usize>)> {
    let (rref, pivots) = row_reduce(p, basis);
    if pivots.len() != basis.len() {
        return Err(Error::DependentBasis { p });
    }
    let width = basis.first().map_or(0, Vec::len);
    let perm: Vec<usize> = pivots
        .iter()
        .copied()
        .chain((0..width).filter(|j| !pivots.contains(j)))
        .collect();
    let normalized = rref.iter().map(|v| perm.iter().map(|&j| v[j]).collect()).collect();
    Ok((normalized, perm))
}

/// Relation of the summed normalized basis `(1, …, 1, a₁, …)`:
/// `f = k + Σ_{aᵢ ≠ 0} t^{dlog aᵢ mod q}` for a basis of `k` vectors.
pub fn sum_basis_relation(
    space: &DiagonalLinkingSpace,
    basis: &[Vec<u64>],
    table: &DlogTable,
) -> Result<(Vec<u64>, GroupRingElement)> {
    let k = basis.len();
    let p = space.p;
    for (i, v) in basis.iter().enumerate() {
        if v.len() != space.d || (0..k).any(|j| v[j] != u64::from(i == j)) {
            return Err(Error::NotNormalized);
        }
    }
    let sum: Vec<u64> = (0..space.d)
        .map(|j| basis.iter().fold(0, |acc, v| (acc + v[j]) % p))
        .collect();
    let f = relation_from_vector(&sum, table);
    Ok((sum, f))
}

/// Evidence that one metabolizer forces `n·τ(K, χ₁) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabolizerCertificate {
    pub p: u64,
    pub d: usize,
    /// Self-linking numerator of the caller's form; the search itself uses `c = 1`.
    pub c: u64,
    pub generator: u64,
    pub permutation: Vec<usize>,
    /// Normalized basis, in permuted coordinates.
    pub basis: Vec<Vec<u64>>,
    pub summed_vector: Vec<u64>,
    pub relation: GroupRingElement,
    pub cofactor: GroupRingElement,
    pub n: BigInt,
}

impl MetabolizerCertificate {
    /// Rechecks every claim from scratch; nothing stored is trusted.
    pub fn verify(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InvalidCertificate(what.to_string()));
        let table = DlogTable::new(self.p)?;
        if table.generator() != self.generator {
            return fail("generator is not the least primitive root");
        }
        let space = DiagonalLinkingSpace::new(self.p, self.d, self.c);
        let mut sorted = self.permutation.clone();
        sorted.sort_unstable();
        if sorted != (0..self.d).collect::<Vec<_>>() {
            return fail("permutation");
        }
        if self.basis.len() * 2 != self.d {
            return fail("basis size is not d/2");
        }
        if self.basis.iter().flatten().any(|&x| x >= self.p) {
            return fail("basis entries not reduced");
        }
        if !is_self_annihilating(&space, &self.basis) {
            return fail("basis is not self-annihilating");
        }
        let (sum, f) = sum_basis_relation(&space, &self.basis, &table)?;
        if sum != self.summed_vector {
            return fail("summed vector");
        }
        if f != self.relation {
            return fail("relation");
        }
        let witness = crate::group_ring::IntegerInIdeal {
            n: self.n.clone(),
            h: self.cofactor.clone(),
        };
        if !witness.verifies(&self.relation) {
            return fail("h·f ≠ n");
        }
        Ok(())
    }
}

/// Certificate for a single metabolizer.
pub fn certify_metabolizer(
    space: &DiagonalLinkingSpace,
    metabolizer: &Metabolizer,
    table: &DlogTable,
) -> Result<MetabolizerCertificate> {
    let (basis, permutation) = echelon_normalize(space.p, metabolizer.basis())?;
    let (summed_vector, relation) = sum_basis_relation(space, &basis, table)?;
    debug_assert!(is_coprime_to_cyclotomic(&relation));
    let witness = integer_in_ideal(&relation)?;
    Ok(MetabolizerCertificate {
        p: space.p,
        d: space.d,
        c: space.c,
        generator: table.generator(),
        permutation,
        basis,
        summed_vector,
        relation,
        cofactor: witness.h,
        n: witness.n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertifyVerdict {
    /// Every metabolizer carries a certificate with `n > 0`.
    AllCertified,
    /// Exhaustive search found no metabolizer at all.
    NoMetabolizerPossible,
}

impl fmt::Display for CertifyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyVerdict::AllCertified => write!(f, "AllCertified"),
            CertifyVerdict::NoMetabolizerPossible => write!(f, "NoMetabolizerPossible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOutcome {
    pub verdict: CertifyVerdict,
    pub certificates: Vec<MetabolizerCertificate>,
}

/// Runs the obstruction for `d` copies of a knot whose `p`-part is `ℤ_p` with self-linking `c/p`.
pub fn certify_space(space: &DiagonalLinkingSpace, budget: u64) -> Result<CertifyOutcome> {
    let p = space.p;
    if p % 4 != 3 {
        return Err(Error::PrimeNotThreeMod4(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let table = DlogTable::new(p)?;
    let metabolizers = enumerate_metabolizers(space, budget)?;
    if metabolizers.is_empty() {
        return Ok(CertifyOutcome {
            verdict: CertifyVerdict::NoMetabolizerPossible,
            certificates: Vec::new(),
        });
    }
    let certificates = metabolizers
        .par_iter()
        .map(|m| certify_metabolizer(space, m, &table))
        .collect::<Result<Vec<_>>>()?;
    Ok(CertifyOutcome {
        verdict: CertifyVerdict::AllCertified,
        certificates,
    })
}

/// [`certify_space`] with `c = 1`.
pub fn certify(p: u64, d: usize, budget: u64) -> Result<CertifyOutcome> {
    certify_space(&DiagonalLinkingSpace::new(p, d, 1), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::modp::reduce_vec;
    use num_traits::{One, Zero};

    fn space(p: u64, d: usize) -> DiagonalLinkingSpace {
        DiagonalLinkingSpace::new(p, d, 1)
    }

    fn vecs(p: u64, rows: &[&[i64]]) -> Vec<Vec<u64>> {
        rows.iter().map(|r| reduce_vec(r, p)).collect()
    }

    /// Oracle: every subspace of the given dimension, from all spanning tuples
    /// of vectors, deduplicated by canonical form. Only for tiny cases.
    fn brute_force(p: u64, d: usize) -> Vec<Metabolizer> {
        let k = d / 2;
        let all: Vec<Vec<u64>> = (0..(p as usize).pow(d as u32))
            .map(|mut n| {
                (0..d)
                    .map(|_| {
                        let x = (n % p as usize) as u64;
                        n /= p as usize;
                        x
                    })
                    .collect()
            })
            .collect();
        let sp = space(p, d);
        let isotropic: Vec<&Vec<u64>> = all
            .iter()
            .filter(|v| sp.pairing(v, v) == 0 && v.iter().any(|&x| x != 0))
            .collect();
        let mut out = std::collections::BTreeSet::new();
        let mut stack: Vec<Vec<Vec<u64>>> = vec![vec![]];
        while let Some(cur) = stack.pop() {
            if cur.len() == k {
                if is_self_annihilating(&sp, &cur) {
                    if let Ok(m) = Metabolizer::from_basis(p, &cur) {
                        out.insert(m);
                    }
                }
                continue;
            }
            for v in &isotropic {
                let mut next = cur.clone();
                next.push((*v).clone());
                if is_self_annihilating(&sp, &next) && row_reduce(p, &next).1.len() == next.len() {
                    stack.push(next);
                }
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn self_annihilation_examples() {
        assert!(is_self_annihilating(
            &space(7, 4),
            &vecs(7, &[&[1, 0, 2, 3], &[0, 1, -3, 2]])
        ));
        assert!(is_self_annihilating(
            &space(3, 4),
            &vecs(3, &[&[1, 1, 1, 0], &[1, -1, 0, 1]])
        ));
        assert!(!is_self_annihilating(&space(7, 4), &vecs(7, &[&[1, 0, 0, 0]])));
        // a unit c changes nothing
        assert!(is_self_annihilating(
            &DiagonalLinkingSpace::new(7, 4, 3),
            &vecs(7, &[&[1, 0, 2, 3], &[0, 1, -3, 2]])
        ));
    }

    #[test]
    fn enumeration_small_cases() {
        assert!(enumerate_metabolizers(&space(7, 2), DEFAULT_BUDGET).unwrap().is_empty());
        let m34 = enumerate_metabolizers(&space(3, 4), DEFAULT_BUDGET).unwrap();
        let target = Metabolizer::from_basis(3, &vecs(3, &[&[1, 1, 1, 0], &[1, -1, 0, 1]])).unwrap();
        assert!(m34.contains(&target));
        let m74 = enumerate_metabolizers(&space(7, 4), DEFAULT_BUDGET).unwrap();
        let target = Metabolizer::from_basis(7, &vecs(7, &[&[1, 0, 2, 3], &[0, 1, -3, 2]])).unwrap();
        assert!(m74.contains(&target));
        // split 4-dimensional form: 2(p + 1) Lagrangians
        assert_eq!(m34.len(), 8);
        assert_eq!(m74.len(), 16);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (p, d) in [(3, 2), (3, 4), (7, 2), (5, 2), (5, 4), (7, 4)] {
            let fast = enumerate_metabolizers(&space(p, d), DEFAULT_BUDGET).unwrap();
            assert_eq!(fast, brute_force(p, d), "p = {p}, d = {d}");
        }
    }

    #[test]
    fn enumerated_metabolizers_are_lagrangian() {
        for (p, d) in [(3, 4), (7, 4), (3, 8), (11, 4)] {
            let sp = space(p, d);
            let all = enumerate_metabolizers(&sp, DEFAULT_BUDGET).unwrap();
            assert!(!all.is_empty());
            for m in &all {
                assert_eq!(m.dimension(), d / 2);
                assert!(is_self_annihilating(&sp, m.basis()));
                assert_eq!(Metabolizer::from_basis(p, m.basis()).unwrap(), *m);
            }
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn no_metabolizers_unless_four_divides_d() {
        for p in [3u64, 7, 11] {
            for d in [1usize, 2, 3, 5, 6] {
                let sp = space(p, d);
                if sp.size() > DEFAULT_BUDGET as u128 {
                    continue;
                }
                assert!(
                    enumerate_metabolizers(&sp, DEFAULT_BUDGET).unwrap().is_empty(),
                    "p = {p}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            enumerate_metabolizers(&space(23, 4), DEFAULT_BUDGET),
            Err(Error::BudgetExceeded {
                size: 279_841,
                budget: DEFAULT_BUDGET
            })
        );
        assert!(enumerate_metabolizers(&space(23, 4), 300_000).is_ok());
    }

    #[test]
    fn echelon_examples() {
        let (b, perm) = echelon_normalize(7, &vecs(7, &[&[1, 0, 2, 3], &[0, 1, -3, 2]])).unwrap();
        assert_eq!(b, vecs(7, &[&[1, 0, 2, 3], &[0, 1, -3, 2]]));
        assert_eq!(perm, vec![0, 1, 2, 3]);

        let (b, perm) = echelon_normalize(3, &vecs(3, &[&[1, 1, 1, 0], &[1, -1, 0, 1]])).unwrap();
        assert_eq!(b, vecs(3, &[&[1, 0, 2, 2], &[0, 1, 2, 1]]));
        assert_eq!(perm, vec![0, 1, 2, 3]);

        let (again, perm2) = echelon_normalize(3, &b).unwrap();
        assert_eq!((again, perm2), (b, vec![0, 1, 2, 3]));

        // pivots not at the front: (0,1,0,0),(0,0,0,1) → permutation [1,3,0,2]
        let (b, perm) = echelon_normalize(5, &vecs(5, &[&[0, 1, 0, 0], &[0, 0, 0, 1]])).unwrap();
        assert_eq!(perm, vec![1, 3, 0, 2]);
        assert_eq!(b, vecs(5, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));

        assert_eq!(
            echelon_normalize(7, &vecs(7, &[&[1, 2, 3, 4], &[2, 4, 6, 8]])),
            Err(Error::DependentBasis { p: 7 })
        );
    }

    #[test]
    fn summed_relations() {
        let t7 = DlogTable::new(7).unwrap();
        let (sum, f) = sum_basis_relation(&space(7, 4), &vecs(7, &[&[1, 0, 2, 3], &[0, 1, -3, 2]]), &t7).unwrap();
        assert_eq!(sum, vec![1, 1, 6, 5]);
        assert_eq!(f, GroupRingElement::from_coeffs(vec![3, 0, 1]));

        let t3 = DlogTable::new(3).unwrap();
        let (sum, f) = sum_basis_relation(&space(3, 4), &vecs(3, &[&[1, 0, 2, 2], &[0, 1, 2, 1]]), &t3).unwrap();
        assert_eq!(sum, vec![1, 1, 1, 0]);
        assert_eq!(f, GroupRingElement::constant(1, 3));

        let (_, f) = sum_basis_relation(&space(7, 4), &vecs(7, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]), &t7).unwrap();
        assert_eq!(f, GroupRingElement::constant(3, 2));

        assert_eq!(
            sum_basis_relation(&space(7, 4), &vecs(7, &[&[0, 1, 2, 3], &[1, 0, -3, 2]]), &t7),
            Err(Error::NotNormalized)
        );
    }

    #[test]
    fn certify_p7_d4() {
        let out = certify(7, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.verdict, CertifyVerdict::AllCertified);
        assert_eq!(out.certificates.len(), 16);
        let target = vecs(7, &[&[1, 0, 2, 3], &[0, 1, -3, 2]]);
        let cert = out
            .certificates
            .iter()
            .find(|c| c.basis == target)
            .expect("basis present");
        assert_eq!(cert.relation, GroupRingElement::from_coeffs(vec![3, 0, 1]));
        assert_eq!(cert.n, BigInt::from(28));
        for c in &out.certificates {
            c.verify().unwrap();
            assert!(c.n > BigInt::zero());
        }
    }

    #[test]
    fn certify_p3() {
        let out = certify(3, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.verdict, CertifyVerdict::AllCertified);
        for c in &out.certificates {
            let f = c.relation.as_constant().expect("Z[Z_1] is Z");
            assert!(*f >= BigInt::from(2));
            assert_eq!(&c.n, f);
            assert!(c.cofactor.as_constant().unwrap().is_one());
        }
        let out = certify(3, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.verdict, CertifyVerdict::NoMetabolizerPossible);
        assert!(out.certificates.is_empty());
        assert_eq!(certify(5, 4, DEFAULT_BUDGET), Err(Error::PrimeNotThreeMod4(5)));
        assert_eq!(certify(15, 4, DEFAULT_BUDGET), Err(Error::NotPrime(15)));
    }

    #[test]
    fn certificates_relations_are_coprime() {
        for (p, d) in [(3u64, 4usize), (7, 4), (3, 8), (11, 4)] {
            let out = certify(p, d, DEFAULT_BUDGET).unwrap();
            for c in &out.certificates {
                assert!(is_coprime_to_cyclotomic(&c.relation), "p = {p}: {}", c.relation);
                assert!(c.n > BigInt::zero());
                c.verify().unwrap();
            }
        }
    }

    #[test]
    fn tampered_certificate_rejected() {
        let mut cert = certify(7, 4, DEFAULT_BUDGET).unwrap().certificates.remove(0);
        cert.n += 1;
        assert!(cert.verify().is_err());
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn coordinate_permutations_preserve_metabolizers() {
        for (p, d) in [(3u64, 4usize), (7, 4), (11, 4)] {
            let sp = space(p, d);
            let table = DlogTable::new(p).unwrap();
            let all = enumerate_metabolizers(&sp, DEFAULT_BUDGET).unwrap();
            for m in &all {
                for perm in permutations(d) {
                    let moved = m.permuted(p, &perm);
                    assert!(is_self_annihilating(&sp, moved.basis()));
                    assert!(all.contains(&moved));
                    let cert = certify_metabolizer(&sp, &moved, &table).unwrap();
                    assert!(cert.n > BigInt::zero());
                    cert.verify().unwrap();
                }
            }
        }
    }

    #[test]
    fn integer_n_depends_on_coordinate_order() {
        // Same subgroup up to a coordinate swap, different relations:
        // 2 + t + t² (n = 44) versus 2 + t³ (n = 33) in ℤ[ℤ₅].
        let sp = space(11, 4);
        let table = DlogTable::new(11).unwrap();
        let all = enumerate_metabolizers(&sp, DEFAULT_BUDGET).unwrap();
        let m = all[0].clone();
        let n0 = certify_metabolizer(&sp, &m, &table).unwrap();
        let swapped = m.permuted(11, &[0, 2, 1, 3]);
        let n1 = certify_metabolizer(&sp, &swapped, &table).unwrap();
        let mut pair = [n0.n.clone(), n1.n.clone()];
        pair.sort();
        assert_eq!(
            pair,
            [BigInt::from(33), BigInt::from(44)],
            "{} / {}",
            n0.relation,
            n1.relation
        );
    }
}
