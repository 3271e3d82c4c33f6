//! Primality and factorization for 64-bit integers.

use super::modp::{mul_mod, pow_mod};

// Deterministic for every n < 2^64.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller-Rabin with a witness set that is exact on the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs; empty for `n <= 1`.
///
/// Trial division, stopping early once the remaining cofactor passes the
/// primality gate.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while n > 1 {
        if is_prime(n) {
            out.push((n, 1));
            break;
        }
        // n is composite, so it has a divisor no larger than its square root
        while !n.is_multiple_of(d) {
            d += if d == 2 { 1 } else { 2 };
        }
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        out.push((d, e));
    }
    out
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Primes congruent to 3 mod 4, ascending: 3, 7, 11, 19, 23, 31, ...
pub fn primes_three_mod_four() -> impl Iterator<Item = u64> {
    (3u64..).step_by(4).filter(|&n| is_prime(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn agrees_with_naive_below_ten_thousand() {
        for n in 0..10_000 {
            assert_eq!(is_prime(n), naive_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn large_values() {
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime(2_305_843_009_213_693_951));
    }

    #[test]
    fn factorization_reassembles() {
        for n in 1..5_000u64 {
            let f = factorize(n);
            let prod: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(f.iter().all(|&(p, _)| is_prime(p)));
            assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
        }
        assert_eq!(factorize(21), vec![(3, 1), (7, 1)]);
        assert_eq!(factorize(9), vec![(3, 2)]);
        assert_eq!(factorize(713), vec![(23, 1), (31, 1)]);
    }

    #[test]
    fn three_mod_four_sequence() {
        let first: Vec<u64> = primes_three_mod_four().take(8).collect();
        assert_eq!(first, vec![3, 7, 11, 19, 23, 31, 43, 47]);
    }
}
