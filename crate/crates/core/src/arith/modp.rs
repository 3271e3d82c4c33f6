//! Small-modulus arithmetic on `u64` residues.

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`; `None` when `a ≡ 0`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (a != 0).then(|| pow_mod(a, p - 2, p))
}

pub fn reduce_i64(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Reduces a signed vector into `0..p`.
pub fn reduce_vec(v: &[i64], p: u64) -> Vec<u64> {
    v.iter().map(|&x| reduce_i64(x, p)).collect()
}

pub fn dot_mod(a: &[u64], b: &[u64], p: u64) -> u64 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| (acc + mul_mod(x, y, p)) % p)
}

/// Legendre symbol for an odd prime: 1, -1, or 0.
pub fn legendre(a: u64, p: u64) -> i8 {
    match pow_mod(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}
