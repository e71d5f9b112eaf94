//! Small integer number theory used for field construction and sweeps.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Writes `q = p^e`, failing when `q` is not a prime power.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, e)] => Ok((*p, *e)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_ok()
}

/// All prime powers `p^k <= limit` with `k >= 1`, sorted.
pub fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in (2..=limit).filter(|&p| is_prime(p)) {
        let mut pk = p;
        while pk <= limit {
            out.push(pk);
            pk = match pk.checked_mul(p) {
                Some(v) => v,
                None => break,
            };
        }
    }
    out.sort_unstable();
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
