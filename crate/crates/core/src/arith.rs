//! Small modular-arithmetic helpers shared by the group code.

#[inline]
pub(crate) fn mul_mod(x: u64, y: u64, modulus: u64) -> u64 {
    ((x as u128 * y as u128) % modulus as u128) as u64
}

#[inline]
pub(crate) fn add_mod(x: u64, y: u64, modulus: u64) -> u64 {
    ((x as u128 + y as u128) % modulus as u128) as u64
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1 % modulus;
    let mut sq = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, sq, modulus);
        }
        sq = mul_mod(sq, sq, modulus);
        exp >>= 1;
    }
    acc
}

/// `1 + q + q^2 + ... + q^(k-1)` modulo `modulus`, by binary doubling.
///
/// No division is involved, so this is valid when `q - 1` is not invertible.
pub(crate) fn geometric_sum(q: u64, k: u64, modulus: u64) -> u64 {
    if modulus == 1 || k == 0 {
        return 0;
    }
    // (sum, power) for the prefix processed so far: S(c) and q^c.
    let mut sum = 0u64;
    let mut power = 1 % modulus;
    let q = q % modulus;
    for bit in (0..64 - k.leading_zeros()).rev() {
        // c -> 2c
        sum = mul_mod(sum, add_mod(1, power, modulus), modulus);
        power = mul_mod(power, power, modulus);
        if (k >> bit) & 1 == 1 {
            // c -> c + 1
            sum = add_mod(sum, power, modulus);
            power = mul_mod(power, q, modulus);
        }
    }
    sum
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some(p)` when `n = p^k` for a prime `p` and `k >= 1`.
pub(crate) fn prime_power_base(n: u64) -> Option<u64> {
    match prime_factors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_sum_matches_naive() {
        for modulus in [1u64, 2, 9, 27, 81, 1000] {
            for q in 0..20u64 {
                let mut naive = 0u64;
                let mut pw = 1 % modulus;
                for k in 0..40u64 {
                    assert_eq!(geometric_sum(q, k, modulus), naive, "q={q} k={k} mod={modulus}");
                    naive = (naive + pw) % modulus;
                    pw = pw * (q % modulus) % modulus;
                }
            }
        }
    }

    #[test]
    fn primes() {
        assert!(is_prime(3) && is_prime(2) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_power_base(243), Some(3));
        assert_eq!(prime_power_base(18), None);
        assert_eq!(prime_power_base(1), None);
    }
}
