//! Integer-side number theory: deterministic Miller-Rabin below 2^64,
//! Pollard rho factorization, p-adic valuations and multiplicative orders.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::DEFAULT_SEED;

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set covers all n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest `v` with `p^v | k`; rejects `k = 0`.
pub fn valuation(p: u64, k: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::ValuationOfZero);
    }
    let mut k = k;
    let mut v = 0;
    while k % p == 0 {
        k /= p;
        v += 1;
    }
    Ok(v)
}

/// Prime factorization with primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, m)| acc * p.pow(m))
    }

    pub fn radical(&self) -> u64 {
        self.pairs.iter().fold(1u64, |acc, &(p, _)| acc * p)
    }

    pub fn valuation_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    pub fn euler_phi(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, m)| acc * (p - 1) * p.pow(m - 1))
    }

    /// Multiplies in another prime power, keeping primes sorted.
    pub fn merge_prime_power(&self, p: u64, t: u32) -> Factorization {
        let mut pairs = self.pairs.clone();
        match pairs.binary_search_by_key(&p, |&(q, _)| q) {
            Ok(i) => pairs[i].1 += t,
            Err(i) => pairs.insert(i, (p, t)),
        }
        Factorization { pairs }
    }

    pub fn one() -> Factorization {
        Factorization { pairs: Vec::new() }
    }
}

fn pollard_rho(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    // Brent's cycle detection; n is odd, composite and has no tiny factors.
    loop {
        let c = rng.gen_range(1..n);
        let mut x = rng.gen_range(0..n);
        let mut y = x;
        let mut d = 1u64;
        let step = |v: u64| (mulmod(v, v, n) + c) % n;
        while d == 1 {
            x = step(x);
            y = step(step(y));
            if x == y {
                break;
            }
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != 1 && d != n {
            return d;
        }
    }
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Complete prime factorization of `n >= 2`: trial division up to 10^6,
/// then Pollard rho with Miller-Rabin certification of every factor.
pub fn integer_factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "integer_factorize requires n >= 2, got {n}"
        )));
    }
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    let push = |p: u64, pairs: &mut Vec<(u64, u32)>, rest: &mut u64| {
        let mut m = 0;
        while *rest % p == 0 {
            *rest /= p;
            m += 1;
        }
        if m > 0 {
            pairs.push((p, m));
        }
    };
    push(2, &mut pairs, &mut rest);
    push(3, &mut pairs, &mut rest);
    let mut d = 5u64;
    while d <= 1_000_000 && d * d <= rest {
        push(d, &mut pairs, &mut rest);
        push(d + 2, &mut pairs, &mut rest);
        d += 6;
    }
    if rest > 1 {
        let mut stack = vec![rest];
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime(m) {
                match pairs.binary_search_by_key(&m, |&(q, _)| q) {
                    Ok(i) => pairs[i].1 += 1,
                    Err(_) => pairs.push((m, 1)),
                }
                continue;
            }
            let d = pollard_rho(m, &mut rng);
            stack.push(d);
            stack.push(m / d);
        }
    }
    pairs.sort_by_key(|&(p, _)| p);
    // collapse duplicates that may arise from the stack path
    let mut merged: Vec<(u64, u32)> = Vec::new();
    for (p, m) in pairs {
        match merged.last_mut() {
            Some(last) if last.0 == p => last.1 += m,
            _ => merged.push((p, m)),
        }
    }
    let f = Factorization { pairs: merged };
    debug_assert_eq!(f.value(), n);
    Ok(f)
}

/// Multiplicative order of `a` modulo `k` (requires `gcd(a, k) = 1`).
pub fn ord_mod(a: u64, k: u64) -> Result<u64> {
    if k == 1 {
        return Ok(1);
    }
    let a = a % k;
    if gcd_u64(a, k) != 1 {
        return Err(Error::Precondition(format!(
            "ord_mod requires gcd({a}, {k}) = 1"
        )));
    }
    let phi = integer_factorize(k)?.euler_phi();
    if phi == 1 {
        return Ok(1);
    }
    let mut t = phi;
    for w in integer_factorize(phi)?.primes() {
        while t % w == 0 && powmod(a, t / w, k) == 1 {
            t /= w;
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(2, 58).unwrap(), 1);
        assert_eq!(valuation(29, 58).unwrap(), 1);
        assert_eq!(valuation(2, 256).unwrap(), 8);
        assert!(matches!(valuation(2, 0), Err(Error::ValuationOfZero)));
        assert!(matches!(valuation(4, 8), Err(Error::NotPrime(4))));
    }

    #[test]
    fn valuation_agrees_with_naive_division() {
        for k in 1..=100_000u64 {
            let mut v = 0;
            let mut m = k;
            while m % 3 == 0 {
                m /= 3;
                v += 1;
            }
            assert_eq!(valuation(3, k).unwrap(), v);
        }
    }

    #[test]
    fn factorize_examples() {
        let f = integer_factorize(3480).unwrap();
        assert_eq!(f.pairs(), &[(2, 3), (3, 1), (5, 1), (29, 1)]);
        assert_eq!(f.value(), 3480);
        assert_eq!(59u64 * 59 - 1, 3480);

        assert_eq!(integer_factorize(2).unwrap().pairs(), &[(2, 1)]);
        assert_eq!(integer_factorize(256).unwrap().pairs(), &[(2, 8)]);
    }

    #[test]
    fn factorize_remultiplies_and_certifies() {
        for n in [2u64, 97, 1 << 20, 59 * 59 - 1, 257 * 257 - 1, 600_851_475_143] {
            let f = integer_factorize(n).unwrap();
            assert_eq!(f.value(), n);
            for p in f.primes() {
                assert!(is_prime(p));
            }
        }
    }

    #[test]
    fn miller_rabin_small() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
        assert!(is_prime(2_u64.pow(61) - 1));
        assert!(!is_prime(2_u64.pow(61)));
    }

    #[test]
    fn orders() {
        assert_eq!(ord_mod(5, 9).unwrap(), 6);
        assert_eq!(ord_mod(13, 9).unwrap(), 3);
        assert_eq!(ord_mod(257, 25).unwrap(), 4);
        assert_eq!(ord_mod(2, 5).unwrap(), 4);
    }
}
