//! Dense polynomial arithmetic over a prime field on raw coefficient
//! vectors (constant term first). This backs extension-field element
//! arithmetic and the irreducibility check of extension moduli; the
//! general-purpose polynomial type over any `FieldSpec` lives in
//! `polyring`.

use super::ints::{mulmod, powmod};

pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % p;
    }
    trim(out)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` by nonzero `b`.
pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = deg(b).expect("rem by zero polynomial");
    let lead_inv = inv_mod_p(b[db], p);
    let mut r: Vec<u64> = a.to_vec();
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let coef = mulmod(r[dr], lead_inv, p);
        for j in 0..=db {
            r[dr - db + j] = (r[dr - db + j] + p - mulmod(coef, b[j], p)) % p;
        }
        r = trim(r);
    }
    r
}

pub fn monic(v: &[u64], p: u64) -> Vec<u64> {
    match deg(v) {
        None => Vec::new(),
        Some(d) => {
            let inv = inv_mod_p(v[d], p);
            trim(v.iter().map(|&c| mulmod(c, inv, p)).collect())
        }
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Inverse of `a` modulo `m` via extended Euclid; `None` when not coprime.
pub fn invmod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    // r0 = m, r1 = a mod m; maintain r = t*a (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = rem(a, m, p);
    let mut t0: Vec<u64> = Vec::new();
    let mut t1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // quotient of r0 by r1
        let (q, r) = divmod(&r0, &r1, p);
        r0 = r1;
        r1 = r;
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        t0 = t1;
        t1 = t2;
    }
    if deg(&r0) != Some(0) {
        return None;
    }
    let inv = inv_mod_p(r0[0], p);
    Some(trim(t0.iter().map(|&c| mulmod(c, inv, p)).collect()))
}

pub fn divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = deg(b).expect("divmod by zero polynomial");
    let da = match deg(a) {
        None => return (Vec::new(), Vec::new()),
        Some(d) if d < db => return (Vec::new(), a.to_vec()),
        Some(d) => d,
    };
    let lead_inv = inv_mod_p(b[db], p);
    let mut r: Vec<u64> = a.to_vec();
    let mut q = vec![0u64; da - db + 1];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let coef = mulmod(r[dr], lead_inv, p);
        q[dr - db] = coef;
        for j in 0..=db {
            r[dr - db + j] = (r[dr - db + j] + p - mulmod(coef, b[j], p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn mulmodpoly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

pub fn powmodpoly(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmodpoly(&acc, &base, m, p);
        }
        base = mulmodpoly(&base, &base, m, p);
        exp >>= 1;
    }
    acc
}

/// Rabin irreducibility test over the prime field `GF(p)` for a monic
/// modulus candidate of degree `u >= 1`. Requires `p^u < 2^63`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let u = match deg(f) {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if u == 1 {
        return true;
    }
    // x^(p^j) mod f for j = 1..u via iterated p-th powers
    let x = vec![0u64, 1];
    let mut frob = x.clone();
    let prime_divs: Vec<usize> = {
        let mut divs = Vec::new();
        let mut m = u;
        let mut w = 2;
        while w * w <= m {
            if m % w == 0 {
                divs.push(w);
                while m % w == 0 {
                    m /= w;
                }
            }
            w += 1;
        }
        if m > 1 {
            divs.push(m);
        }
        divs
    };
    for j in 1..=u {
        frob = powmodpoly(&frob, p, f, p);
        if j < u && prime_divs.iter().any(|&w| j == u / w) {
            let g = gcd(&sub(&frob, &x, p), f, p);
            if deg(&g) != Some(0) {
                return false;
            }
        }
    }
    frob == rem(&x, f, p)
}
