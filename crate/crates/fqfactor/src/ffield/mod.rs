//! Exact arithmetic in `GF(q)` for `q = p^u < 2^63`: prime fields and
//! explicit extension fields presented as `GF(p)[y]/(modulus)`, together
//! with element orders, root extraction (Tonelli-Shanks and its odd-prime
//! generalization) and primitive roots of unity.

pub mod ints;
pub(crate) mod rawpoly;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use ints::{integer_factorize, is_prime, ord_mod, valuation, Factorization};

use crate::error::{Error, Result};

/// Description of a finite field `GF(q)`, `q = p^u`.
///
/// Cheap to clone; elements hold a handle to their spec.
#[derive(Clone)]
pub struct FieldSpec(Arc<SpecInner>);

struct SpecInner {
    p: u64,
    u: u32,
    q: u64,
    /// Monic irreducible modulus over `GF(p)`, constant first; `None` for
    /// prime fields.
    modulus: Option<Vec<u64>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.modulus == other.0.modulus
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.u)
    }
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if !ints::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 63 {
            return Err(Error::FieldTooLarge(p as u128));
        }
        Ok(FieldSpec(Arc::new(SpecInner {
            p,
            u: 1,
            q: p,
            modulus: None,
        })))
    }

    /// Extension field `GF(p)[y]/(modulus)`; the modulus must be monic,
    /// of degree >= 2 and irreducible over `GF(p)`.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<FieldSpec> {
        if !ints::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let m: Vec<u64> = rawpoly::trim(modulus.iter().map(|&c| c % p).collect());
        let u = match rawpoly::deg(&m) {
            Some(d) if d >= 2 => d as u32,
            _ => {
                return Err(Error::Precondition(
                    "extension modulus must have degree >= 2".into(),
                ))
            }
        };
        if *m.last().unwrap() != 1 {
            return Err(Error::Precondition("extension modulus must be monic".into()));
        }
        let q = (p as u128).checked_pow(u).filter(|&q| q < 1 << 63).ok_or(
            Error::FieldTooLarge((p as u128).saturating_pow(u)),
        )? as u64;
        if !rawpoly::is_irreducible(&m, p) {
            return Err(Error::NotIrreducible);
        }
        Ok(FieldSpec(Arc::new(SpecInner {
            p,
            u,
            q,
            modulus: Some(m),
        })))
    }

    /// `GF(p^u)` with the lexicographically least monic irreducible modulus.
    pub fn canonical_extension(p: u64, u: u32) -> Result<FieldSpec> {
        if u == 1 {
            return FieldSpec::prime(p);
        }
        if !ints::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        // enumerate monic degree-u polynomials by constant-first digits
        let count = (p as u128).checked_pow(u).ok_or(Error::FieldTooLarge(u128::MAX))?;
        for idx in 0..count {
            let mut coeffs = Vec::with_capacity(u as usize + 1);
            let mut i = idx;
            for _ in 0..u {
                coeffs.push((i % p as u128) as u64);
                i /= p as u128;
            }
            coeffs.push(1);
            if rawpoly::is_irreducible(&coeffs, p) {
                return FieldSpec::extension(p, &coeffs);
            }
        }
        Err(Error::Internal(format!(
            "no irreducible modulus of degree {u} over GF({p})"
        )))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn ext_degree(&self) -> u32 {
        self.0.u
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.modulus.is_none()
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        self.from_u64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        let v = v % self.0.p;
        let repr = if self.is_prime_field() {
            Repr::Prime(v)
        } else {
            Repr::Ext(rawpoly::trim(vec![v]))
        };
        FieldElement {
            spec: self.clone(),
            repr,
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        let p = self.0.p as i64;
        self.from_u64(v.rem_euclid(p) as u64)
    }

    /// Element from subfield coefficients, constant first, reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        let reduced: Vec<u64> = coeffs.iter().map(|&c| c % self.0.p).collect();
        if self.is_prime_field() {
            let trimmed = rawpoly::trim(reduced);
            assert!(trimmed.len() <= 1, "prime-field element with y-terms");
            self.from_u64(trimmed.first().copied().unwrap_or(0))
        } else {
            assert!(
                coeffs.len() <= self.0.u as usize,
                "coefficient vector exceeds extension degree"
            );
            FieldElement {
                spec: self.clone(),
                repr: Repr::Ext(rawpoly::trim(reduced)),
            }
        }
    }

    /// Embed an element of the prime subfield.
    pub fn embed(&self, base: &FieldElement) -> FieldElement {
        assert_eq!(base.spec.characteristic(), self.characteristic());
        assert!(base.spec.is_prime_field());
        self.from_u64(base.to_u64().unwrap())
    }

    /// All `q` field elements, in representative order. Desk scale only.
    pub fn iter_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.0.q;
        (0..q).map(move |i| self.element_from_index(i))
    }

    pub fn element_from_index(&self, mut i: u64) -> FieldElement {
        if self.is_prime_field() {
            self.from_u64(i)
        } else {
            let p = self.0.p;
            let mut coeffs = Vec::with_capacity(self.0.u as usize);
            for _ in 0..self.0.u {
                coeffs.push(i % p);
                i /= p;
            }
            self.from_coeffs(&coeffs)
        }
    }

    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> FieldElement {
        self.element_from_index(rng.gen_range(0..self.0.q))
    }

    fn random_nonzero(&self, rng: &mut ChaCha8Rng) -> FieldElement {
        loop {
            let e = self.random_element(rng);
            if !e.is_zero() {
                return e;
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Prime(u64),
    /// Trimmed coefficient vector over `GF(p)`, constant first.
    Ext(Vec<u64>),
}

/// A residue in a [`FieldSpec`], always kept in canonical reduced form.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: Repr,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Prime(v) => write!(f, "{v}"),
            Repr::Ext(c) => {
                if c.len() <= 1 {
                    return write!(f, "{}", c.first().copied().unwrap_or(0));
                }
                write!(f, "(")?;
                let mut first = true;
                for (i, &v) in c.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{v}")?,
                        1 if v == 1 => write!(f, "y")?,
                        1 => write!(f, "{v}*y")?,
                        _ if v == 1 => write!(f, "y^{i}")?,
                        _ => write!(f, "{v}*y^{i}")?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Representative order: the integer encoding `sum c_i p^i` of the
/// canonical coefficient vector. Only meaningful within one spec.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => a.cmp(b),
            (Repr::Ext(a), Repr::Ext(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| a.iter().rev().cmp(b.iter().rev())),
            _ => panic!("comparing elements of different field kinds"),
        }
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Prime(v) => *v == 0,
            Repr::Ext(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Prime(v) => *v == 1,
            Repr::Ext(c) => c == &[1],
        }
    }

    /// Canonical coefficient vector over the prime subfield, constant
    /// first, padded to the extension degree.
    pub fn coeffs(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Prime(v) => vec![*v],
            Repr::Ext(c) => {
                let mut out = c.clone();
                out.resize(self.spec.ext_degree() as usize, 0);
                out
            }
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match &self.repr {
            Repr::Prime(v) => Some(*v),
            Repr::Ext(c) => match c.len() {
                0 => Some(0),
                1 => Some(c[0]),
                _ => None,
            },
        }
    }

    fn check_same(&self, other: &FieldElement) {
        assert!(self.spec == other.spec, "operands from different fields");
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let p = self.spec.characteristic();
        let repr = match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime((a + b) % p),
            (Repr::Ext(a), Repr::Ext(b)) => Repr::Ext(rawpoly::add(a, b, p)),
            _ => unreachable!(),
        };
        FieldElement {
            spec: self.spec.clone(),
            repr,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let p = self.spec.characteristic();
        let repr = match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime((a + p - b) % p),
            (Repr::Ext(a), Repr::Ext(b)) => Repr::Ext(rawpoly::sub(a, b, p)),
            _ => unreachable!(),
        };
        FieldElement {
            spec: self.spec.clone(),
            repr,
        }
    }

    pub fn neg(&self) -> FieldElement {
        self.spec.zero().sub(self)
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let p = self.spec.characteristic();
        let repr = match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(ints::mulmod(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => {
                let m = self.spec.modulus().unwrap();
                Repr::Ext(rawpoly::mulmodpoly(a, b, m, p))
            }
            _ => unreachable!(),
        };
        FieldElement {
            spec: self.spec.clone(),
            repr,
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.spec.characteristic();
        let repr = match &self.repr {
            Repr::Prime(a) => Repr::Prime(ints::powmod(*a, p - 2, p)),
            Repr::Ext(a) => {
                let m = self.spec.modulus().unwrap();
                Repr::Ext(rawpoly::invmod(a, m, p).ok_or(Error::DivisionByZero)?)
            }
        };
        Ok(FieldElement {
            spec: self.spec.clone(),
            repr,
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        self.pow_u128(exp as u128)
    }

    pub fn pow_u128(&self, mut exp: u128) -> FieldElement {
        let mut acc = self.spec.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Power with possibly negative exponent (nonzero base when negative).
    pub fn pow_signed(&self, exp: i128) -> Result<FieldElement> {
        if exp >= 0 {
            Ok(self.pow_u128(exp as u128))
        } else {
            Ok(self.inv()?.pow_u128(exp.unsigned_abs()))
        }
    }

    /// Frobenius conjugate over the base field of a quadratic extension.
    pub fn conjugate(&self) -> FieldElement {
        assert_eq!(self.spec.ext_degree(), 2, "conjugate needs a quadratic extension");
        self.pow(self.spec.characteristic())
    }

    /// Sees this element in the prime subfield when possible.
    pub fn try_descend(&self, base: &FieldSpec) -> Option<FieldElement> {
        assert_eq!(base.characteristic(), self.spec.characteristic());
        self.to_u64().map(|v| base.from_u64(v))
    }
}

/// Least `k >= 1` with `beta^k = 1`; rejects zero.
pub fn element_order(beta: &FieldElement) -> Result<u64> {
    if beta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let q = beta.spec().q();
    let mut t = q - 1;
    if t == 0 {
        return Ok(1);
    }
    for w in integer_factorize(q - 1)?.primes() {
        while t % w == 0 && beta.pow(t / w).is_one() {
            t /= w;
        }
    }
    Ok(t)
}

/// A primitive `k`-th root of unity, i.e. an element of `U(k)`.
///
/// Draws a seeded uniform element until its order has full `k`-part, then
/// projects with the exponent `(q-1)/k`. Deterministic given the seed.
pub fn primitive_kth_root(spec: &FieldSpec, k: u64, seed: u64) -> Result<FieldElement> {
    let qm1 = spec.q() - 1;
    if k == 0 || (qm1 == 0 && k > 1) || (qm1 > 0 && qm1 % k != 0) {
        return Err(Error::NoKthRoots { k, qm1 });
    }
    if k == 1 {
        return Ok(spec.one());
    }
    let prime_divs: Vec<u64> = integer_factorize(k)?.primes().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let theta = spec.random_nonzero(&mut rng);
        if prime_divs.iter().all(|&w| !theta.pow(qm1 / w).is_one()) {
            return Ok(theta.pow(qm1 / k));
        }
    }
}

/// Square root with the canonical (lexicographically smaller) choice.
pub fn sqrt(a: &FieldElement) -> Option<FieldElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(crate::DEFAULT_SEED);
    let r = prime_root(a, 2, &mut rng)?;
    let r2 = r.neg();
    Some(if r <= r2 { r } else { r2 })
}

/// Some `r` with `r^n = a` when one exists. Adleman-Manders-Miller per
/// prime divisor of `n`; deterministic given the seed.
pub fn nth_root(a: &FieldElement, n: u64, seed: u64) -> Option<FieldElement> {
    assert!(n >= 1);
    if n == 1 {
        return Some(a.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = a.clone();
    for &(w, cnt) in integer_factorize(n).ok()?.pairs() {
        for _ in 0..cnt {
            cur = prime_root(&cur, w, &mut rng)?;
        }
    }
    Some(cur)
}

/// `w`-th root for prime `w` (Tonelli-Shanks / AMM).
fn prime_root(a: &FieldElement, w: u64, rng: &mut ChaCha8Rng) -> Option<FieldElement> {
    let spec = a.spec();
    let q = spec.q();
    if a.is_zero() {
        return Some(spec.zero());
    }
    let qm1 = q - 1;
    if qm1 % w != 0 {
        // x -> x^w is a bijection
        let winv = mod_inverse(w as i128, qm1 as i128)?;
        return Some(a.pow(winv as u64));
    }
    if !a.pow(qm1 / w).is_one() {
        return None;
    }
    let v = {
        let mut v = 0u32;
        let mut t = qm1;
        while t % w == 0 {
            t /= w;
            v += 1;
        }
        v
    };
    let m = qm1 / w.pow(v); // gcd(m, w) = 1
    // generator of the Sylow w-subgroup
    let g = loop {
        let theta = spec.random_nonzero(rng);
        if !theta.pow(qm1 / w).is_one() {
            break theta.pow(m);
        }
    };
    // Pohlig-Hellman digits of a^m in base g
    let h = a.pow(m);
    let wv = w.pow(v);
    let gamma = g.pow(wv / w); // order w
    let mut s: u64 = 0;
    let mut g_pow = spec.one(); // g^s
    let mut wi = 1u64;
    for i in 0..v {
        let target = h.mul(&g_pow.inv().unwrap()).pow(wv / w.pow(i + 1));
        // brute-force the digit; w is desk-scale
        let mut digit = 0u64;
        let mut probe = spec.one();
        while !probe.mul(&target).is_one() {
            // probe = gamma^{-digit}; advance
            digit += 1;
            if digit == w {
                return None;
            }
            probe = probe.mul(&gamma.inv().unwrap());
        }
        s += digit * wi;
        wi *= w;
        g_pow = g_pow.mul(&g.pow(digit * (wi / w)));
    }
    debug_assert!(g.pow(s) == h);
    if s % w != 0 {
        return None;
    }
    // Bezout: c*m + d*w^v = 1; root = g^{(s/w)c} * a^{d*w^{v-1}}
    let (c, d) = bezout(m as i128, wv as i128);
    let exp_g = ((s / w) as i128 * c).rem_euclid(wv as i128) as u64;
    let exp_a = (d * w.pow(v - 1) as i128).rem_euclid(qm1 as i128) as u64;
    let root = g.pow(exp_g).mul(&a.pow(exp_a));
    debug_assert!(root.pow(w) == *a);
    Some(root)
}

fn bezout(a: i128, b: i128) -> (i128, i128) {
    // returns (x, y) with a*x + b*y = gcd(a, b)
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    (x0, y0)
}

pub(crate) fn mod_inverse(a: i128, m: i128) -> Option<u64> {
    let (x, _) = bezout(a.rem_euclid(m), m);
    let g = {
        let mut r0 = a.rem_euclid(m);
        let mut r1 = m;
        while r1 != 0 {
            (r0, r1) = (r1, r0 % r1);
        }
        r0
    };
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m) as u64)
}

/// `GF(q^2) = GF(q)(sqrt(-1))` for prime `q = 3 (mod 4)`.
pub fn quadratic_extension(spec: &FieldSpec) -> Result<FieldSpec> {
    if !spec.is_prime_field() {
        return Err(Error::Precondition(
            "quadratic_extension is defined over prime fields".into(),
        ));
    }
    let p = spec.characteristic();
    if p % 4 != 3 {
        return Err(Error::Precondition(format!(
            "q = {p} is not 3 mod 4, x^2 + 1 is reducible"
        )));
    }
    FieldSpec::extension(p, &[1, 0, 1])
}
