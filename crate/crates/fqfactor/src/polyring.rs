//! Dense univariate polynomials over a [`FieldSpec`]: ring arithmetic,
//! gcd, modular exponentiation of `x`, Rabin irreducibility, polynomial
//! exponents (orders) and cyclotomic polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{integer_factorize, Factorization, FieldElement, FieldSpec};

/// Dense polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    spec: FieldSpec,
    coeffs: Vec<FieldElement>,
}

const KARATSUBA_THRESHOLD: usize = 64;

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::print_poly(self))
    }
}

impl Poly {
    pub fn zero(spec: &FieldSpec) -> Poly {
        Poly {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &FieldSpec) -> Poly {
        Poly::constant(spec.one())
    }

    pub fn x(spec: &FieldSpec) -> Poly {
        Poly {
            spec: spec.clone(),
            coeffs: vec![spec.zero(), spec.one()],
        }
    }

    pub fn constant(c: FieldElement) -> Poly {
        let spec = c.spec().clone();
        Poly::from_coeffs(&spec, vec![c])
    }

    pub fn monomial(spec: &FieldSpec, c: FieldElement, deg: usize) -> Poly {
        let mut coeffs = vec![spec.zero(); deg];
        coeffs.push(c);
        Poly::from_coeffs(spec, coeffs)
    }

    pub fn from_coeffs(spec: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Poly {
        assert!(coeffs.iter().all(|c| c.spec() == spec));
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            spec: spec.clone(),
            coeffs,
        }
    }

    /// Convenience constructor from signed integer coefficients, constant
    /// first, reduced into the field.
    pub fn from_int_coeffs(spec: &FieldSpec, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(spec, coeffs.iter().map(|&c| spec.from_i64(c)).collect())
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn make_monic(&self) -> Result<Poly> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        let inv = lead.inv()?;
        Ok(self.mul_elt(&inv))
    }

    pub fn neg(&self) -> Poly {
        Poly {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(self.spec == other.spec);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Poly::from_coeffs(&self.spec, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul_elt(&self, c: &FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.spec);
        }
        Poly {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(self.spec == other.spec);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.spec);
        }
        let coeffs = mul_rec(&self.coeffs, &other.coeffs, &self.spec);
        Poly::from_coeffs(&self.spec, coeffs)
    }

    /// Exact Euclidean division: `self = q * b + r`, `deg r < deg b`.
    pub fn divmod(&self, b: &Poly) -> Result<(Poly, Poly)> {
        assert!(self.spec == b.spec);
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let da = match self.degree() {
            None => return Ok((Poly::zero(&self.spec), Poly::zero(&self.spec))),
            Some(d) if d < db => return Ok((Poly::zero(&self.spec), self.clone())),
            Some(d) => d,
        };
        let lead_inv = b.leading().unwrap().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![self.spec.zero(); da - db + 1];
        loop {
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
            if r.len() <= db {
                break;
            }
            let dr = r.len() - 1;
            let coef = r[dr].mul(&lead_inv);
            q[dr - db] = coef.clone();
            for j in 0..=db {
                r[dr - db + j] = r[dr - db + j].sub(&coef.mul(&b.coeffs[j]));
            }
        }
        Ok((
            Poly::from_coeffs(&self.spec, q),
            Poly::from_coeffs(&self.spec, r),
        ))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divmod(b)?.1)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.make_monic()
        }
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.spec);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.spec.from_u64(i as u64)))
            .collect();
        Poly::from_coeffs(&self.spec, coeffs)
    }

    /// `f(x^n)`: coefficient `i` moves to position `i * n`.
    pub fn compose_xn(&self, n: usize) -> Poly {
        assert!(n >= 1);
        if n == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.spec.zero(); (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c.clone();
        }
        Poly::from_coeffs(&self.spec, coeffs)
    }

    /// Canonical order: by degree, then coefficient representatives with
    /// the constant term most significant.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| {
                for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                    let ord = a.cmp(b);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }
}

fn mul_school(a: &[FieldElement], b: &[FieldElement], spec: &FieldSpec) -> Vec<FieldElement> {
    let mut out = vec![spec.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn mul_rec(a: &[FieldElement], b: &[FieldElement], spec: &FieldSpec) -> Vec<FieldElement> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.len() <= KARATSUBA_THRESHOLD {
        return mul_school(a, b, spec);
    }
    let m = a.len() / 2;
    if b.len() <= m {
        // unbalanced: split the long operand only
        let lo = mul_rec(&a[..m], b, spec);
        let hi = mul_rec(&a[m..], b, spec);
        let mut out = vec![spec.zero(); a.len() + b.len() - 1];
        for (i, c) in lo.into_iter().enumerate() {
            out[i] = out[i].add(&c);
        }
        for (i, c) in hi.into_iter().enumerate() {
            out[m + i] = out[m + i].add(&c);
        }
        return out;
    }
    // Karatsuba on the split at m
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m);
    let z0 = mul_rec(a0, b0, spec);
    let z2 = mul_rec(a1, b1, spec);
    let sa: Vec<FieldElement> = (0..a0.len().max(a1.len()))
        .map(|i| {
            let x = a0.get(i).cloned().unwrap_or_else(|| spec.zero());
            let y = a1.get(i).cloned().unwrap_or_else(|| spec.zero());
            x.add(&y)
        })
        .collect();
    let sb: Vec<FieldElement> = (0..b0.len().max(b1.len()))
        .map(|i| {
            let x = b0.get(i).cloned().unwrap_or_else(|| spec.zero());
            let y = b1.get(i).cloned().unwrap_or_else(|| spec.zero());
            x.add(&y)
        })
        .collect();
    let z1 = mul_rec(&sa, &sb, spec);
    let mut out = vec![spec.zero(); a.len() + b.len() - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    for (i, c) in z1.iter().enumerate() {
        let mid = c.sub(z0.get(i).unwrap_or(&spec.zero())).sub(z2.get(i).unwrap_or(&spec.zero()));
        out[m + i] = out[m + i].add(&mid);
    }
    for (i, c) in z2.iter().enumerate() {
        out[2 * m + i] = out[2 * m + i].add(c);
    }
    out
}

/// `a * b mod f`.
pub fn mulmod(a: &Poly, b: &Poly, f: &Poly) -> Result<Poly> {
    a.mul(b).rem(f)
}

/// `base^exp mod f` by square-and-multiply.
pub fn powmod(base: &Poly, mut exp: u128, f: &Poly) -> Result<Poly> {
    let mut acc = Poly::one(base.spec()).rem(f)?;
    let mut base = base.rem(f)?;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(&acc, &base, f)?;
        }
        base = mulmod(&base, &base, f)?;
        exp >>= 1;
    }
    Ok(acc)
}

/// `x^r mod f`.
pub fn modpow_x(r: u128, f: &Poly) -> Result<Poly> {
    if f.is_constant() {
        return Err(Error::Precondition("modpow_x needs a nonconstant modulus".into()));
    }
    powmod(&Poly::x(f.spec()), r, f)
}

/// Rabin irreducibility test: `x^{q^m} = x (mod f)` and
/// `gcd(x^{q^{m/w}} - x, f) = 1` for every prime `w | m`.
pub fn is_irreducible(f: &Poly) -> bool {
    let m = match f.degree() {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if m == 1 {
        return true;
    }
    let q = f.spec().q();
    let x = Poly::x(f.spec());
    let checkpoints: Vec<usize> = integer_factorize(m as u64)
        .expect("degree >= 2")
        .primes()
        .map(|w| m / w as usize)
        .collect();
    let mut frob = x.rem(f).expect("nonconstant modulus");
    for j in 1..=m {
        frob = match powmod(&frob, q as u128, f) {
            Ok(h) => h,
            Err(_) => return false,
        };
        if j < m && checkpoints.contains(&j) {
            match frob.sub(&x).gcd(f) {
                Ok(g) if g.is_constant() => {}
                _ => return false,
            }
        }
    }
    frob == x.rem(f).unwrap()
}

/// Certificate for a monic irreducible polynomial: its degree `m`,
/// exponent `e` (the least `e` with `f | x^e - 1`) and the factorization
/// of `e`.
#[derive(Clone, Debug)]
pub struct IrreducibleInfo {
    poly: Poly,
    m: usize,
    e: u64,
    e_factorization: Factorization,
}

impl IrreducibleInfo {
    /// Validates irreducibility and `f(0) != 0`, then computes the
    /// exponent by factoring `q^m - 1` and stripping primes while
    /// `x^{e/w} = 1 (mod f)`.
    pub fn new(f: &Poly) -> Result<IrreducibleInfo> {
        let f = f.make_monic()?;
        let m = f.degree().ok_or(Error::DivisionByZero)?;
        if m == 0 {
            return Err(Error::NotIrreducible);
        }
        if f.coeff(0).is_zero() {
            return Err(Error::Precondition("f(0) = 0: exponent undefined".into()));
        }
        if !is_irreducible(&f) {
            return Err(Error::NotIrreducible);
        }
        let q = f.spec().q();
        let qm1 = (q as u128)
            .checked_pow(m as u32)
            .filter(|&v| v < 1 << 63)
            .ok_or_else(|| Error::ExponentOverflow((q as u128).saturating_pow(m as u32)))?
            as u64
            - 1;
        let mut e = qm1;
        for w in integer_factorize(qm1)?.primes() {
            while e % w == 0 && modpow_x((e / w) as u128, &f)?.is_one() {
                e /= w;
            }
        }
        let e_factorization = if e == 1 {
            Factorization::one()
        } else {
            integer_factorize(e)?
        };
        Ok(IrreducibleInfo {
            poly: f,
            m,
            e,
            e_factorization,
        })
    }

    /// Trusted constructor used by the splitter's exponent bookkeeping
    /// (each stage multiplies the exponent by the processed prime power).
    pub(crate) fn from_parts_trusted(
        poly: Poly,
        e: u64,
        e_factorization: Factorization,
    ) -> IrreducibleInfo {
        debug_assert_eq!(e_factorization.value(), e);
        let m = poly.degree().expect("nonzero");
        IrreducibleInfo {
            poly,
            m,
            e,
            e_factorization,
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn e_factorization(&self) -> &Factorization {
        &self.e_factorization
    }

    pub fn spec(&self) -> &FieldSpec {
        self.poly.spec()
    }

    /// `q^m - 1`, guaranteed below `2^63` by construction.
    pub fn qm_minus_1(&self) -> u64 {
        (self.spec().q() as u128).pow(self.m as u32) as u64 - 1
    }
}

/// The exponent (order) of a monic irreducible `f` with `f(0) != 0`.
pub fn poly_exponent(f: &Poly) -> Result<IrreducibleInfo> {
    IrreducibleInfo::new(f)
}

/// The `d`-th cyclotomic polynomial over the field, by exact division:
/// `Phi_d = (x^d - 1) / prod_{d' | d, d' < d} Phi_{d'}`.
pub fn cyclotomic_poly(d: u64, spec: &FieldSpec) -> Result<Poly> {
    if d == 0 {
        return Err(Error::Precondition("cyclotomic index must be positive".into()));
    }
    if d % spec.characteristic() == 0 {
        return Err(Error::Precondition(format!(
            "gcd({d}, q) > 1: cyclotomic polynomial not separable"
        )));
    }
    let mut cache: HashMap<u64, Poly> = HashMap::new();
    cyclotomic_rec(d, spec, &mut cache)
}

fn cyclotomic_rec(d: u64, spec: &FieldSpec, cache: &mut HashMap<u64, Poly>) -> Result<Poly> {
    if let Some(p) = cache.get(&d) {
        return Ok(p.clone());
    }
    let mut num = Poly::monomial(spec, spec.one(), d as usize).sub(&Poly::one(spec));
    for dd in divisors(d) {
        if dd == d {
            continue;
        }
        let phi = cyclotomic_rec(dd, spec, cache)?;
        let (q, r) = num.divmod(&phi)?;
        debug_assert!(r.is_zero());
        num = q;
    }
    cache.insert(d, num.clone());
    Ok(num)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// The monic polynomial `c^{-mj} g(c^j x)`: coefficient `k` of `g` is
/// multiplied by `c^{j(k - m)}`.
pub fn transform_factor(g: &Poly, c: &FieldElement, j: i64) -> Result<Poly> {
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let m = match g.degree() {
        None => return Ok(g.clone()),
        Some(m) => m,
    };
    let cj = c.pow_signed(j as i128)?;
    let cj_inv = cj.inv()?;
    // factor for coefficient k is cj^{k-m}; walk k = m down to 0
    let mut factor = g.spec().one();
    let mut coeffs = vec![g.spec().zero(); m + 1];
    for k in (0..=m).rev() {
        coeffs[k] = g.coeff(k).mul(&factor);
        factor = factor.mul(&cj_inv);
    }
    Ok(Poly::from_coeffs(g.spec(), coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;

    fn f(q: u64) -> FieldSpec {
        FieldSpec::prime(q).unwrap()
    }

    #[test]
    fn mul_examples() {
        let f13 = f(13);
        let a = Poly::from_int_coeffs(&f13, &[-1, 1]);
        let b = Poly::from_int_coeffs(&f13, &[1, 1]);
        assert_eq!(a.mul(&b), Poly::from_int_coeffs(&f13, &[-1, 0, 1]));

        // Phi_12 over GF(59) splits as in the quadratic pair
        let f59 = f(59);
        let g1 = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        let g2 = Poly::from_int_coeffs(&f59, &[1, 11, 1]);
        assert_eq!(g1.mul(&g2), Poly::from_int_coeffs(&f59, &[1, 0, -1, 0, 1]));
        assert_eq!(g1.mul(&g2), cyclotomic_poly(12, &f59).unwrap());
    }

    #[test]
    fn gcd_examples() {
        let f13 = f(13);
        let a = Poly::from_int_coeffs(&f13, &[-1, 0, 1]);
        let b = Poly::from_int_coeffs(&f13, &[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let f13 = f(13);
        let a: Vec<FieldElement> = (0..200).map(|i| f13.from_u64(i * 7 + 3)).collect();
        let b: Vec<FieldElement> = (0..150).map(|i| f13.from_u64(i * 5 + 1)).collect();
        let fast = mul_rec(&a, &b, &f13);
        let slow = mul_school(&a, &b, &f13);
        assert_eq!(fast, slow);
    }

    #[test]
    fn modpow_x_examples() {
        let f59 = f(59);
        let poly = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        assert!(modpow_x(0, &poly).unwrap().is_one());
        assert!(modpow_x(12, &poly).unwrap().is_one());

        let f257 = f(257);
        let phi5 = Poly::from_int_coeffs(&f257, &[1, 1, 1, 1, 1]);
        assert!(modpow_x(5, &phi5).unwrap().is_one());
    }

    #[test]
    fn irreducibility_examples() {
        let f59 = f(59);
        assert!(is_irreducible(&Poly::from_int_coeffs(&f59, &[1, -11, 1])));
        let f13 = f(13);
        assert!(!is_irreducible(&Poly::from_int_coeffs(&f13, &[-1, 0, 1])));
        let f257 = f(257);
        assert!(is_irreducible(&Poly::from_int_coeffs(&f257, &[1, 1, 1, 1, 1])));
    }

    #[test]
    fn exponent_examples() {
        let f59 = f(59);
        let info = poly_exponent(&Poly::from_int_coeffs(&f59, &[-1, 1])).unwrap();
        assert_eq!(info.e(), 1);

        let info = poly_exponent(&Poly::from_int_coeffs(&f59, &[1, -11, 1])).unwrap();
        assert_eq!(info.e(), 12);
        assert_eq!(info.m(), 2);

        let f257 = f(257);
        let info = poly_exponent(&Poly::from_int_coeffs(&f257, &[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(info.e(), 5);

        // f(0) = 0 rejected
        let f13 = f(13);
        assert!(poly_exponent(&Poly::x(&f13)).is_err());
        // reducible rejected
        assert!(poly_exponent(&Poly::from_int_coeffs(&f13, &[-1, 0, 1])).is_err());
    }

    #[test]
    fn exponent_satisfies_frobenius_relation() {
        // m = ord_e q for every irreducible f, exhaustively at small scale
        let f5 = f(5);
        for c0 in 1..5i64 {
            for c1 in 0..5i64 {
                let poly = Poly::from_int_coeffs(&f5, &[c0, c1, 1]);
                if !is_irreducible(&poly) {
                    continue;
                }
                let info = poly_exponent(&poly).unwrap();
                assert_eq!(info.qm_minus_1() % info.e(), 0);
                assert_eq!(crate::ffield::ord_mod(5, info.e()).unwrap(), 2);
            }
        }
    }

    #[test]
    fn cyclotomic_examples() {
        let f59 = f(59);
        assert_eq!(
            cyclotomic_poly(1, &f59).unwrap(),
            Poly::from_int_coeffs(&f59, &[-1, 1])
        );
        assert_eq!(
            cyclotomic_poly(12, &f59).unwrap(),
            Poly::from_int_coeffs(&f59, &[1, 0, -1, 0, 1])
        );
        // Lemma: Phi_{m p^t}(x) = Phi_{m p}(x^{p^{t-1}})
        let f13 = f(13);
        assert_eq!(
            cyclotomic_poly(18, &f13).unwrap(),
            cyclotomic_poly(6, &f13).unwrap().compose_xn(3)
        );
        // gcd(d, q) > 1 rejected
        assert!(cyclotomic_poly(26, &f13).is_err());
    }

    #[test]
    fn cyclotomic_product_reconstructs() {
        let f13 = f(13);
        for n in 1..=30u64 {
            if n % 13 == 0 {
                continue;
            }
            let mut prod = Poly::one(&f13);
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic_poly(d, &f13).unwrap());
            }
            let target = Poly::monomial(&f13, f13.one(), n as usize).sub(&Poly::one(&f13));
            assert_eq!(prod, target);
        }
    }

    #[test]
    fn cyclotomic_negation_identity() {
        // Phi_{2d}(x) = Phi_d(-x) for odd d > 3
        let f13 = f(13);
        for d in [5u64, 7, 9, 11, 15] {
            let phi2d = cyclotomic_poly(2 * d, &f13).unwrap();
            let phid = cyclotomic_poly(d, &f13).unwrap();
            let neg_sub: Vec<FieldElement> = phid
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect();
            assert_eq!(phi2d, Poly::from_coeffs(&f13, neg_sub));
        }
    }

    #[test]
    fn compose_examples() {
        let f59 = f(59);
        let poly = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        assert_eq!(poly.compose_xn(1), poly);
        let big = poly.compose_xn(29);
        assert_eq!(big.degree(), Some(58));
        assert_eq!(big.coeff(29), f59.from_i64(-11));
        assert_eq!(big.coeff(0), f59.one());

        let f257 = f(257);
        let phi5 = Poly::from_int_coeffs(&f257, &[1, 1, 1, 1, 1]);
        let composed = phi5.compose_xn(256);
        assert_eq!(composed.degree(), Some(1024));
        for d in [0usize, 256, 512, 768, 1024] {
            assert!(composed.coeff(d).is_one());
        }
    }

    #[test]
    fn transform_examples() {
        let f59 = f(59);
        let g = Poly::from_int_coeffs(&f59, &[29, -21, 1]);
        let c = f59.from_u64(5);
        assert_eq!(transform_factor(&g, &c, 0).unwrap(), g);
        // c^{-1} = 12, c^{-2} = 26
        let t = transform_factor(&g, &c, 1).unwrap();
        let want = Poly::from_coeffs(
            &f59,
            vec![
                f59.from_u64(29).mul(&f59.from_u64(26)),
                f59.from_i64(-21).mul(&f59.from_u64(12)),
                f59.one(),
            ],
        );
        assert_eq!(t, want);
        // c = 1 fixes everything
        for j in 0..5 {
            assert_eq!(transform_factor(&g, &f59.one(), j).unwrap(), g);
        }
    }

    #[test]
    fn transform_is_additive_in_j() {
        let f59 = f(59);
        let g = Poly::from_int_coeffs(&f59, &[29, -21, 1]);
        let c = f59.from_u64(5);
        for i in 0..6i64 {
            for j in 0..6i64 {
                let two_step =
                    transform_factor(&transform_factor(&g, &c, i).unwrap(), &c, j).unwrap();
                assert_eq!(two_step, transform_factor(&g, &c, i + j).unwrap());
            }
        }
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(0u64..13, 0..=max_deg + 1).prop_map(|cs| {
            let spec = FieldSpec::prime(13).unwrap();
            let coeffs = cs.iter().map(|&c| spec.from_u64(c)).collect();
            Poly::from_coeffs(&spec, coeffs)
        })
    }

    proptest! {
        #[test]
        fn divmod_reconstructs(a in arb_poly(12), b in arb_poly(6)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            if let (Some(dr), Some(db)) = (r.degree(), b.degree()) {
                prop_assert!(dr < db);
            }
        }

        #[test]
        fn mul_commutes_and_distributes(a in arb_poly(8), b in arb_poly(8), c in arb_poly(8)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }
}
