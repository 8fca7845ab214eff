//! Constructive factorization of `f(x^n)` for irreducible `f`:
//! reducibility predicates, the single-factor computation via the
//! quotient-ring minimal polynomial, the root-of-unity orbit expansion,
//! the radical reduction, and the quadratic-extension route for
//! `q = 3 (mod 4)`.

use crate::error::{Error, Result};
use crate::ffield::{
    element_order, mod_inverse, nth_root, primitive_kth_root, quadratic_extension, FieldElement,
};
use crate::ffield::ints::{gcd_u64, integer_factorize, valuation};
use crate::linalg::min_poly_in_quotient;
use crate::polyring::{is_irreducible, modpow_x, transform_factor, IrreducibleInfo, Poly};

/// The parameters of one prime-power splitting stage.
///
/// With `e` the exponent of `f`, `k = nu_p(e)` and `r = e / p^k`, there
/// is a unique constant `c` with `x^r = c (mod f)`; `b` is a `p^t`-th
/// root of `c` (a primitive `p^t`-th root of unity when `c = 1`), `s`
/// solves `s*r = 1 (mod p^t)` with `0 < s < p^t`, `l = (s*r - 1)/p^t`,
/// and `a = b^{p^k}` has order `p^t`.
#[derive(Clone, Debug)]
pub struct SplitPlan {
    pub p: u64,
    pub t: u32,
    pub k: u32,
    pub r: u64,
    pub s: u64,
    pub l: u64,
    pub c: FieldElement,
    pub b: FieldElement,
    pub a: FieldElement,
}

/// The outcome of splitting `f(x^n)`: monic irreducible factors in
/// canonical order, the plan chain that produced them, and whether the
/// verification pass ran.
#[derive(Clone, Debug)]
pub struct SplitResult {
    pub input: Poly,
    pub n: u64,
    pub factors: Vec<Poly>,
    pub plans: Vec<SplitPlan>,
    pub verified: bool,
}

/// Whether `f(x^n)` stays irreducible: `rad(n) | e`,
/// `gcd(n, (q^m-1)/e) = 1`, and `4 | n` implies `4 | q^m-1`.
pub fn is_fxn_irreducible(info: &IrreducibleInfo, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n == 1 {
        return Ok(true);
    }
    let e = info.e();
    let cofactor = info.qm_minus_1() / e;
    for p in integer_factorize(n)?.primes() {
        if e % p != 0 {
            return Ok(false);
        }
    }
    if gcd_u64(n, cofactor) != 1 {
        return Ok(false);
    }
    if n % 4 == 0 && info.qm_minus_1() % 4 != 0 {
        return Ok(false);
    }
    Ok(true)
}

/// The reducible condition: `nu_p(q-1) >= nu_p(n) + nu_p(e)` for every
/// prime `p | n`.
pub fn check_reducible_condition(info: &IrreducibleInfo, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n == 1 {
        return Ok(true);
    }
    let qm1 = info.spec().q() - 1;
    for (p, np) in integer_factorize(n)?.pairs() {
        let vq = valuation(*p, qm1)?;
        let ve = info.e_factorization().valuation_of(*p);
        if vq < np + ve {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The weaker splitting inequality
/// `nu_p(n) + nu_p(e) <= nu_p(q-1) + nu_p(ord_{r_p} q)` for every prime
/// `p | n`, where `r_p = e / p^{nu_p(e)}`.
pub fn check_fatores_condition(info: &IrreducibleInfo, n: u64) -> Result<bool> {
    let q = info.spec().q();
    if n <= 1 || (q - 1) % n != 0 {
        return Err(Error::Precondition(format!(
            "requires n > 1 and n | q - 1, got n = {n}, q = {q}"
        )));
    }
    let qm1 = q - 1;
    for (p, np) in integer_factorize(n)?.pairs() {
        let ve = info.e_factorization().valuation_of(*p);
        let rp = info.e() / p.pow(ve);
        let ord = crate::ffield::ints::ord_mod(q, rp)?;
        let lhs = np + ve;
        let rhs = valuation(*p, qm1)? + if ord % p == 0 { valuation(*p, ord)? } else { 0 };
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn checked_prime_power(p: u64, t: u32) -> Result<u64> {
    p.checked_pow(t)
        .ok_or_else(|| Error::ExponentOverflow((p as u128).saturating_pow(t)))
}

/// One stage of Theorem-style splitting: computes the plan and the
/// representative factor `g` of `f(x^{p^t})`.
///
/// The representative's exponent is exactly `p^t e` (its root
/// `beta = b^s x^{-l}` is a primitive `p^t e`-th root of unity), which
/// is what allows iterated stages to track exponents without
/// recomputation. Other orbit members may have smaller exponents.
fn prime_power_core(
    info: &IrreducibleInfo,
    p: u64,
    t: u32,
    seed: u64,
) -> Result<(SplitPlan, Poly)> {
    if t == 0 {
        return Err(Error::Precondition("t must be positive".into()));
    }
    let pt = checked_prime_power(p, t)?;
    if !check_reducible_condition(info, pt)? {
        return Err(Error::Precondition(format!(
            "the reducible condition fails for n = {p}^{t}"
        )));
    }
    let spec = info.spec();
    let e = info.e();
    let k = info.e_factorization().valuation_of(p);
    let pk = checked_prime_power(p, k)?;
    let r = e / pk;

    // x^r mod f must be the constant c; anything else means the exponent
    // bookkeeping is corrupt.
    let c_poly = modpow_x(r as u128, info.poly())?;
    if !c_poly.is_constant() {
        return Err(Error::Internal(format!(
            "x^{r} mod f is not constant; inconsistent exponent e = {e}"
        )));
    }
    let c = c_poly.coeff(0);

    let b = if c.is_one() {
        primitive_kth_root(spec, pt, seed)?
    } else {
        let b = nth_root(&c, pt, seed).ok_or_else(|| {
            Error::Internal(format!("no {pt}-th root of c despite the reducible condition"))
        })?;
        let expected = checked_prime_power(p, t + k)?;
        if element_order(&b)? != expected {
            return Err(Error::Internal(format!(
                "root of c has order != p^(t+k) = {expected}"
            )));
        }
        b
    };

    let s = mod_inverse((r % pt) as i128, pt as i128)
        .ok_or_else(|| Error::Internal(format!("r = {r} not invertible mod {pt}")))?;
    let l = ((s as u128 * r as u128 - 1) / pt as u128) as u64;

    // beta = b^s x^{-l} satisfies beta^{p^t} = x in the quotient ring;
    // its minimal polynomial g is one irreducible factor of f(x^{p^t}).
    let l_inv = if l == 0 { 0 } else { e - (l % e) };
    let scalar = b.pow(s);
    let g = min_poly_in_quotient(info, &scalar, l_inv)?;
    if g.degree() != Some(info.m()) {
        return Err(Error::Internal(format!(
            "representative factor has degree {:?}, expected {}",
            g.degree(),
            info.m()
        )));
    }

    let a = b.pow(pk);
    debug_assert_eq!(element_order(&a)?, pt);

    let plan = SplitPlan {
        p,
        t,
        k,
        r,
        s,
        l,
        c,
        b,
        a,
    };
    Ok((plan, g))
}

/// The orbit `{c^{-mj} g(c^j x) : 0 <= j < n}` for a primitive `n`-th
/// root of unity `c`.
fn orbit(g: &Poly, c: &FieldElement, n: u64) -> Result<Vec<Poly>> {
    let mut factors = Vec::with_capacity(n as usize);
    for j in 0..n {
        factors.push(transform_factor(g, c, j as i64)?);
    }
    Ok(factors)
}

fn sort_canonical(factors: &mut [Poly]) {
    factors.sort_by(|a, b| a.canonical_cmp(b));
}

/// Product reconstruction + distinctness (+ optional per-factor Rabin
/// check) for a sorted factor list of `f(x^n)`.
fn verify_factors(f: &Poly, n: u64, factors: &[Poly], check_irreducible: bool) -> Result<()> {
    for pair in factors.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::Internal("repeated factor in orbit".into()));
        }
    }
    let mut product = Poly::one(f.spec());
    for g in factors {
        if !g.is_monic() {
            return Err(Error::Internal("non-monic factor".into()));
        }
        if check_irreducible && !is_irreducible(g) {
            return Err(Error::Internal("reducible factor emitted".into()));
        }
        product = product.mul(g);
    }
    let expected = f.compose_xn(n as usize);
    if product != expected {
        return Err(Error::Internal(
            "factor product does not reconstruct f(x^n)".into(),
        ));
    }
    Ok(())
}

/// Splits `f(x^{p^t})` into `p^t` monic irreducible factors of degree
/// `m` under the reducible condition.
pub fn split_prime_power(
    info: &IrreducibleInfo,
    p: u64,
    t: u32,
    seed: u64,
) -> Result<SplitResult> {
    let pt = checked_prime_power(p, t)?;
    let (plan, g) = prime_power_core(info, p, t, seed)?;
    let mut factors = orbit(&g, &plan.a, pt)?;
    sort_canonical(&mut factors);
    verify_factors(info.poly(), pt, &factors, true)?;
    Ok(SplitResult {
        input: info.poly().clone(),
        n: pt,
        factors,
        plans: vec![plan],
        verified: true,
    })
}

/// Splits `f(x^n)` into `n` factors under the full reducible condition
/// by iterating over the prime powers of `n` in increasing prime order.
/// Exponents are tracked multiplicatively across stages (each factor of
/// `f(x^{p^t})` has exponent `p^t e`), avoiding recomputation.
pub fn split_general(info: &IrreducibleInfo, n: u64, seed: u64) -> Result<SplitResult> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n == 1 {
        return Ok(SplitResult {
            input: info.poly().clone(),
            n: 1,
            factors: vec![info.poly().clone()],
            plans: Vec::new(),
            verified: true,
        });
    }
    if !check_reducible_condition(info, n)? {
        return Err(Error::Precondition(format!(
            "the reducible condition fails for n = {n}"
        )));
    }
    // Chain the prime-power stages through the representative factor
    // only: it is the one whose exponent is guaranteed to be the
    // previous exponent times the processed prime power.
    let mut current = info.clone();
    let mut plans = Vec::new();
    for &(p, t) in integer_factorize(n)?.pairs() {
        let pt = checked_prime_power(p, t)?;
        let e_next = current
            .e()
            .checked_mul(pt)
            .ok_or_else(|| Error::ExponentOverflow(current.e() as u128 * pt as u128))?;
        let fact_next = current.e_factorization().merge_prime_power(p, t);
        let (plan, g) = prime_power_core(&current, p, t, seed)?;
        plans.push(plan);
        current = IrreducibleInfo::from_parts_trusted(g, e_next, fact_next);
    }
    // The reducible condition gives n | q - 1, so a primitive n-th root
    // of unity generates the full orbit of n distinct factors.
    let c = primitive_kth_root(info.spec(), n, seed)?;
    let mut factors = orbit(current.poly(), &c, n)?;
    sort_canonical(&mut factors);
    if factors.len() != n as usize {
        return Err(Error::Internal(format!(
            "expected {n} factors, got {}",
            factors.len()
        )));
    }
    verify_factors(info.poly(), n, &factors, true)?;
    Ok(SplitResult {
        input: info.poly().clone(),
        n,
        factors,
        plans,
        verified: true,
    })
}

/// The greatest divisor `rho` of `n` for which the reducible condition
/// holds: `rho = prod_{p | n} p^{min(nu_p(n), nu_p(q-1) - nu_p(e))}`.
pub fn rho(info: &IrreducibleInfo, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    let q = info.spec().q();
    let factorization = integer_factorize(n)?;
    for p in factorization.primes() {
        if (q - 1) % p != 0 {
            return Err(Error::Precondition(format!(
                "rad(n) must divide q - 1; prime {p} does not divide {}",
                q - 1
            )));
        }
    }
    if gcd_u64(info.m() as u64, n) != 1 {
        return Err(Error::Precondition(format!(
            "requires gcd(m, n) = 1, got m = {}, n = {n}",
            info.m()
        )));
    }
    let mut out: u64 = 1;
    for (p, np) in factorization.pairs() {
        let cap = valuation(*p, q - 1)?
            .saturating_sub(info.e_factorization().valuation_of(*p));
        out *= p.pow((*np).min(cap));
    }
    Ok(out)
}

/// Factors `f(x^n)` when only the radical condition holds (`rad(n)`
/// divides `q - 1`, `gcd(m, n) = 1`, and no quadratic-extension
/// obstruction): first splits `f(x^rho)` under the full reducible
/// condition, then composes each factor `h` with `x^{n/rho}`.
///
/// Only the representative factor is guaranteed the exponent `e * rho`;
/// orbit members can have smaller exponents, and for those
/// `h(x^{n/rho})` may stay reducible. Each factor's true exponent is
/// therefore recomputed and deficient factors are split recursively, so
/// the output can have more than `n` factors.
pub fn split_radical(info: &IrreducibleInfo, n: u64, seed: u64) -> Result<SplitResult> {
    let rho_val = rho(info, n)?;
    if n % 2 == 0 {
        let q = info.spec().q();
        let v2n = valuation(2, n)?;
        let v2e = info.e_factorization().valuation_of(2);
        if v2n + v2e >= valuation(2, q - 1)? + 2 && q % 4 != 1 {
            return Err(Error::QuadExtObstruction(q));
        }
    }
    let inner = split_general(info, rho_val, seed)?;
    let outer = n / rho_val;
    let mut plans = inner.plans;
    let mut factors = Vec::with_capacity(inner.factors.len());
    if outer == 1 {
        factors = inner.factors;
    } else {
        for h in &inner.factors {
            let h_info = IrreducibleInfo::new(h)?;
            if is_fxn_irreducible(&h_info, outer)? {
                factors.push(h.compose_xn(outer as usize));
            } else if check_reducible_condition(&h_info, outer)? {
                let sub = split_general(&h_info, outer, seed)?;
                plans.extend(sub.plans);
                factors.extend(sub.factors);
            } else {
                // a deficient exponent can only relax the preconditions,
                // and rho strictly shrinks n here, so this terminates
                if rho(&h_info, outer)? == 1 {
                    return Err(Error::Internal(format!(
                        "no progress splitting a factor of exponent {} against n = {outer}",
                        h_info.e()
                    )));
                }
                let sub = split_radical(&h_info, outer, seed)?;
                plans.extend(sub.plans);
                factors.extend(sub.factors);
            }
        }
    }
    sort_canonical(&mut factors);
    // irreducibility of each composed factor is certified by the
    // irreducibility predicate on its base factor's true exponent; the
    // recursive branches verify their own output
    verify_factors(info.poly(), n, &factors, false)?;
    Ok(SplitResult {
        input: info.poly().clone(),
        n,
        factors,
        plans,
        verified: true,
    })
}

/// Factors `f(x^{2^t})` over a prime field with `q = 3 (mod 4)` and `m`
/// odd by lifting to `GF(q^2) = GF(q)(sqrt(-1))`, splitting there, and
/// multiplying conjugate factor pairs back into the base field.
pub fn split_q3mod4(info: &IrreducibleInfo, t: u32, seed: u64) -> Result<SplitResult> {
    let spec = info.spec();
    let q = spec.q();
    if !spec.is_prime_field() {
        return Err(Error::OutOfScope(
            "the quadratic-extension route is implemented over prime fields".into(),
        ));
    }
    if q % 4 != 3 {
        return Err(Error::Precondition(format!("requires q = 3 (mod 4), got q = {q}")));
    }
    if info.m() % 2 == 0 {
        return Err(Error::Precondition("requires odd degree m".into()));
    }
    let v2e = info.e_factorization().valuation_of(2);
    if t + v2e < valuation(2, q - 1)? + 2 {
        return Err(Error::Precondition(format!(
            "requires t + nu_2(e) >= nu_2(q-1) + 2; base-field splitting already applies for t = {t}"
        )));
    }
    let n = 2u64
        .checked_pow(t)
        .ok_or_else(|| Error::ExponentOverflow(1u128 << t.min(127)))?;

    let ext = quadratic_extension(spec)?;
    let lifted = Poly::from_coeffs(
        &ext,
        info.poly().coeffs().iter().map(|c| ext.embed(c)).collect(),
    );
    let lifted_info = IrreducibleInfo::new(&lifted)?;
    let inner = split_radical(&lifted_info, n, seed)?;

    let conj_poly = |h: &Poly| {
        Poly::from_coeffs(&ext, h.coeffs().iter().map(|c| c.conjugate()).collect())
    };
    let descend = |h: &Poly| -> Result<Poly> {
        let coeffs = h
            .coeffs()
            .iter()
            .map(|c| {
                c.try_descend(spec)
                    .ok_or_else(|| Error::Internal("conjugate-invariant factor fails to descend".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(spec, coeffs))
    };

    let mut pending = inner.factors.clone();
    let mut factors = Vec::new();
    while let Some(h) = pending.pop() {
        let hbar = conj_poly(&h);
        if hbar == h {
            factors.push(descend(&h)?);
        } else {
            let i = pending
                .iter()
                .position(|g| *g == hbar)
                .ok_or_else(|| Error::Internal("unpaired conjugate factor".into()))?;
            pending.swap_remove(i);
            factors.push(descend(&h.mul(&hbar))?);
        }
    }
    sort_canonical(&mut factors);
    verify_factors(info.poly(), n, &factors, true)?;
    Ok(SplitResult {
        input: info.poly().clone(),
        n,
        factors,
        plans: inner.plans,
        verified: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;
    use crate::DEFAULT_SEED;

    fn prime_info(q: u64, coeffs: &[i64]) -> IrreducibleInfo {
        let spec = FieldSpec::prime(q).unwrap();
        IrreducibleInfo::new(&Poly::from_int_coeffs(&spec, coeffs)).unwrap()
    }

    #[test]
    fn irreducibility_predicate() {
        let info = prime_info(59, &[1, -11, 1]);
        assert_eq!(info.e(), 12);
        assert!(is_fxn_irreducible(&info, 1).unwrap());
        // 29 does not divide e = 12, so f(x^29) factors
        assert!(!is_fxn_irreducible(&info, 29).unwrap());
        // 2 | e but gcd(2, 3480/12) != 1
        assert!(!is_fxn_irreducible(&info, 2).unwrap());
    }

    #[test]
    fn reducible_condition_examples() {
        let info59 = prime_info(59, &[1, -11, 1]);
        assert!(check_reducible_condition(&info59, 1).unwrap());
        assert!(check_reducible_condition(&info59, 29).unwrap());
        assert!(!check_reducible_condition(&info59, 29 * 29).unwrap());
        assert!(!check_reducible_condition(&info59, 4).unwrap());

        let info257 = prime_info(257, &[1, 1, 1, 1, 1]);
        assert_eq!(info257.e(), 5);
        assert!(check_reducible_condition(&info257, 256).unwrap());
        assert!(!check_reducible_condition(&info257, 512).unwrap());
    }

    #[test]
    fn fatores_condition_examples() {
        let info59 = prime_info(59, &[1, -11, 1]);
        assert!(check_fatores_condition(&info59, 29).unwrap());

        // q = 13, f = x - 3, e = 3, n = 4:
        // nu_2(4) + nu_2(3) = 2 <= nu_2(12) + nu_2(ord_3 13) = 2 + 0
        let info13 = prime_info(13, &[-3, 1]);
        assert_eq!(info13.e(), 3);
        assert!(check_fatores_condition(&info13, 4).unwrap());
        // fails at p = 3: nu_3(12) + nu_3(3) = 2 > nu_3(12) + nu_3(ord_1 13) = 1
        assert!(!check_fatores_condition(&info13, 12).unwrap());
        // precondition: n | q - 1
        assert!(check_fatores_condition(&info13, 8).is_err());
    }

    #[test]
    fn example1_factor_set() {
        let info = prime_info(59, &[1, -11, 1]);
        let res = split_prime_power(&info, 29, 1, DEFAULT_SEED).unwrap();
        assert!(res.verified);
        assert_eq!(res.factors.len(), 29);
        let spec = FieldSpec::prime(59).unwrap();
        let mut expected: Vec<Poly> = (0..29)
            .map(|j| {
                let c1 = spec.from_u64(21).mul(&spec.from_u64(12).pow(j)).neg();
                let c0 = spec.from_u64(29).mul(&spec.from_u64(26).pow(j));
                Poly::from_coeffs(&spec, vec![c0, c1, spec.one()])
            })
            .collect();
        expected.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(res.factors, expected);

        let plan = &res.plans[0];
        assert_eq!((plan.p, plan.t, plan.k, plan.r, plan.s, plan.l), (29, 1, 0, 12, 17, 7));
        assert!(plan.c.is_one());
        assert_eq!(element_order(&plan.a).unwrap(), 29);
        assert_eq!(plan.a, plan.b);
    }

    #[test]
    fn fourth_roots_of_three_over_f13() {
        // x^4 - 3 over GF(13) has root set {2, 3, 10, 11}
        let info = prime_info(13, &[-3, 1]);
        let res = split_prime_power(&info, 2, 2, DEFAULT_SEED).unwrap();
        let spec = FieldSpec::prime(13).unwrap();
        let roots: Vec<u64> = res
            .factors
            .iter()
            .map(|g| g.coeff(0).neg().to_u64().unwrap())
            .collect();
        let mut roots = roots;
        roots.sort_unstable();
        assert_eq!(roots, vec![2, 3, 10, 11]);
        for r in [2u64, 3, 10, 11] {
            assert_eq!(spec.from_u64(r).pow(4), spec.from_u64(3));
        }
    }

    #[test]
    fn split_general_twelfth_roots_of_unity() {
        // x^12 - 1 over GF(13) = prod (x - z) over all z in GF(13)*
        let info = prime_info(13, &[-1, 1]);
        let res = split_general(&info, 12, DEFAULT_SEED).unwrap();
        assert_eq!(res.factors.len(), 12);
        let spec = FieldSpec::prime(13).unwrap();
        let expected: Vec<Poly> = (1..13)
            .map(|z| Poly::from_coeffs(&spec, vec![spec.from_u64(z).neg(), spec.one()]))
            .collect();
        let mut expected = expected;
        expected.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(res.factors, expected);
        assert_eq!(res.plans.len(), 2); // stages for 4 and 3
    }

    #[test]
    fn split_general_n1_is_identity() {
        let info = prime_info(59, &[1, -11, 1]);
        let res = split_general(&info, 1, DEFAULT_SEED).unwrap();
        assert_eq!(res.factors, vec![info.poly().clone()]);
    }

    #[test]
    fn rho_examples() {
        let info13 = prime_info(13, &[-3, 1]);
        // nu_2(q-1) - nu_2(e) = 2 - 0, capped by nu_2(8) = 3
        assert_eq!(rho(&info13, 8).unwrap(), 4);
        let info59 = prime_info(59, &[1, -11, 1]);
        assert_eq!(rho(&info59, 29).unwrap(), 29);
        assert_eq!(rho(&info59, 29 * 29).unwrap(), 29);
        // rad(n) must divide q - 1
        assert!(rho(&info59, 7).is_err());
        // gcd(m, n) must be 1
        assert!(rho(&info59, 2).is_err());
    }

    #[test]
    fn radical_split_of_x8_minus_3() {
        // rho = 4, so the inner split gives x^2 - r for r in
        // {2, 3, 10, 11}; 3 and 10 are squares mod 13, so those two
        // orbit members have deficient exponents and split further into
        // linear factors.
        let info = prime_info(13, &[-3, 1]);
        let res = split_radical(&info, 8, DEFAULT_SEED).unwrap();
        let spec = FieldSpec::prime(13).unwrap();
        let mut expected: Vec<Poly> = [2i64, 11]
            .iter()
            .map(|&r| Poly::from_int_coeffs(&spec, &[-r, 0, 1]))
            .chain(
                [4i64, 6, 7, 9]
                    .iter()
                    .map(|&r| Poly::from_int_coeffs(&spec, &[-r, 1])),
            )
            .collect();
        expected.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(res.factors, expected);
        for g in &res.factors {
            assert!(is_irreducible(g));
        }
    }

    #[test]
    fn radical_split_equals_general_when_condition_holds() {
        let info = prime_info(13, &[-1, 1]);
        let a = split_radical(&info, 12, DEFAULT_SEED).unwrap();
        let b = split_general(&info, 12, DEFAULT_SEED).unwrap();
        assert_eq!(a.factors, b.factors);
    }

    #[test]
    fn quad_ext_obstruction_is_distinct() {
        // q = 7, f = x + 1, e = 2, n = 8: nu_2(8) + 1 >= nu_2(6) + 2 and
        // 7 = 3 (mod 4)
        let info = prime_info(7, &[1, 1]);
        assert!(matches!(
            split_radical(&info, 8, DEFAULT_SEED),
            Err(Error::QuadExtObstruction(7))
        ));
    }

    #[test]
    fn q3mod4_route_for_x8_plus_1() {
        // f = x + 1 over GF(7), t = 3: x^8 + 1 splits into 4 monic
        // irreducible quadratics
        let info = prime_info(7, &[1, 1]);
        let res = split_q3mod4(&info, 3, DEFAULT_SEED).unwrap();
        assert_eq!(res.factors.len(), 4);
        for g in &res.factors {
            assert_eq!(g.degree(), Some(2));
            assert!(is_irreducible(g));
        }
        let spec = FieldSpec::prime(7).unwrap();
        let product = res
            .factors
            .iter()
            .fold(Poly::one(&spec), |acc, g| acc.mul(g));
        let mut x8p1 = vec![0i64; 9];
        x8p1[0] = 1;
        x8p1[8] = 1;
        assert_eq!(product, Poly::from_int_coeffs(&spec, &x8p1));
    }

    #[test]
    fn q3mod4_rejects_cases_the_base_field_handles() {
        let info = prime_info(7, &[1, 1]);
        assert!(split_q3mod4(&info, 1, DEFAULT_SEED).is_err());
    }

    #[test]
    fn seed_independence_of_factor_sets() {
        let info59 = prime_info(59, &[1, -11, 1]);
        let info13 = prime_info(13, &[-3, 1]);
        let base59 = split_prime_power(&info59, 29, 1, DEFAULT_SEED).unwrap();
        let base13 = split_prime_power(&info13, 2, 2, DEFAULT_SEED).unwrap();
        for seed in 1..10u64 {
            assert_eq!(
                split_prime_power(&info59, 29, 1, seed).unwrap().factors,
                base59.factors
            );
            assert_eq!(
                split_prime_power(&info13, 2, 2, seed).unwrap().factors,
                base13.factors
            );
        }
    }

    #[test]
    fn exponent_law_for_orbit_factors() {
        // every factor exponent divides p^t * e, and the representative
        // attains it exactly (root orders 12, 3, 6, 12 here)
        let info = prime_info(13, &[-3, 1]);
        let res = split_prime_power(&info, 2, 2, DEFAULT_SEED).unwrap();
        let exps: Vec<u64> = res
            .factors
            .iter()
            .map(|g| IrreducibleInfo::new(g).unwrap().e())
            .collect();
        assert!(exps.iter().all(|e| 12 % e == 0));
        assert!(exps.contains(&12));
        let mut sorted = exps;
        sorted.sort_unstable();
        assert_eq!(sorted, vec![3, 6, 12, 12]);
    }
}
