//! Closed-form factorization of `x^{2^n p^t} - 1` over `GF(q)` when `q`
//! generates the units modulo `p^2`, bypassing the matrix machinery:
//! every cyclotomic block `Phi_{2^i p^j}` factors explicitly through a
//! single root of unity `b_i` of order `2^i`.

use crate::error::{Error, Result};
use crate::ffield::ints::{is_prime, ord_mod, valuation};
use crate::ffield::{primitive_kth_root, FieldSpec};
use crate::polyring::{is_irreducible, Poly};

/// The block decomposition of `x^{2^n p^t} - 1`: for each pair `(i, j)`
/// the irreducible factors of `Phi_{2^i p^j}`, plus the flat canonical
/// factor list.
#[derive(Clone, Debug)]
pub struct CyclotomicFactorization {
    pub spec: FieldSpec,
    pub p: u64,
    pub t: u32,
    pub n: u32,
    /// `((i, j), factors of Phi_{2^i p^j})`
    pub blocks: Vec<((u32, u32), Vec<Poly>)>,
    pub factors: Vec<Poly>,
}

/// Whether `q` generates the unit group modulo `p^2`, i.e.
/// `ord_{p^2}(q) = p(p-1)`.
pub fn check_primitive_mod_p2(q: u64, p: u64) -> Result<bool> {
    if !is_prime(p) || p == 2 {
        return Err(Error::Precondition(format!("p must be an odd prime, got {p}")));
    }
    if q % p == 0 {
        return Err(Error::Precondition(format!("requires gcd(q, p) = 1, got q = {q}, p = {p}")));
    }
    let p2 = p
        .checked_mul(p)
        .ok_or_else(|| Error::ExponentOverflow(p as u128 * p as u128))?;
    Ok(ord_mod(q, p2)? == p * (p - 1))
}

fn check_primitive_mod_p(q: u64, p: u64) -> Result<bool> {
    Ok(ord_mod(q, p)? == p - 1)
}

/// Requires `q` primitive mod `p` when only first powers of `p` appear
/// (`depth <= 1`) and primitive mod `p^2` beyond.
fn require_primitivity(q: u64, p: u64, depth: u32) -> Result<()> {
    let ok = if depth >= 2 {
        check_primitive_mod_p2(q, p)?
    } else {
        check_primitive_mod_p(q, p)?
    };
    if !ok {
        let modulus = if depth >= 2 { "p^2" } else { "p" };
        return Err(Error::Precondition(format!(
            "q = {q} is not a primitive root modulo {modulus} for p = {p}"
        )));
    }
    Ok(())
}

/// The irreducible factors of `Phi_{2^i p^j}` over the field.
///
/// For `i <= 1` the block is the single polynomial
/// `sum_m (+-1)^m x^{m p^{j-1}}`; for `i >= 2` it is the orbit of
/// `2^{i-1}` polynomials indexed by `l` whose coefficient at
/// `x^{m p^{j-1}}` is `b^{(1-2l)(p-1-m)p^{j-1}}`, where `b` has order
/// `2^i` (requires `i <= nu_2(q-1)`). `j = 0` blocks are the factors of
/// `Phi_{2^i}` from the same machinery (linear factors `x - b^{1-2l}`).
pub fn phi_block_factors(
    spec: &FieldSpec,
    p: u64,
    j: u32,
    i: u32,
    theta_seed: u64,
) -> Result<Vec<Poly>> {
    if !is_prime(p) || p == 2 {
        return Err(Error::Precondition(format!("p must be an odd prime, got {p}")));
    }
    let q = spec.q();
    if q % 2 == 0 || spec.characteristic() == p {
        return Err(Error::Precondition(format!(
            "requires gcd(q, 2p) = 1, got q = {q}, p = {p}"
        )));
    }
    if j >= 1 {
        require_primitivity(q, p, j)?;
    }
    if i >= 1 && valuation(2, q - 1)? < i {
        return Err(Error::Precondition(format!(
            "requires i <= nu_2(q-1) = {}, got i = {i}",
            valuation(2, q - 1)?
        )));
    }
    // nonzero coefficients sit at positions m p^{j-1}, m = 0..p-1
    let stride = if j == 0 {
        1usize
    } else {
        usize::try_from(p.pow(j - 1))
            .map_err(|_| Error::ExponentOverflow((p as u128).pow(j - 1)))?
    };
    match i {
        0 if j == 0 => Ok(vec![Poly::from_int_coeffs(spec, &[-1, 1])]),
        1 if j == 0 => Ok(vec![Poly::from_int_coeffs(spec, &[1, 1])]),
        0 | 1 => {
            // Phi_{p^j} = sum_m x^{m p^{j-1}}; Phi_{2 p^j}(x) = Phi_{p^j}(-x)
            let deg = stride * (p - 1) as usize;
            let mut coeffs = vec![spec.zero(); deg + 1];
            for m in 0..p {
                let value = if i == 1 && m % 2 == 1 {
                    spec.one().neg()
                } else {
                    spec.one()
                };
                coeffs[m as usize * stride] = value;
            }
            Ok(vec![Poly::from_coeffs(spec, coeffs)])
        }
        _ => {
            let order = 2u64
                .checked_pow(i)
                .ok_or_else(|| Error::ExponentOverflow(1u128 << i.min(127)))?;
            let half = order / 2;
            let b = primitive_kth_root(spec, order, theta_seed)?;
            let mut out = Vec::with_capacity(half as usize);
            for l in 0..half {
                let w = 1i128 - 2 * l as i128;
                if j == 0 {
                    // Phi_{2^i} = prod_l (x - b^{1-2l})
                    out.push(Poly::from_coeffs(
                        spec,
                        vec![b.pow_signed(w)?.neg(), spec.one()],
                    ));
                } else {
                    let deg = stride * (p - 1) as usize;
                    let mut coeffs = vec![spec.zero(); deg + 1];
                    for m in 0..p {
                        let exp = w * (p - 1 - m) as i128 * stride as i128;
                        coeffs[m as usize * stride] = b.pow_signed(exp)?;
                    }
                    out.push(Poly::from_coeffs(spec, coeffs));
                }
            }
            Ok(out)
        }
    }
}

/// Assembles all blocks `(i, j)` for `0 <= i <= n`, `0 <= j <= t` into
/// the complete factorization of `x^{2^n p^t} - 1`, verified by product
/// reconstruction and per-factor irreducibility.
pub fn factor_x2npt_minus_one(
    spec: &FieldSpec,
    p: u64,
    t: u32,
    n: u32,
    theta_seed: u64,
) -> Result<CyclotomicFactorization> {
    if !is_prime(p) || p == 2 {
        return Err(Error::Precondition(format!("p must be an odd prime, got {p}")));
    }
    if t == 0 {
        return Err(Error::Precondition("requires t >= 1".into()));
    }
    let q = spec.q();
    if q % 2 == 0 || spec.characteristic() == p {
        return Err(Error::Precondition(format!(
            "requires gcd(q, 2p) = 1, got q = {q}, p = {p}"
        )));
    }
    require_primitivity(q, p, t)?;
    if n >= 1 && valuation(2, q - 1)? < n {
        return Err(Error::Precondition(format!(
            "requires n <= nu_2(q-1) = {}, got n = {n}",
            valuation(2, q - 1)?
        )));
    }

    let mut blocks = Vec::new();
    let mut factors = Vec::new();
    for i in 0..=n {
        for j in 0..=t {
            let block = phi_block_factors(spec, p, j, i, theta_seed)?;
            factors.extend(block.iter().cloned());
            blocks.push(((i, j), block));
        }
    }
    factors.sort_by(|a, b| a.canonical_cmp(b));

    // defining identity: the blocks multiply back to x^{2^n p^t} - 1
    let total_deg = 2u128
        .checked_pow(n)
        .and_then(|v| v.checked_mul((p as u128).pow(t)))
        .filter(|&v| v <= 1 << 24)
        .ok_or_else(|| Error::ExponentOverflow((p as u128).pow(t)))? as usize;
    let mut expected = vec![spec.zero(); total_deg + 1];
    expected[0] = spec.one().neg();
    expected[total_deg] = spec.one();
    let expected = Poly::from_coeffs(spec, expected);
    let mut product = Poly::one(spec);
    for f in &factors {
        if !is_irreducible(f) {
            return Err(Error::Internal("reducible cyclotomic block factor".into()));
        }
        product = product.mul(f);
    }
    if product != expected {
        return Err(Error::Internal(
            "cyclotomic blocks do not reconstruct x^(2^n p^t) - 1".into(),
        ));
    }
    Ok(CyclotomicFactorization {
        spec: spec.clone(),
        p,
        t,
        n,
        blocks,
        factors,
    })
}
