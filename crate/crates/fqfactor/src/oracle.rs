//! Independent reference factorizer (squarefree split, distinct-degree,
//! Cantor-Zassenhaus equal-degree) plus an exhaustive trial-division
//! path for tiny instances and a verification report used to
//! cross-check the constructive modules.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::{is_irreducible, powmod, Poly};
use crate::DEFAULT_SEED;

const MAX_DEGREE: usize = 4096;
const MAX_Q: u64 = 1_000_000;

/// Outcome of [`verify`]: exact product reconstruction, per-factor
/// irreducibility, and (within budget) multiset agreement with
/// [`reference_factor`].
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub target: Poly,
    pub claimed_factors: Vec<Poly>,
    pub product_ok: bool,
    pub all_irreducible: bool,
    pub multiset_match_vs_oracle: Option<bool>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.product_ok
            && self.all_irreducible
            && self.multiset_match_vs_oracle.unwrap_or(true)
    }
}

/// Coefficient-wise `p`-th root: the inverse of the Frobenius on
/// `GF(q)[x^p]`, i.e. `g` with `g(x)^p = f(x)`.
fn pth_root(f: &Poly) -> Poly {
    let spec = f.spec();
    let p = spec.characteristic() as usize;
    let root_exp = spec.q() / spec.characteristic(); // c^(q/p) is the p-th root of c
    let deg = f.degree().unwrap_or(0);
    let coeffs = (0..=deg / p)
        .map(|i| f.coeff(i * p).pow(root_exp))
        .collect();
    Poly::from_coeffs(spec, coeffs)
}

/// Squarefree decomposition of a monic `f` as `(part, multiplicity)`
/// pairs with pairwise-coprime squarefree parts.
fn squarefree_parts(f: &Poly, mult: u32, out: &mut Vec<(Poly, u32)>) -> Result<()> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(());
    }
    let p = f.spec().characteristic() as u32;
    let deriv = f.derivative();
    if deriv.is_zero() {
        return squarefree_parts(&pth_root(f), mult * p, out);
    }
    let mut c = f.gcd(&deriv)?;
    let mut w = f.divmod(&c)?.0;
    let mut i = 1u32;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c)?;
        let z = w.divmod(&y)?.0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, mult * i));
        }
        w = y;
        c = c.divmod(&w)?.0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        squarefree_parts(&pth_root(&c), mult * p, out)?;
    }
    Ok(())
}

/// Distinct-degree split of a squarefree monic `g` into
/// `(product of irreducibles of degree d, d)` pairs.
fn distinct_degree(g: &Poly) -> Result<Vec<(Poly, usize)>> {
    let spec = g.spec();
    let q = spec.q();
    let mut rest = g.clone();
    let mut h = Poly::x(spec).rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 0usize;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(&h, q as u128, &rest)?;
        let diff = h.sub(&Poly::x(spec));
        let gd = rest.gcd(&diff)?;
        if gd.degree().unwrap_or(0) > 0 {
            out.push((gd.clone(), d));
            rest = rest.divmod(&gd)?.0;
            h = h.rem(&rest)?;
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    Ok(out)
}

fn random_poly_below(deg: usize, spec: &crate::ffield::FieldSpec, rng: &mut ChaCha8Rng) -> Poly {
    let coeffs = (0..deg).map(|_| spec.random_element(rng)).collect();
    Poly::from_coeffs(spec, coeffs)
}

/// Cantor-Zassenhaus equal-degree split of a monic product `g` of
/// distinct irreducibles of degree `d`.
fn equal_degree(g: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<()> {
    let deg = g.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(());
    }
    if deg == d {
        out.push(g.clone());
        return Ok(());
    }
    let spec = g.spec();
    let q = spec.q();
    let split = loop {
        let t = random_poly_below(deg, spec, rng);
        if t.degree().is_none() {
            continue;
        }
        let candidate = if q % 2 == 0 {
            // char 2: the F_2-trace of t in each residue field is 0 or 1
            let bits = d as u32 * spec.ext_degree();
            let mut cur = t.rem(g)?;
            let mut trace = cur.clone();
            for _ in 1..bits {
                cur = powmod(&cur, 2, g)?;
                trace = trace.add(&cur);
            }
            g.gcd(&trace)?
        } else {
            // norm down to degree-d residues, then the Euler power:
            // t^{(q^d-1)/2} = (t^{1+q+..+q^{d-1}})^{(q-1)/2}
            let mut s = t.rem(g)?;
            for _ in 1..d {
                s = powmod(&s, q as u128, g)?.mul(&t).rem(g)?;
            }
            let euler = powmod(&s, ((q - 1) / 2) as u128, g)?;
            g.gcd(&euler.sub(&Poly::one(spec)))?
        };
        let cd = candidate.degree().unwrap_or(0);
        if cd > 0 && cd < deg {
            break candidate;
        }
    };
    equal_degree(&split, d, rng, out)?;
    equal_degree(&g.divmod(&split)?.0, d, rng, out)
}

fn check_budget(f: &Poly) -> Result<usize> {
    let deg = f.degree().ok_or(Error::DivisionByZero)?;
    let q = f.spec().q();
    if deg > MAX_DEGREE || q > MAX_Q {
        return Err(Error::Budget(format!(
            "reference factorization supports deg <= {MAX_DEGREE} and q <= {MAX_Q}, got deg = {deg}, q = {q}"
        )));
    }
    Ok(deg)
}

/// Complete factorization of nonzero `f` into monic irreducibles with
/// multiplicity (canonically sorted); together with the leading
/// coefficient of `f` they multiply back to `f`.
pub fn reference_factor(f: &Poly) -> Result<Vec<Poly>> {
    let deg = check_budget(f)?;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let monic = f.make_monic()?;
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut squarefree = Vec::new();
    squarefree_parts(&monic, 1, &mut squarefree)?;
    let mut out = Vec::new();
    for (part, mult) in squarefree {
        for (block, d) in distinct_degree(&part)? {
            let mut irreducibles = Vec::new();
            equal_degree(&block, d, &mut rng, &mut irreducibles)?;
            for irr in irreducibles {
                for _ in 0..mult {
                    out.push(irr.clone());
                }
            }
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// Second-level oracle: exhaustive trial division by every monic
/// polynomial in degree order. Only for `q^deg <= 2^16`.
pub fn exhaustive_factor(f: &Poly) -> Result<Vec<Poly>> {
    let spec = f.spec();
    let deg = f.degree().ok_or(Error::DivisionByZero)?;
    let q = spec.q() as u128;
    if q.checked_pow(deg as u32).map_or(true, |v| v > 1 << 16) {
        return Err(Error::Budget(format!(
            "exhaustive factorization requires q^deg <= 2^16, got q = {q}, deg = {deg}"
        )));
    }
    let mut rest = f.make_monic()?;
    let mut out = Vec::new();
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        let count = (spec.q() as u128).pow(d as u32);
        for index in 0..count {
            // monic candidate with coefficient vector = digits of index
            let mut idx = index;
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push(spec.element_from_index((idx % q) as u64));
                idx /= q;
            }
            coeffs.push(spec.one());
            let candidate = Poly::from_coeffs(spec, coeffs);
            loop {
                let (quot, rem) = rest.divmod(&candidate)?;
                if !rem.is_zero() {
                    break;
                }
                out.push(candidate.clone());
                rest = quot;
            }
            if rest.degree().unwrap_or(0) < 2 * d {
                break;
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// Checks a claimed factorization of `target`: product equality,
/// per-factor irreducibility, and multiset agreement with the oracle
/// when the budget allows.
pub fn verify(target: &Poly, factors: &[Poly]) -> VerificationReport {
    let spec = target.spec();
    let mut notes = Vec::new();
    let product = factors.iter().fold(Poly::one(spec), |acc, g| acc.mul(g));
    let lc = target.leading().cloned().unwrap_or_else(|| spec.one());
    let product_ok = product.mul_elt(&lc) == *target;
    if !product_ok {
        notes.push("factor product does not reconstruct the target".into());
    }
    let all_irreducible = factors.iter().all(is_irreducible);
    if !all_irreducible {
        notes.push("a claimed factor is reducible or constant".into());
    }
    let multiset_match_vs_oracle = match reference_factor(target) {
        Err(Error::Budget(msg)) => {
            notes.push(format!("oracle comparison skipped: {msg}"));
            None
        }
        Err(err) => {
            notes.push(format!("oracle comparison failed: {err}"));
            Some(false)
        }
        Ok(expected) => {
            let mut claimed = factors.to_vec();
            claimed.sort_by(|a, b| a.canonical_cmp(b));
            let matched = claimed == expected;
            if !matched {
                notes.push("claimed multiset differs from the oracle factorization".into());
            }
            Some(matched)
        }
    };
    VerificationReport {
        target: target.clone(),
        claimed_factors: factors.to_vec(),
        product_ok,
        all_irreducible,
        multiset_match_vs_oracle,
        notes,
    }
}
