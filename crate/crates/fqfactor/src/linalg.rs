//! Companion matrices, exact matrix powers and characteristic
//! polynomials over a finite field, plus the quotient-ring Krylov
//! shortcut for minimal polynomials of `scalar * x^l` in `GF(q)[x]/(f)`.

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, FieldSpec};
use crate::polyring::{modpow_x, mulmod, IrreducibleInfo, Poly};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    dim: usize,
    rows: Vec<Vec<FieldElement>>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn from_rows(spec: &FieldSpec, rows: Vec<Vec<FieldElement>>) -> Matrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim));
        Matrix {
            spec: spec.clone(),
            dim,
            rows,
        }
    }

    pub fn identity(spec: &FieldSpec, dim: usize) -> Matrix {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { spec.one() } else { spec.zero() })
                    .collect()
            })
            .collect();
        Matrix::from_rows(spec, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = self.spec.zero();
                        for k in 0..n {
                            acc = acc.add(&self.rows[i][k].mul(&other.rows[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(&self.spec, rows)
    }

    pub fn scalar_mul(&self, c: &FieldElement) -> Matrix {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.mul(c)).collect())
            .collect();
        Matrix::from_rows(&self.spec, rows)
    }
}

/// Companion matrix with the superdiagonal of ones and last row
/// `-a_0 .. -a_{m-1}` for monic `f = x^m + a_{m-1} x^{m-1} + .. + a_0`.
pub fn companion_matrix(f: &Poly) -> Result<Matrix> {
    if !f.is_monic() {
        return Err(Error::Precondition("companion matrix needs a monic polynomial".into()));
    }
    let m = f.degree().unwrap();
    if m == 0 {
        return Err(Error::Precondition("companion matrix needs degree >= 1".into()));
    }
    let spec = f.spec();
    let mut rows = Vec::with_capacity(m);
    for i in 0..m.saturating_sub(1) {
        let mut row = vec![spec.zero(); m];
        row[i + 1] = spec.one();
        rows.push(row);
    }
    rows.push((0..m).map(|j| f.coeff(j).neg()).collect());
    Ok(Matrix::from_rows(spec, rows))
}

/// `A^l` by square-and-multiply.
pub fn matrix_pow(a: &Matrix, mut l: u64) -> Matrix {
    let mut acc = Matrix::identity(&a.spec, a.dim);
    let mut base = a.clone();
    while l > 0 {
        if l & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        l >>= 1;
    }
    acc
}

/// Incremental row-echelon span with dependency coordinates, used by the
/// Krylov paths.
struct LinearSpan {
    spec: FieldSpec,
    dim: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
    /// combos[i] expresses rows[i] in the inserted vectors.
    combos: Vec<Vec<FieldElement>>,
    inserted: usize,
}

impl LinearSpan {
    fn new(spec: &FieldSpec, dim: usize) -> LinearSpan {
        LinearSpan {
            spec: spec.clone(),
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    /// Inserts `v`. Returns `None` when independent (vector accepted), or
    /// `Some(coords)` expressing `v` in the previously inserted vectors.
    fn insert(&mut self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(v.len(), self.dim);
        let mut r: Vec<FieldElement> = v.to_vec();
        let mut combo = vec![self.spec.zero(); self.inserted + 1];
        combo[self.inserted] = self.spec.one();
        for i in 0..self.rows.len() {
            let factor = r[self.pivots[i]].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                r[j] = r[j].sub(&factor.mul(&self.rows[i][j]));
            }
            for (j, c) in self.combos[i].iter().enumerate() {
                combo[j] = combo[j].sub(&factor.mul(c));
            }
        }
        match r.iter().position(|c| !c.is_zero()) {
            None => {
                // v = -sum_j combo[j] * inserted_j  (combo has 1 on v itself)
                Some((0..self.inserted).map(|j| combo[j].neg()).collect())
            }
            Some(pivot) => {
                let inv = r[pivot].inv().expect("nonzero pivot");
                let row: Vec<FieldElement> = r.iter().map(|c| c.mul(&inv)).collect();
                let combo: Vec<FieldElement> = combo.iter().map(|c| c.mul(&inv)).collect();
                self.rows.push(row);
                self.pivots.push(pivot);
                self.combos.push(combo);
                self.inserted += 1;
                None
            }
        }
    }

    fn pad_combos(&mut self) {
        for c in &mut self.combos {
            while c.len() < self.inserted {
                c.push(self.spec.zero());
            }
        }
    }
}

/// Monic characteristic polynomial via the Danilevsky similarity
/// reduction, falling back to the deflated Krylov method whenever a
/// pivot vanishes.
pub fn char_poly(a: &Matrix) -> Poly {
    match char_poly_danilevsky(a) {
        Some(p) => p,
        None => char_poly_krylov(a),
    }
}

fn char_poly_danilevsky(a: &Matrix) -> Option<Poly> {
    let n = a.dim;
    let spec = &a.spec;
    if n == 1 {
        return Some(Poly::from_coeffs(
            spec,
            vec![a.rows[0][0].neg(), spec.one()],
        ));
    }
    let mut b = a.rows.clone();
    for k in 0..n - 1 {
        let pivot = b[k][k + 1].clone();
        if pivot.is_zero() {
            return None;
        }
        let pivot_inv = pivot.inv().unwrap();
        let c = b[k].clone();
        // column operations: make row k equal e_{k+1}
        for row in b.iter_mut() {
            let t = row[k + 1].clone();
            for (j, cj) in c.iter().enumerate() {
                if j == k + 1 || cj.is_zero() {
                    continue;
                }
                row[j] = row[j].sub(&cj.mul(&pivot_inv).mul(&t));
            }
            row[k + 1] = t.mul(&pivot_inv);
        }
        // matching row operation: row k+1 <- c . rows
        let new_row: Vec<FieldElement> = (0..n)
            .map(|j| {
                let mut acc = spec.zero();
                for (i, ci) in c.iter().enumerate() {
                    if !ci.is_zero() {
                        acc = acc.add(&ci.mul(&b[i][j]));
                    }
                }
                acc
            })
            .collect();
        b[k + 1] = new_row;
    }
    // companion form: char poly = x^n - sum_j last_row[j] x^j
    let mut coeffs: Vec<FieldElement> = b[n - 1].iter().map(|c| c.neg()).collect();
    coeffs.push(spec.one());
    Some(Poly::from_coeffs(spec, coeffs))
}

/// Deflated Krylov: build an ordered basis of Krylov chains; in that
/// basis the matrix is block upper triangular with companion diagonal
/// blocks, so the characteristic polynomial is the product of the block
/// polynomials.
fn char_poly_krylov(a: &Matrix) -> Poly {
    let n = a.dim;
    let spec = &a.spec;
    let mut span = LinearSpan::new(spec, n);
    let mut chain_vectors: Vec<Vec<FieldElement>> = Vec::new();
    let mut result = Poly::one(spec);
    let mut seed = 0usize;
    while span.inserted < n {
        // next seed vector outside the current span
        let v = loop {
            assert!(seed < n, "exhausted seed vectors before filling the space");
            let mut e = vec![spec.zero(); n];
            e[seed] = spec.one();
            seed += 1;
            if span.insert(&e).is_none() {
                break e;
            }
        };
        span.pad_combos();
        let offset = span.inserted - 1;
        chain_vectors.push(v);
        loop {
            let last = chain_vectors.last().unwrap();
            let w: Vec<FieldElement> = (0..n)
                .map(|i| {
                    let mut acc = spec.zero();
                    for j in 0..n {
                        acc = acc.add(&a.rows[i][j].mul(&last[j]));
                    }
                    acc
                })
                .collect();
            match span.insert(&w) {
                None => {
                    span.pad_combos();
                    chain_vectors.push(w);
                }
                Some(coords) => {
                    let d = span.inserted - offset;
                    let mut coeffs: Vec<FieldElement> = (0..d)
                        .map(|j| coords.get(offset + j).cloned().unwrap_or_else(|| spec.zero()).neg())
                        .collect();
                    coeffs.push(spec.one());
                    result = result.mul(&Poly::from_coeffs(spec, coeffs));
                    break;
                }
            }
        }
    }
    result
}

/// Minimal polynomial of `beta = scalar * x^l` in `GF(q)[x]/(f)` by
/// Krylov linear algebra: collect `1, beta, beta^2, ..` and stop at the
/// first linear dependency. For irreducible `f` with distinct conjugates
/// of `beta` this equals `char_poly(scalar * A^l)`.
pub fn min_poly_in_quotient(
    f: &IrreducibleInfo,
    scalar: &FieldElement,
    l: u64,
) -> Result<Poly> {
    let poly = f.poly();
    let spec = poly.spec();
    let m = f.m();
    let beta = modpow_x(l as u128, poly)?.mul_elt(scalar);
    let mut span = LinearSpan::new(spec, m);
    let mut cur = Poly::one(spec);
    loop {
        let vec: Vec<FieldElement> = (0..m).map(|i| cur.coeff(i)).collect();
        if let Some(coords) = span.insert(&vec) {
            let d = coords.len();
            let mut coeffs: Vec<FieldElement> = coords.into_iter().map(|c| c.neg()).collect();
            coeffs.push(spec.one());
            debug_assert_eq!(coeffs.len(), d + 1);
            return Ok(Poly::from_coeffs(spec, coeffs));
        }
        cur = mulmod(&cur, &beta, poly)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(q: u64) -> FieldSpec {
        FieldSpec::prime(q).unwrap()
    }

    #[test]
    fn companion_examples() {
        let f59 = f(59);
        let poly = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        let a = companion_matrix(&poly).unwrap();
        assert_eq!(a.entry(0, 0).to_u64(), Some(0));
        assert_eq!(a.entry(0, 1).to_u64(), Some(1));
        assert_eq!(*a.entry(1, 0), f59.from_i64(-1));
        assert_eq!(a.entry(1, 1).to_u64(), Some(11));

        let c = f59.from_u64(7);
        let lin = Poly::from_coeffs(&f59, vec![c.neg(), f59.one()]);
        let a1 = companion_matrix(&lin).unwrap();
        assert_eq!(*a1.entry(0, 0), c);

        // non-monic rejected
        let bad = poly.mul_elt(&f59.from_u64(2));
        assert!(companion_matrix(&bad).is_err());
    }

    #[test]
    fn matrix_pow_examples() {
        let f59 = f(59);
        let poly = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        let a = companion_matrix(&poly).unwrap();
        assert_eq!(matrix_pow(&a, 0), Matrix::identity(&f59, 2));
        // A^7 = -A
        let a7 = matrix_pow(&a, 7);
        assert_eq!(a7, a.scalar_mul(&f59.from_i64(-1)));

        let f257 = f(257);
        let phi5 = Poly::from_int_coeffs(&f257, &[1, 1, 1, 1, 1]);
        let b = matrix_pow(&companion_matrix(&phi5).unwrap(), 4);
        for j in 0..4 {
            assert_eq!(*b.entry(0, j), f257.from_i64(-1));
        }
        for i in 1..4 {
            for j in 0..4 {
                let want = if j + 1 == i { 1 } else { 0 };
                assert_eq!(b.entry(i, j).to_u64(), Some(want));
            }
        }
    }

    #[test]
    fn matrix_pow_is_multiplicative() {
        let f13 = f(13);
        let poly = Poly::from_int_coeffs(&f13, &[2, 0, 5, 1]);
        let a = companion_matrix(&poly).unwrap();
        for i in 0..6u64 {
            for j in 0..6u64 {
                assert_eq!(
                    matrix_pow(&a, i + j),
                    matrix_pow(&a, i).mul(&matrix_pow(&a, j))
                );
            }
        }
    }

    #[test]
    fn char_poly_of_companion_is_identity_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [5u64, 13, 59] {
            let spec = f(q);
            for _ in 0..40 {
                let deg = rng.gen_range(1..=6);
                let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(0..q as i64)).collect();
                coeffs.push(1);
                let poly = Poly::from_int_coeffs(&spec, &coeffs);
                let a = companion_matrix(&poly).unwrap();
                assert_eq!(char_poly(&a), poly);
            }
        }
    }

    #[test]
    fn char_poly_identity_matrix() {
        let f13 = f(13);
        let id = Matrix::identity(&f13, 2);
        // (x - 1)^2, via the Krylov fallback (Danilevsky pivot vanishes)
        assert_eq!(char_poly(&id), Poly::from_int_coeffs(&f13, &[1, -2, 1]));
        let id4 = Matrix::identity(&f13, 4);
        assert_eq!(
            char_poly(&id4),
            Poly::from_int_coeffs(&f13, &[1, -4, 6, -4, 1])
        );
    }

    #[test]
    fn char_poly_krylov_agrees_with_danilevsky() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f13 = f(13);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5);
            let rows: Vec<Vec<FieldElement>> = (0..n)
                .map(|_| (0..n).map(|_| f13.from_u64(rng.gen_range(0..13))).collect())
                .collect();
            let a = Matrix::from_rows(&f13, rows);
            let k = char_poly_krylov(&a);
            if let Some(d) = char_poly_danilevsky(&a) {
                assert_eq!(k, d);
            }
            assert_eq!(k.degree(), Some(n));
            assert!(k.is_monic());
        }
    }

    #[test]
    fn example1_pipeline_char_poly() {
        // 41 * A^7 = 41 * (-A) = 18A; det(xI - 41 A^7) = x^2 - 21x + 29
        let f59 = f(59);
        let poly = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        let a = companion_matrix(&poly).unwrap();
        let scaled = matrix_pow(&a, 7).scalar_mul(&f59.from_u64(41));
        assert_eq!(
            char_poly(&scaled),
            Poly::from_int_coeffs(&f59, &[29, -21, 1])
        );
    }

    #[test]
    fn min_poly_examples() {
        let f59 = f(59);
        let poly = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        let info = IrreducibleInfo::new(&poly).unwrap();
        // scalar = 1, l = 1: beta = x itself
        assert_eq!(
            min_poly_in_quotient(&info, &f59.one(), 1).unwrap(),
            poly
        );
        // the Example-1 parameters reproduce the paper's factor
        assert_eq!(
            min_poly_in_quotient(&info, &f59.from_u64(41), 7).unwrap(),
            Poly::from_int_coeffs(&f59, &[29, -21, 1])
        );
    }

    #[test]
    fn min_poly_matches_matrix_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let f13 = f(13);
        let mut done = 0;
        while done < 100 {
            let deg = rng.gen_range(1..=4);
            let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(0..13)).collect();
            coeffs.push(1);
            let poly = Poly::from_int_coeffs(&f13, &coeffs);
            if poly.coeff(0).is_zero() || !crate::polyring::is_irreducible(&poly) {
                continue;
            }
            let info = IrreducibleInfo::new(&poly).unwrap();
            let scalar = f13.from_u64(rng.gen_range(1..13));
            let l = rng.gen_range(0..12u64);
            let via_quotient = min_poly_in_quotient(&info, &scalar, l).unwrap();
            let via_matrix = char_poly(
                &matrix_pow(&companion_matrix(&poly).unwrap(), l).scalar_mul(&scalar),
            );
            // the minimal polynomial divides the characteristic polynomial;
            // they coincide when the conjugates are distinct
            if via_quotient.degree() == Some(deg as usize) {
                assert_eq!(via_quotient, via_matrix);
            } else {
                assert!(via_matrix.rem(&via_quotient).unwrap().is_zero());
            }
            done += 1;
        }
    }
}
