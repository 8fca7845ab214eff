//! Text formats for fields and polynomials.
//!
//! Polynomials print as `x^4 + 203*x^3 + 89*x^2 + 77*x + 211` with
//! coefficients as least nonnegative residues; extension-field
//! coefficients appear as `(a + b*y)` with `y` the extension generator.
//! Fields print as `GF(p)` or `GF(p^u; modpoly)`. The parser accepts the
//! printed forms (plus `-` signs and omitted `*`), so print/parse
//! round-trips bit-exactly.

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, FieldSpec};
use crate::polyring::Poly;

pub fn print_poly(p: &Poly) -> String {
    let spec = p.spec();
    let deg = match p.degree() {
        None => return "0".to_string(),
        Some(d) => d,
    };
    let mut parts: Vec<String> = Vec::new();
    for i in (0..=deg).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let coeff_str = if c.is_one() && i > 0 {
            None
        } else {
            Some(format!("{c}"))
        };
        let var_str = match i {
            0 => None,
            1 => Some("x".to_string()),
            _ => Some(format!("x^{i}")),
        };
        parts.push(match (coeff_str, var_str) {
            (Some(c), Some(v)) => format!("{c}*{v}"),
            (Some(c), None) => c,
            (None, Some(v)) => v,
            (None, None) => unreachable!(),
        });
    }
    let _ = spec;
    parts.join(" + ")
}

pub fn print_field(spec: &FieldSpec) -> String {
    match spec.modulus() {
        None => format!("GF({})", spec.characteristic()),
        Some(modulus) => {
            let prime = FieldSpec::prime(spec.characteristic()).expect("valid characteristic");
            let coeffs: Vec<FieldElement> =
                modulus.iter().map(|&c| prime.from_u64(c)).collect();
            let modpoly = Poly::from_coeffs(&prime, coeffs);
            format!(
                "GF({}^{}; {})",
                spec.characteristic(),
                spec.ext_degree(),
                print_poly(&modpoly)
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    LPar,
    RPar,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' | '\u{2212}' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' | '\u{00d7}' | '\u{00b7}' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                toks.push(Tok::LPar);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RPar);
            }
            'x' | 'y' | 'X' | 'Y' => {
                chars.next();
                toks.push(Tok::Var(c.to_ascii_lowercase()));
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(&d) = chars.peek() {
                    match d.to_digit(10) {
                        None => break,
                        Some(d) => {
                            v = v
                                .checked_mul(10)
                                .and_then(|v| v.checked_add(d as u64))
                                .ok_or_else(|| {
                                    Error::Parse("integer literal overflows u64".into())
                                })?;
                            chars.next();
                        }
                    }
                }
                toks.push(Tok::Int(v));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    spec: FieldSpec,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_int(&mut self) -> Result<u64> {
        match self.next() {
            Some(&Tok::Int(v)) => Ok(v),
            other => Err(Error::Parse(format!("expected integer, found {other:?}"))),
        }
    }

    /// Sum of signed terms in the variable `var`, stopping at `)` or end.
    fn parse_sum(&mut self, var: char) -> Result<Poly> {
        let mut acc = Poly::zero(&self.spec);
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    negative = true;
                }
                Some(Tok::RPar) | None if !first => break,
                _ if first => {}
                other => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' between terms, found {other:?}"
                    )));
                }
            }
            if first && matches!(self.peek(), Some(Tok::RPar) | None) && !negative {
                return Err(Error::Parse("empty polynomial expression".into()));
            }
            let term = self.parse_term(var)?;
            acc = if negative { acc.sub(&term) } else { acc.add(&term) };
            first = false;
            if matches!(self.peek(), Some(Tok::RPar) | None) {
                break;
            }
        }
        Ok(acc)
    }

    /// Product of factors: integers, powers of `var`, and (for `var = x`
    /// over an extension field) parenthesized coefficients in `y`.
    fn parse_term(&mut self, var: char) -> Result<Poly> {
        let mut coeff = self.spec.one();
        let mut degree: usize = 0;
        let mut any = false;
        loop {
            match self.peek() {
                Some(&Tok::Int(v)) => {
                    self.pos += 1;
                    coeff = coeff.mul(&self.spec.from_u64(v % self.spec.characteristic()));
                    any = true;
                }
                Some(&Tok::Var(v)) if v == var => {
                    self.pos += 1;
                    let exp = if matches!(self.peek(), Some(Tok::Caret)) {
                        self.pos += 1;
                        self.expect_int()?
                    } else {
                        1
                    };
                    let exp = usize::try_from(exp).map_err(|_| {
                        Error::Parse(format!("exponent {exp} is too large"))
                    })?;
                    degree = degree.checked_add(exp).ok_or_else(|| {
                        Error::Parse("polynomial degree overflows usize".into())
                    })?;
                    any = true;
                }
                Some(&Tok::Var(v)) => {
                    return Err(Error::Parse(format!(
                        "unexpected variable '{v}' (expected '{var}')"
                    )));
                }
                Some(Tok::LPar) if var == 'x' => {
                    self.pos += 1;
                    coeff = coeff.mul(&self.parse_coefficient()?);
                    match self.next() {
                        Some(Tok::RPar) => {}
                        other => {
                            return Err(Error::Parse(format!(
                                "expected ')', found {other:?}"
                            )));
                        }
                    }
                    any = true;
                }
                _ => break,
            }
            // optional '*' between factors
            if matches!(self.peek(), Some(Tok::Star)) {
                self.pos += 1;
            }
        }
        if !any {
            return Err(Error::Parse(format!(
                "expected a term, found {:?}",
                self.peek()
            )));
        }
        Ok(Poly::monomial(&self.spec, coeff, degree))
    }

    /// A parenthesized extension-field coefficient `(a + b*y + ...)`.
    fn parse_coefficient(&mut self) -> Result<FieldElement> {
        let p = self.spec.characteristic();
        let prime = FieldSpec::prime(p)?;
        let mut inner = Parser {
            toks: self.toks,
            pos: self.pos,
            spec: prime,
        };
        let poly = inner.parse_sum('y')?;
        self.pos = inner.pos;
        let coeffs: Vec<u64> = (0..=poly.degree().unwrap_or(0))
            .map(|i| poly.coeff(i).to_u64().expect("prime-field coefficient"))
            .collect();
        if poly.degree().unwrap_or(0) >= self.spec.ext_degree() as usize
            && self.spec.ext_degree() > 1
        {
            return Err(Error::Parse(format!(
                "coefficient degree {} exceeds extension degree {}",
                poly.degree().unwrap_or(0),
                self.spec.ext_degree() - 1
            )));
        }
        if !poly.is_constant() && self.spec.is_prime_field() {
            return Err(Error::Parse(
                "generator 'y' is only meaningful over an extension field".into(),
            ));
        }
        Ok(self.spec.from_coeffs(&coeffs))
    }
}

pub fn parse_poly(s: &str, spec: &FieldSpec) -> Result<Poly> {
    let toks = lex(s)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        spec: spec.clone(),
    };
    let poly = parser.parse_sum('x')?;
    if parser.pos != toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after polynomial: {:?}",
            &toks[parser.pos..]
        )));
    }
    Ok(poly)
}

/// Parses `GF(p)`, `GF(p^u; modpoly)` or `GF(p^u)` (lexicographically
/// smallest modulus). The modulus polynomial may be written in `x` or `y`.
pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let t = s.trim();
    let inner = t
        .strip_prefix("GF(")
        .or_else(|| t.strip_prefix("gf("))
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("field spec must look like GF(..): {s:?}")))?;
    let (base, modpoly) = match inner.split_once(';') {
        None => (inner.trim(), None),
        Some((b, m)) => (b.trim(), Some(m.trim())),
    };
    let (p_str, u_str) = match base.split_once('^') {
        None => (base, None),
        Some((p, u)) => (p.trim(), Some(u.trim())),
    };
    let p: u64 = p_str
        .parse()
        .map_err(|_| Error::Parse(format!("invalid characteristic {p_str:?}")))?;
    let u: u32 = match u_str {
        None => 1,
        Some(u) => u
            .parse()
            .map_err(|_| Error::Parse(format!("invalid extension degree {u:?}")))?,
    };
    match modpoly {
        None => {
            if u == 1 {
                FieldSpec::prime(p)
            } else {
                FieldSpec::canonical_extension(p, u)
            }
        }
        Some(text) => {
            let prime = FieldSpec::prime(p)?;
            // the modulus may use either variable name
            let text = text.replace(['y', 'Y'], "x");
            let poly = parse_poly(&text, &prime)?;
            let coeffs: Vec<u64> = (0..=poly.degree().unwrap_or(0))
                .map(|i| poly.coeff(i).to_u64().expect("prime-field coefficient"))
                .collect();
            if poly.degree() != Some(u as usize) {
                return Err(Error::Parse(format!(
                    "modulus degree {:?} does not match extension degree {u}",
                    poly.degree()
                )));
            }
            FieldSpec::extension(p, &coeffs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> FieldSpec {
        FieldSpec::prime(q).unwrap()
    }

    #[test]
    fn prints_reference_shapes() {
        let f257 = f(257);
        let p = Poly::from_int_coeffs(&f257, &[211, 77, 89, 203, 1]);
        assert_eq!(print_poly(&p), "x^4 + 203*x^3 + 89*x^2 + 77*x + 211");
        assert_eq!(print_poly(&Poly::zero(&f257)), "0");
        assert_eq!(print_poly(&Poly::one(&f257)), "1");
        assert_eq!(print_poly(&Poly::x(&f257)), "x");

        let f59 = f(59);
        let p = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        assert_eq!(print_poly(&p), "x^2 + 48*x + 1");
    }

    #[test]
    fn parses_signed_and_starless_input() {
        let f59 = f(59);
        let want = Poly::from_int_coeffs(&f59, &[1, -11, 1]);
        for text in [
            "x^2 - 11*x + 1",
            "x^2 + 48*x + 1",
            "x^2-11x+1",
            " x ^ 2 - 11 * x + 1 ",
            "1 - 11*x + x^2",
            "x*x - 11x + 1",
        ] {
            assert_eq!(parse_poly(text, &f59).unwrap(), want, "text: {text}");
        }
    }

    #[test]
    fn roundtrips_bit_exactly() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for q in [2u64, 5, 13, 59, 257] {
            let spec = f(q);
            for _ in 0..50 {
                let deg = rng.gen_range(0..8);
                let coeffs: Vec<i64> =
                    (0..=deg).map(|_| rng.gen_range(0..q as i64)).collect();
                let p = Poly::from_int_coeffs(&spec, &coeffs);
                assert_eq!(parse_poly(&print_poly(&p), &spec).unwrap(), p);
            }
        }
    }

    #[test]
    fn extension_coefficients() {
        let f49 = FieldSpec::extension(7, &[1, 0, 1]).unwrap(); // y^2 + 1
        let c = f49.from_coeffs(&[3, 5]);
        let p = Poly::from_coeffs(&f49, vec![c.clone(), f49.one()]);
        assert_eq!(print_poly(&p), "x + (3 + 5*y)");
        assert_eq!(parse_poly("x + (3 + 5*y)", &f49).unwrap(), p);
        assert_eq!(parse_poly("(3 + 5y) + x", &f49).unwrap(), p);
        let q = parse_poly("(2 + y)*x^2 - (1 + 6*y)", &f49).unwrap();
        assert_eq!(q.coeff(2), f49.from_coeffs(&[2, 1]));
        assert_eq!(q.coeff(0), f49.from_coeffs(&[1, 6]).neg());
        assert_eq!(parse_poly(&print_poly(&q), &f49).unwrap(), q);
    }

    #[test]
    fn field_roundtrip() {
        assert_eq!(parse_field("GF(59)").unwrap(), f(59));
        assert_eq!(print_field(&f(59)), "GF(59)");
        let f49 = FieldSpec::extension(7, &[1, 0, 1]).unwrap();
        let text = print_field(&f49);
        assert_eq!(text, "GF(7^2; x^2 + 1)");
        assert_eq!(parse_field(&text).unwrap(), f49);
        assert_eq!(parse_field("GF(7^2; y^2 + 1)").unwrap(), f49);
        assert!(parse_field("GF(6)").is_err());
        assert!(parse_field("GF(7^2; x^2 - 1)").is_err());
        assert!(parse_field("Z/5").is_err());
        // GF(p^u) without a modulus picks the canonical one
        let canon = parse_field("GF(7^2)").unwrap();
        assert_eq!(canon, FieldSpec::canonical_extension(7, 2).unwrap());
    }

    #[test]
    fn rejects_malformed_polynomials() {
        let f13 = f(13);
        for text in ["", "x +", "x^", "3 ** x", "x + z", "(1 + y)", "x^-2"] {
            assert!(parse_poly(text, &f13).is_err(), "text: {text}");
        }
    }
}
