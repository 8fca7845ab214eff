//! Exact computer algebra over finite fields `GF(q)` with `q < 2^63`,
//! centered on splitting `f(x^n)` into irreducible factors when `f` is
//! irreducible and the pair `<f, n>` satisfies the reducible condition
//! `v_p(q-1) >= v_p(n) + v_p(e)` for every prime `p | n` (`e` the exponent
//! of `f`). One factor is produced as the minimal polynomial of
//! `b^s x^{-l}` in `GF(q)[x]/(f)` and the rest by the root-of-unity orbit
//! `a^{-mj} g(a^j x)`.
//!
//! The crate also carries the closed-form factorization of `x^{2^n p^t}-1`
//! when `q` generates `(Z/p^2)^*`, and an independent Cantor-Zassenhaus
//! reference factorizer used for verification.

pub mod cyclotomic;
pub mod error;
pub mod ffield;
pub mod linalg;
pub mod oracle;
pub mod polyring;
pub mod splitter;
pub mod textio;

pub use error::{Error, Result};

/// Default seed for every randomized search (non-residues, Pollard rho,
/// root extraction). All outputs are bit-reproducible given the seed.
pub const DEFAULT_SEED: u64 = 0x5EED;
