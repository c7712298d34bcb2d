//! Exact integer combinatorics.
//!
//! All counts are arbitrary-precision, so no operation here can overflow.
//! `binom` takes an unsigned upper argument: Bott dimensions are evaluated
//! inside their vanishing windows, and a negative upper argument would mean a
//! window was computed wrongly, so the type rules it out at the call site.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `binom(a, b)`, zero when `b < 0` or `b > a`.
pub fn binom(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Upper argument computed in signed arithmetic; panics if it is negative.
pub(crate) fn binom_i(a: i64, b: i64) -> BigUint {
    let a = u64::try_from(a).unwrap_or_else(|_| panic!("binomial with negative upper argument {a}"));
    binom(a, b)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Rank `binom(n_r + 1, j)` of the j-th term of the Koszul complex on `P^{n_r}`.
pub fn koszul_rank(n_r: u32, j: u32) -> BigUint {
    binom(u64::from(n_r) + 1, i64::from(j))
}

/// `d! / prod n_i!` with `d = sum n_i`.
pub fn multinomial(n: &[u32]) -> BigUint {
    let d: u64 = n.iter().map(|&x| u64::from(x)).sum();
    let den = n
        .iter()
        .fold(BigUint::one(), |acc, &x| acc * factorial(u64::from(x)));
    factorial(d) / den
}

/// Degree of `P^{n_1} x ... x P^{n_s}` embedded by `O(k_1, ..., k_s)`:
/// the top self-intersection `(k_1 h_1 + ... + k_s h_s)^d` with `d = sum n_i`,
/// which equals `prod k_i^{n_i} * d! / prod n_i!`.
pub fn multinomial_degree(n: &[u32], k: &[u32]) -> Result<BigUint> {
    if n.is_empty() {
        return Err(Error::InvalidVariety("no factors".into()));
    }
    if n.len() != k.len() {
        return Err(Error::InvalidVariety(format!(
            "{} dimensions but {} degrees",
            n.len(),
            k.len()
        )));
    }
    if n.iter().chain(k).any(|&x| x == 0) {
        return Err(Error::InvalidVariety(
            "dimensions and degrees must be >= 1".into(),
        ));
    }
    let scale = n
        .iter()
        .zip(k)
        .fold(BigUint::one(), |acc, (&ni, &ki)| acc * BigUint::from(ki).pow(ni));
    Ok(scale * multinomial(n))
}
