//! Exact cohomology of `Omega^p(t) (x) Omega^q(s)` on `P^n`.
//!
//! Write `E = Omega(1)`, the rank-`n` tautological subbundle of the trivial
//! bundle `V* (x) O` with quotient `O(1)`. Then `Omega^p(t) = Lambda^p E (x) O(t-p)`
//! and by Pieri
//!
//! ```text
//! Lambda^p E (x) Lambda^q E = sum_j S_{mu(j)} E,   max(0, p+q-n) <= j <= min(p, q)
//! ```
//!
//! where `mu(j)` has `j` rows of length two and `p+q-2j` rows of length one.
//! Each `S_mu E (x) O(c)` is an irreducible homogeneous bundle whose cohomology
//! is given by Borel-Weil-Bott for `GL_{n+1}`: form the weight `(c, mu_1, ..., mu_n)`,
//! add `rho = (n, ..., 1, 0)`; a repeated entry means everything vanishes,
//! otherwise sorting takes `l` transpositions and `H^l` is the irreducible
//! representation with highest weight `sorted - rho`.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::cohomology::CohomologyVector;

/// Cohomology of `S_mu(Omega(1)) (x) O(c)` on `P^n`. `mu` must be nonincreasing
/// with at most `n` entries (missing entries are zero).
pub fn schur_cohomology(n: u32, c: i64, mu: &[i64]) -> CohomologyVector {
    let n = n as usize;
    assert!(mu.len() <= n, "partition longer than the rank of Omega(1)");
    assert!(mu.windows(2).all(|w| w[0] >= w[1]), "weight is not dominant");

    let mut weight = Vec::with_capacity(n + 1);
    weight.push(c);
    weight.extend_from_slice(mu);
    weight.resize(n + 1, 0);
    let mut shifted: Vec<i64> = weight
        .iter()
        .enumerate()
        .map(|(i, w)| w + (n - i) as i64)
        .collect();

    // insertion sort, counting transpositions
    let mut length = 0usize;
    for i in 1..shifted.len() {
        let mut j = i;
        while j > 0 && shifted[j - 1] < shifted[j] {
            shifted.swap(j - 1, j);
            length += 1;
            j -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return CohomologyVector::zeros(n);
    }
    CohomologyVector::concentrated(n, length, weyl_dimension_shifted(&shifted))
}

/// Weyl dimension `prod_{i<j} (s_i - s_j) / (j - i)` for a strictly decreasing
/// `rho`-shifted weight `s`.
fn weyl_dimension_shifted(s: &[i64]) -> BigUint {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            num *= s[i] - s[j];
            den *= (j - i) as i64;
        }
    }
    let q = num / den;
    q.to_biguint().expect("Weyl dimension is positive")
}

/// Dimension of the `GL_r` representation `S_mu C^r`.
pub fn gl_dimension(r: usize, mu: &[i64]) -> BigUint {
    let mut w = mu.to_vec();
    w.resize(r, 0);
    let shifted: Vec<i64> = w
        .iter()
        .enumerate()
        .map(|(i, x)| x + (r - 1 - i) as i64)
        .collect();
    weyl_dimension_shifted(&shifted)
}

/// The Pieri components of `Lambda^p E (x) Lambda^q E` for `E` of rank `n`.
pub fn exterior_product_components(n: u32, p: u32, q: u32) -> Vec<Vec<i64>> {
    let lo = (p + q).saturating_sub(n);
    let hi = p.min(q);
    (lo..=hi)
        .map(|j| {
            let mut mu = vec![2i64; j as usize];
            mu.extend(std::iter::repeat_n(1, (p + q - 2 * j) as usize));
            mu
        })
        .collect()
}

/// Cohomology of `Omega^p(t) (x) Omega^q(s)` on `P^n`.
pub fn omega_product_cohomology(n: u32, p: u32, t: i64, q: u32, s: i64) -> CohomologyVector {
    assert!(p <= n && q <= n);
    let c = t + s - i64::from(p) - i64::from(q);
    let mut total = CohomologyVector::zeros(n as usize);
    for mu in exterior_product_components(n, p, q) {
        total += &schur_cohomology(n, c, &mu);
    }
    total
}

/// `Omega^p(t)` computed through Borel-Weil-Bott instead of the closed formula.
pub fn omega_cohomology(n: u32, p: u32, t: i64) -> CohomologyVector {
    let mu = vec![1i64; p as usize];
    schur_cohomology(n, t - i64::from(p), &mu)
}
